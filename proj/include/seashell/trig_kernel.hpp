#ifndef SEASHELL_TRIG_KERNEL_HPP
#define SEASHELL_TRIG_KERNEL_HPP

#include <cmath>
#include <cstddef>
#include <vector>

#include "seashell/spectral_data.hpp"

namespace seashell {

enum class Branch { circular, hyperbolic };

// amplitude * cos(freq t)  or  amplitude * cosh(freq t).
// The hyperbolic branch only arises from lambda < 0 with freq = |lambda|^{1/2}.
struct TrigAtom {
    double amplitude = 0.0;
    double freq = 0.0;
    Branch branch = Branch::circular;

    double operator()(double t) const {
        return amplitude * (branch == Branch::circular ? std::cos(freq * t)
                                                       : std::cosh(freq * t));
    }
};

// int_0^x cos(a s) cos(b s) ds, sinc form, stable for |a -+ b| small.
double cos_product_integral(double a, double b, double x);
// int_0^x cosh(a s) cosh(b s) ds.
double cosh_product_integral(double a, double b, double x);
// int_0^x cos(a s) cosh(b s) ds.
double cos_cosh_product_integral(double a, double b, double x);

// <u, v>_{L^2[0,x]} in closed form.
double atom_inner_product(const TrigAtom& u, const TrigAtom& v, double x);

// The 2N+2 atoms building the degenerate kernel k_N(t,s) = sum A_i(t) B_i(s):
//   i = 0..N:      A_i = -B_i = alpha_i^{-1/2} cos(lambda_i^{1/2} s)
//   i = N+1..2N:   A_i =  B_i = (2/pi)^{1/2} cos((i-N) s)
//   i = 2N+1:      A_i =  B_i = pi^{-1/2}
struct BasisSet {
    std::size_t n_max = 0; // prefix indices 0..n_max
    std::vector<TrigAtom> atoms_a;
    std::vector<TrigAtom> atoms_b;

    std::size_t size() const { return atoms_a.size(); } // 2 n_max + 2
};

BasisSet build_basis(const SpectralData& data);

// The data kernel F_N. Evaluation pairs each data term with its trivial
// counterpart (the bracketed form of the finite sum), so trivial pairs cancel
// exactly and F vanishes identically on all-trivial data.
class KernelFN {
public:
    explicit KernelFN(const SpectralData& data);

    double operator()(double x, double y) const; // F_N(x,y), symmetric
    double k(double t, double s) const { return -(*this)(t, s); } // k_N = -F_N

    const BasisSet& basis() const { return basis_; }
    std::size_t n_max() const { return basis_.n_max; }

private:
    BasisSet basis_;
};

} // namespace seashell

#endif
