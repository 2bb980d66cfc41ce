#include "seashell/trig_kernel.hpp"

#include <cmath>
#include <numbers>

#include "seashell/errors.hpp"

/*
 * Closed-form products of cosine / hyperbolic-cosine atoms.
 *
 *   int_0^x cos(a s) cos(b s) ds = x/2 [ sinc((a-b)x) + sinc((a+b)x) ]
 *   int_0^x cosh(a s) cosh(b s) ds = x/2 [ sinhc((a-b)x) + sinhc((a+b)x) ]
 *   int_0^x cos(a s) cosh(b s) ds = [ a sin(ax) cosh(bx) + b cos(ax) sinh(bx) ] / (a^2 + b^2)
 *
 * sinc/sinhc switch to their Taylor series below |z| = 1e-4, which keeps the
 * forms stable down to coincident frequencies (|a -+ b| <= 1e-6 is well inside
 * the series regime for x <= pi).
 */

namespace seashell {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = kPi / 2.0;
constexpr double kSeriesCut = 1e-4;

double sinc(double z) {
    if (std::abs(z) < kSeriesCut) {
        const double z2 = z * z;
        return 1.0 - z2 / 6.0 + z2 * z2 / 120.0 - z2 * z2 * z2 / 5040.0;
    }
    return std::sin(z) / z;
}

double sinhc(double z) {
    if (std::abs(z) < kSeriesCut) {
        const double z2 = z * z;
        return 1.0 + z2 / 6.0 + z2 * z2 / 120.0 + z2 * z2 * z2 / 5040.0;
    }
    return std::sinh(z) / z;
}

} // namespace

double cos_product_integral(double a, double b, double x) {
    return 0.5 * x * (sinc((a - b) * x) + sinc((a + b) * x));
}

double cosh_product_integral(double a, double b, double x) {
    return 0.5 * x * (sinhc((a - b) * x) + sinhc((a + b) * x));
}

double cos_cosh_product_integral(double a, double b, double x) {
    const double d = a * a + b * b;
    if (d < 1e-12) {
        // cos(as) cosh(bs) = 1 + (b^2 - a^2) s^2/2 + O(s^4)
        return x + (b * b - a * a) * x * x * x / 6.0;
    }
    return (a * std::sin(a * x) * std::cosh(b * x) +
            b * std::cos(a * x) * std::sinh(b * x)) / d;
}

double atom_inner_product(const TrigAtom& u, const TrigAtom& v, double x) {
    const double amp = u.amplitude * v.amplitude;
    if (u.branch == Branch::circular && v.branch == Branch::circular)
        return amp * cos_product_integral(u.freq, v.freq, x);
    if (u.branch == Branch::hyperbolic && v.branch == Branch::hyperbolic)
        return amp * cosh_product_integral(u.freq, v.freq, x);
    const TrigAtom& circ = (u.branch == Branch::circular) ? u : v;
    const TrigAtom& hyp = (u.branch == Branch::circular) ? v : u;
    return amp * cos_cosh_product_integral(circ.freq, hyp.freq, x);
}

BasisSet build_basis(const SpectralData& data) {
    data.check();
    const std::size_t n_max = data.size() - 1;
    BasisSet basis;
    basis.n_max = n_max;
    basis.atoms_a.resize(2 * n_max + 2);
    basis.atoms_b.resize(2 * n_max + 2);

    for (std::size_t i = 0; i <= n_max; ++i) {
        const double lam = data.lambda[i];
        if (lam < 0.0 && i > 0)
            throw ValidationError("negative eigenvalue beyond index 0 "
                                  "is outside the asymptotic class");
        const Branch br = lam < 0.0 ? Branch::hyperbolic : Branch::circular;
        const double rho = std::sqrt(std::abs(lam));
        const double amp = 1.0 / std::sqrt(data.alpha[i]);
        basis.atoms_a[i] = {amp, rho, br};
        basis.atoms_b[i] = {-amp, rho, br};
    }
    // Amplitudes written as 1/sqrt(pi/2), 1/sqrt(pi) so that atoms built from
    // trivial stored pairs match them bit for bit.
    const double band_amp = 1.0 / std::sqrt(kHalfPi);
    for (std::size_t i = n_max + 1; i <= 2 * n_max; ++i) {
        const double freq = static_cast<double>(i - n_max);
        basis.atoms_a[i] = {band_amp, freq, Branch::circular};
        basis.atoms_b[i] = basis.atoms_a[i];
    }
    basis.atoms_a[2 * n_max + 1] = {1.0 / std::sqrt(kPi), 0.0, Branch::circular};
    basis.atoms_b[2 * n_max + 1] = basis.atoms_a[2 * n_max + 1];
    return basis;
}

KernelFN::KernelFN(const SpectralData& data) : basis_(build_basis(data)) {}

double KernelFN::operator()(double x, double y) const {
    // -F = sum A_i B_i; accumulate the finite sum pairwise so every trivial
    // (data, counterpart) pair contributes an exact zero.
    const std::size_t n_max = basis_.n_max;
    double f = 0.0;
    for (std::size_t n = 0; n <= n_max; ++n) {
        const std::size_t mate = (n == 0) ? 2 * n_max + 1 : n_max + n;
        f -= basis_.atoms_a[n](x) * basis_.atoms_b[n](y) +
             basis_.atoms_a[mate](x) * basis_.atoms_b[mate](y);
    }
    return f;
}

} // namespace seashell
