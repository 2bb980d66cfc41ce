#ifndef SEASHELL_FORWARD_ORACLE_HPP
#define SEASHELL_FORWARD_ORACLE_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "seashell/spectral_data.hpp"

namespace seashell {

enum class Builtin { zero, constant, bump, step, hat };

// A potential on [0,pi] plus Robin constants. Either one of the built-ins or
// grid samples with linear interpolation (uniform nodes including both ends).
struct PotentialSpec {
    Builtin kind = Builtin::zero;
    double constant = 0.0;        // value for Builtin::constant
    std::vector<double> samples;  // non-empty => sampled potential
    double h = 0.0;
    double H = 0.0;

    double q(double x) const;
    double q_min() const;
    double q_max() const;
    // Points where q or q' jumps; integrators restart here.
    std::vector<double> breakpoints() const;

    static PotentialSpec builtin(Builtin kind, double c = 0.0,
                                 double h = 0.0, double H = 0.0);
    static PotentialSpec sampled(std::vector<double> samples,
                                 double h = 0.0, double H = 0.0);
};

// First `count` eigenvalues of -psi'' + q psi = lambda psi with
// psi'(0) = h psi(0), psi'(pi) = -H psi(pi), by Prufer-phase shooting.
// Searches for distinct indices run in parallel.
std::vector<double> eigenvalues(const PotentialSpec& spec, std::size_t count,
                                int threads = 0);

// alpha_n = int_0^pi phi(x, lambda_n)^2 dx with phi(0) = 1, phi'(0) = h.
std::vector<double> norming_constants(const PotentialSpec& spec,
                                      const std::vector<double>& lambdas,
                                      int threads = 0);

// e_N = sqrt( sum (lambda_i^{1/2} - mu_i^{1/2})^2 ), signed roots for
// negative entries. Both lists must be sorted and of equal length.
double spectral_error(const std::vector<double>& a,
                      const std::vector<double>& b);

SpectralData make_spectral_data(const PotentialSpec& spec, std::size_t count,
                                int threads = 0);

} // namespace seashell

#endif
