#ifndef SEASHELL_SPECTRAL_DATA_HPP
#define SEASHELL_SPECTRAL_DATA_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace seashell {

// Eigenvalue / norming-constant data for the Robin problem on [0,pi].
// Files store only the nontrivial prefix; entries beyond the stored length
// follow the implicit tail rule lambda_n = n^2, alpha_n = pi/2.
struct SpectralData {
    std::vector<double> lambda; // strictly increasing
    std::vector<double> alpha;  // strictly positive, same length
    std::optional<double> M;          // optional l^2 bound on the remainders
    std::optional<double> omega_hint; // caller-declared omega, if known

    std::size_t size() const { return lambda.size(); }

    // Throws ValidationError if the type invariants fail.
    void check() const;

    // Stored value or trivial tail.
    double lambda_at(std::size_t n) const;
    double alpha_at(std::size_t n) const;

    static double trivial_lambda(std::size_t n);
    static double trivial_alpha(std::size_t n); // pi for n = 0, pi/2 otherwise

    // Zero-potential data of the given stored length.
    static SpectralData trivial(std::size_t len);
};

// lambda_n^{1/2} = n + omega/(pi(n+1)) + kappa_n/(n+1)
// 1/alpha_n      = 2/pi + kappa~_n/(n+1)
struct AsymptoticDecomposition {
    double omega = 0.0;
    std::vector<double> kappa;
    std::vector<double> kappa_tilde;
    std::optional<double> M;

    double kappa_norm() const;       // l^2 over the stored prefix
    double kappa_tilde_norm() const;
};

struct MembershipReport {
    bool in_omega = false;    // consistent with the asymptotic form (any finite data is)
    bool in_omega0m = false;  // omega = 0 decomposition exists and prefix norms <= M
    std::size_t finite_rank_n = 0; // smallest N with trivial stored tail beyond N
};

MembershipReport validate(const SpectralData& data,
                          std::optional<double> M = std::nullopt,
                          double trivial_tol = 0.0);

// Splits the data against the asymptotic form for a given omega. Rejects any
// negative eigenvalue: kappa is kept real here, negative lambda_0 is handled
// by the hyperbolic kernel branch instead.
AsymptoticDecomposition decompose(const SpectralData& data, double omega);

// varpi = lambda_{N-1} - (N-1)^2 for stored length N. Reconstruction runs on
// the shifted data {lambda_n - varpi} and adds varpi back to q.
double estimate_omega(const SpectralData& data);

// Indexed access to (lambda_n, alpha_n) for n >= 1, as a promise-bounded stream.
using PairStream = std::function<std::pair<double, double>(std::size_t)>;

// Finite-rank detection: scans pairs n = 1, 2, ... and stops after n_tilde
// consecutive trivial ones, returning N = n - ctr + 1. The stream must satisfy
// the promise that n_tilde consecutive trivial pairs imply an all-trivial tail;
// read_cap turns a violated promise into an error.
std::size_t detect_finite_rank(const PairStream& stream, std::size_t n_tilde,
                               double trivial_tol = 0.0,
                               std::size_t read_cap = 1000000);
std::size_t detect_finite_rank(const SpectralData& data, std::size_t n_tilde,
                               double trivial_tol = 0.0);

} // namespace seashell

#endif
