#include "seashell/spectral_data.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "seashell/errors.hpp"

namespace seashell {

namespace {
constexpr double kPi = std::numbers::pi;

bool pair_is_trivial(double lam, double alp, std::size_t n, double tol) {
    const double lam0 = SpectralData::trivial_lambda(n);
    const double alp0 = SpectralData::trivial_alpha(n);
    if (tol == 0.0) return lam == lam0 && alp == alp0;
    return std::abs(lam - lam0) <= tol && std::abs(alp - alp0) <= tol;
}
} // namespace

void SpectralData::check() const {
    if (lambda.size() != alpha.size())
        throw ValidationError("lambda and alpha must have equal length");
    if (lambda.empty())
        throw ValidationError("spectral data must store at least one pair");
    for (std::size_t n = 0; n < alpha.size(); ++n) {
        if (!(alpha[n] > 0.0))
            throw ValidationError("norming constant alpha_" + std::to_string(n) +
                                  " must be positive");
        if (!std::isfinite(lambda[n]) || !std::isfinite(alpha[n]))
            throw ValidationError("spectral data must be finite");
        if (n > 0 && !(lambda[n - 1] < lambda[n]))
            throw ValidationError("eigenvalues must be strictly increasing");
    }
}

double SpectralData::trivial_lambda(std::size_t n) {
    return static_cast<double>(n) * static_cast<double>(n);
}

double SpectralData::trivial_alpha(std::size_t n) {
    return n == 0 ? kPi : kPi / 2.0;
}

double SpectralData::lambda_at(std::size_t n) const {
    return n < lambda.size() ? lambda[n] : trivial_lambda(n);
}

double SpectralData::alpha_at(std::size_t n) const {
    return n < alpha.size() ? alpha[n] : trivial_alpha(n);
}

SpectralData SpectralData::trivial(std::size_t len) {
    SpectralData d;
    d.lambda.reserve(len);
    d.alpha.reserve(len);
    for (std::size_t n = 0; n < len; ++n) {
        d.lambda.push_back(trivial_lambda(n));
        d.alpha.push_back(trivial_alpha(n));
    }
    return d;
}

double AsymptoticDecomposition::kappa_norm() const {
    double s = 0.0;
    for (double k : kappa) s += k * k;
    return std::sqrt(s);
}

double AsymptoticDecomposition::kappa_tilde_norm() const {
    double s = 0.0;
    for (double k : kappa_tilde) s += k * k;
    return std::sqrt(s);
}

AsymptoticDecomposition decompose(const SpectralData& data, double omega) {
    data.check();
    AsymptoticDecomposition out;
    out.omega = omega;
    out.M = data.M;
    out.kappa.reserve(data.size());
    out.kappa_tilde.reserve(data.size());
    for (std::size_t n = 0; n < data.size(); ++n) {
        if (data.lambda[n] < 0.0)
            throw ValidationError("spectrum below ground state asymptotics: "
                                  "lambda_" + std::to_string(n) + " < 0");
        const double np1 = static_cast<double>(n) + 1.0;
        out.kappa.push_back(np1 * (std::sqrt(data.lambda[n]) - static_cast<double>(n)) -
                            omega / kPi);
        out.kappa_tilde.push_back(np1 * (1.0 / data.alpha[n] - 2.0 / kPi));
    }
    return out;
}

double estimate_omega(const SpectralData& data) {
    data.check();
    const std::size_t n = data.size() - 1;
    return data.lambda[n] - static_cast<double>(n) * static_cast<double>(n);
}

MembershipReport validate(const SpectralData& data, std::optional<double> M,
                          double trivial_tol) {
    data.check();
    MembershipReport rep;
    rep.in_omega = true; // any finite prefix embeds in the asymptotic class

    std::optional<double> bound = M ? M : data.M;
    rep.in_omega0m = false;
    if (bound) {
        try {
            const AsymptoticDecomposition d = decompose(data, 0.0);
            rep.in_omega0m = d.kappa_norm() <= *bound &&
                             d.kappa_tilde_norm() <= *bound;
        } catch (const ValidationError&) {
            rep.in_omega0m = false; // negative eigenvalue: no real omega = 0 split
        }
    }

    std::size_t n = data.size();
    while (n > 0 && pair_is_trivial(data.lambda[n - 1], data.alpha[n - 1], n - 1,
                                    trivial_tol))
        --n;
    rep.finite_rank_n = n == 0 ? 0 : n - 1;
    return rep;
}

std::size_t detect_finite_rank(const PairStream& stream, std::size_t n_tilde,
                               double trivial_tol, std::size_t read_cap) {
    if (n_tilde == 0) throw ValidationError("n_tilde must be positive");
    std::size_t ctr = 0;
    std::size_t n = 1;
    while (true) {
        if (n > read_cap)
            throw NumericalError("finite-rank detection exceeded the read cap: "
                                 "input violates the trivial-tail promise");
        const auto [lam, alp] = stream(n);
        if (pair_is_trivial(lam, alp, n, trivial_tol))
            ++ctr;
        else
            ctr = 0;
        if (ctr == n_tilde) break;
        ++n;
    }
    return n - ctr + 1;
}

std::size_t detect_finite_rank(const SpectralData& data, std::size_t n_tilde,
                               double trivial_tol) {
    data.check();
    return detect_finite_rank(
        [&data](std::size_t n) {
            return std::pair<double, double>(data.lambda_at(n), data.alpha_at(n));
        },
        n_tilde, trivial_tol);
}

} // namespace seashell
