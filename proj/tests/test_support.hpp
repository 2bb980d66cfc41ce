#ifndef SEASHELL_TEST_SUPPORT_HPP
#define SEASHELL_TEST_SUPPORT_HPP

#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <vector>

#include "seashell/spectral_data.hpp"

namespace test_support {

constexpr double kPi = std::numbers::pi;

// Adaptive Simpson quadrature; independent oracle for the closed-form
// integrals. Tolerance is absolute.
inline double adaptive_simpson(const std::function<double(double)>& f, double a,
                               double b, double tol = 1e-12, int depth = 24) {
    auto simpson = [&](double lo, double hi) {
        return (hi - lo) / 6.0 * (f(lo) + 4.0 * f(0.5 * (lo + hi)) + f(hi));
    };
    std::function<double(double, double, double, int)> rec =
        [&](double lo, double hi, double whole, int d) -> double {
        const double mid = 0.5 * (lo + hi);
        const double left = simpson(lo, mid);
        const double right = simpson(mid, hi);
        if (d <= 0 || std::abs(left + right - whole) < 15.0 * tol)
            return left + right + (left + right - whole) / 15.0;
        return rec(lo, mid, left, d - 1) + rec(mid, hi, right, d - 1);
    };
    return rec(a, b, simpson(a, b), depth);
}

// Single perturbed norming constant alpha_{n0} = pi/(pi+beta); the data kernel
// is then beta_hat cos(n0 x) cos(n0 y) with beta_hat = (pi+beta-2)/pi, and
//   K(x,y) = -beta_hat cos(n0 x) cos(n0 y) / (1 + beta_hat I(x)),
//   I(x) = x/2 + sin(2 n0 x)/(4 n0).
struct RankOne {
    std::size_t n0 = 1;
    double beta = 2.0;

    double beta_hat() const { return (kPi + beta - 2.0) / kPi; }

    seashell::SpectralData data(std::size_t len = 0) const {
        const std::size_t n = std::max(len, n0 + 1);
        seashell::SpectralData d = seashell::SpectralData::trivial(n);
        d.alpha[n0] = kPi / (kPi + beta);
        return d;
    }

    double big_i(double x) const {
        const double w = static_cast<double>(n0);
        return 0.5 * x + std::sin(2.0 * w * x) / (4.0 * w);
    }

    double k(double x, double y) const {
        const double w = static_cast<double>(n0);
        const double b = beta_hat();
        return -b * std::cos(w * x) * std::cos(w * y) / (1.0 + b * big_i(x));
    }

    double q(double x) const {
        const double w = static_cast<double>(n0);
        const double b = beta_hat();
        const double c = std::cos(w * x);
        const double cp = -w * std::sin(w * x);
        const double den = 1.0 + b * big_i(x);
        return 2.0 * b * (b * c * c * c * c - 2.0 * c * cp * den) / (den * den);
    }
};

// Synthetic member of Omega_{0,M} with a trivial tail: alpha_0 sits near pi/2
// (so the remainder norms stay small) and the prefix carries decaying kappa,
// kappa~ perturbations. The scale is capped below 2/pi to keep every alpha_n
// positive.
inline seashell::SpectralData omega0_family(std::size_t prefix_len, double scale,
                                            unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    scale = std::min(scale, 0.6);
    seashell::SpectralData d;
    for (std::size_t n = 0; n < prefix_len; ++n) {
        const double np1 = static_cast<double>(n) + 1.0;
        const double kap = (n == 0) ? 0.0 : scale * unit(rng) / np1;
        const double kat = scale * unit(rng) / np1;
        const double rho = static_cast<double>(n) + kap / np1;
        d.lambda.push_back(rho * rho);
        d.alpha.push_back(1.0 / (2.0 / kPi + kat / np1));
    }
    return d;
}

inline std::vector<double> uniform_grid(std::size_t m) {
    std::vector<double> xs(m + 1);
    for (std::size_t i = 0; i <= m; ++i)
        xs[i] = (i == m) ? kPi : kPi * static_cast<double>(i) / static_cast<double>(m);
    return xs;
}

} // namespace test_support

#endif
