#include "seashell/forward_oracle.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <mutex>
#include <numbers>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "seashell/errors.hpp"
#include "seashell/threads.hpp"

/*
 * Forward Robin problem  -psi'' + q psi = lambda psi,  psi'(0) = h psi(0),
 * psi'(pi) = -H psi(pi),  solved by shooting on the scaled Prufer phase:
 * with psi = r sin(phi), psi' = S r cos(phi) and a fixed scale S > 0,
 *
 *   phi' = S cos^2(phi) + ((lambda - q)/S) sin^2(phi),
 *   phi(0) = atan2(S, h),     phi(pi) = atan2(S, -H) + n pi  at lambda_n.
 *
 * phi(pi; lambda) is strictly increasing in lambda for fixed S, so each index
 * brackets and the root is refined by the Illinois method. S = max(1, n)
 * keeps the phase near-linear around the n-th eigenvalue.
 */

namespace seashell {

namespace {

constexpr double kPi = std::numbers::pi;

// Cash-Karp 4(5) pair.
template <std::size_t N, typename F>
void rk45_step(const F& f, double x, const std::array<double, N>& y, double h,
               std::array<double, N>& y_out, std::array<double, N>& err) {
    static constexpr double b21 = 1.0 / 5.0;
    static constexpr double b31 = 3.0 / 40.0, b32 = 9.0 / 40.0;
    static constexpr double b41 = 3.0 / 10.0, b42 = -9.0 / 10.0, b43 = 6.0 / 5.0;
    static constexpr double b51 = -11.0 / 54.0, b52 = 5.0 / 2.0,
                            b53 = -70.0 / 27.0, b54 = 35.0 / 27.0;
    static constexpr double b61 = 1631.0 / 55296.0, b62 = 175.0 / 512.0,
                            b63 = 575.0 / 13824.0, b64 = 44275.0 / 110592.0,
                            b65 = 253.0 / 4096.0;
    static constexpr double c1 = 37.0 / 378.0, c3 = 250.0 / 621.0,
                            c4 = 125.0 / 594.0, c6 = 512.0 / 1771.0;
    static constexpr double d1 = c1 - 2825.0 / 27648.0, d3 = c3 - 18575.0 / 48384.0,
                            d4 = c4 - 13525.0 / 55296.0, d5 = -277.0 / 14336.0,
                            d6 = c6 - 1.0 / 4.0;

    std::array<double, N> k1, k2, k3, k4, k5, k6, t;
    f(x, y, k1);
    for (std::size_t i = 0; i < N; ++i) t[i] = y[i] + h * b21 * k1[i];
    f(x + h / 5.0, t, k2);
    for (std::size_t i = 0; i < N; ++i) t[i] = y[i] + h * (b31 * k1[i] + b32 * k2[i]);
    f(x + 3.0 * h / 10.0, t, k3);
    for (std::size_t i = 0; i < N; ++i)
        t[i] = y[i] + h * (b41 * k1[i] + b42 * k2[i] + b43 * k3[i]);
    f(x + 3.0 * h / 5.0, t, k4);
    for (std::size_t i = 0; i < N; ++i)
        t[i] = y[i] + h * (b51 * k1[i] + b52 * k2[i] + b53 * k3[i] + b54 * k4[i]);
    f(x + h, t, k5);
    for (std::size_t i = 0; i < N; ++i)
        t[i] = y[i] + h * (b61 * k1[i] + b62 * k2[i] + b63 * k3[i] + b64 * k4[i] +
                           b65 * k5[i]);
    f(x + 7.0 * h / 8.0, t, k6);
    for (std::size_t i = 0; i < N; ++i) {
        y_out[i] = y[i] + h * (c1 * k1[i] + c3 * k3[i] + c4 * k4[i] + c6 * k6[i]);
        err[i] = h * (d1 * k1[i] + d3 * k3[i] + d4 * k4[i] + d5 * k5[i] + d6 * k6[i]);
    }
}

template <std::size_t N, typename F>
void integrate_segment(const F& f, double x0, double x1,
                       std::array<double, N>& y, double rtol, double atol) {
    const double span = x1 - x0;
    if (span <= 0.0) return;
    double x = x0;
    double h = span;
    std::size_t rejects_in_row = 0;
    while (x < x1) {
        h = std::min(h, x1 - x);
        std::array<double, N> y_new, err;
        rk45_step<N>(f, x, y, h, y_new, err);
        double scale = 0.0;
        for (std::size_t i = 0; i < N; ++i) {
            const double tol = atol + rtol * std::max(std::abs(y[i]), std::abs(y_new[i]));
            scale = std::max(scale, std::abs(err[i]) / tol);
        }
        if (scale <= 1.0) {
            x += h;
            y = y_new;
            rejects_in_row = 0;
            const double grow = scale > 0.0 ? 0.9 * std::pow(scale, -0.2) : 5.0;
            h *= std::clamp(grow, 1.0, 5.0);
        } else {
            if (++rejects_in_row > 60 || h < 1e-14 * std::max(1.0, std::abs(x)))
                throw NumericalError("integrator step size underflow");
            h *= std::max(0.9 * std::pow(scale, -0.25), 0.1);
        }
    }
}

template <std::size_t N, typename F>
void integrate(const PotentialSpec& spec, const F& f, std::array<double, N>& y,
               double rtol, double atol) {
    double x0 = 0.0;
    for (double b : spec.breakpoints()) {
        if (b <= x0 || b >= kPi) continue;
        integrate_segment<N>(f, x0, b, y, rtol, atol);
        x0 = b;
    }
    integrate_segment<N>(f, x0, kPi, y, rtol, atol);
}

double phase_at_pi(const PotentialSpec& spec, double lambda, double scale) {
    auto rhs = [&](double x, const std::array<double, 1>& y,
                   std::array<double, 1>& dy) {
        const double s = std::sin(y[0]);
        const double c = std::cos(y[0]);
        dy[0] = scale * c * c + (lambda - spec.q(x)) / scale * s * s;
    };
    std::array<double, 1> y{std::atan2(scale, spec.h)};
    integrate<1>(spec, rhs, y, 1e-12, 1e-12);
    return y[0];
}

double eigenvalue_at(const PotentialSpec& spec, std::size_t n) {
    const double scale = std::max(1.0, static_cast<double>(n));
    const double target = std::atan2(scale, -spec.H) + static_cast<double>(n) * kPi;
    auto g = [&](double lam) { return phase_at_pi(spec, lam, scale) - target; };

    const double nn = static_cast<double>(n) * static_cast<double>(n);
    const double pad = 2.0 * (std::abs(spec.h) + std::abs(spec.H)) + 3.0;
    double lo = nn + spec.q_min() - pad;
    double hi = nn + spec.q_max() + pad;
    double glo = g(lo);
    double ghi = g(hi);
    double step = std::max(4.0, 0.25 * (hi - lo));
    for (int tries = 0; glo > 0.0; ++tries) {
        if (tries > 60) throw NumericalError("eigenvalue bracket search failed (low side)");
        lo -= step;
        step *= 2.0;
        glo = g(lo);
    }
    step = std::max(4.0, 0.25 * (hi - lo));
    for (int tries = 0; ghi < 0.0; ++tries) {
        if (tries > 60) throw NumericalError("eigenvalue bracket search failed (high side)");
        hi += step;
        step *= 2.0;
        ghi = g(hi);
    }
    if (glo == 0.0) return lo;
    if (ghi == 0.0) return hi;

    // Illinois refinement of the bracketed root.
    double a = lo, b = hi, fa = glo, fb = ghi;
    for (int it = 0; it < 200; ++it) {
        const double m = b - fb * (b - a) / (fb - fa);
        const double fm = g(m);
        if (fm == 0.0) return m;
        if ((fm > 0.0) == (fb > 0.0)) {
            b = m;
            fb = fm;
            fa *= 0.5; // same-side update: halve the stale endpoint value
        } else {
            a = b;
            fa = fb;
            b = m;
            fb = fm;
        }
        if (std::abs(b - a) <= 1e-13 * std::max(1.0, std::abs(b)))
            return 0.5 * (a + b);
    }
    return 0.5 * (a + b);
}

template <typename Work>
void parallel_indices(std::size_t count, int threads, const Work& work) {
#ifdef _OPENMP
    const int nt = effective_threads(threads);
    std::atomic<bool> failed{false};
    std::string message;
    std::mutex message_mutex;
    #pragma omp parallel for schedule(dynamic) num_threads(nt)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(count); ++i) {
        if (failed.load(std::memory_order_relaxed)) continue;
        try {
            work(static_cast<std::size_t>(i));
        } catch (const std::exception& e) {
            std::lock_guard<std::mutex> lock(message_mutex);
            if (!failed.exchange(true)) message = e.what();
        }
    }
    if (failed) throw NumericalError(message);
#else
    (void)threads;
    for (std::size_t i = 0; i < count; ++i) work(i);
#endif
}

} // namespace

double PotentialSpec::q(double x) const {
    if (!samples.empty()) {
        const double dx = kPi / static_cast<double>(samples.size() - 1);
        const double pos = std::clamp(x, 0.0, kPi) / dx;
        const auto idx = std::min(static_cast<std::size_t>(pos), samples.size() - 2);
        const double t = pos - static_cast<double>(idx);
        return samples[idx] * (1.0 - t) + samples[idx + 1] * t;
    }
    switch (kind) {
        case Builtin::zero: return 0.0;
        case Builtin::constant: return constant;
        case Builtin::bump: {
            const double d = x - kPi / 2.0;
            return 1.5 * std::exp(-8.0 * d * d);
        }
        case Builtin::step:
            return (x >= kPi / 3.0 && x <= 2.0 * kPi / 3.0) ? 1.0 : 0.0;
        case Builtin::hat: {
            const double d = std::abs(x - kPi / 2.0);
            return std::max(0.0, 1.0 - d / (kPi / 6.0));
        }
    }
    return 0.0;
}

double PotentialSpec::q_min() const {
    if (!samples.empty()) return *std::min_element(samples.begin(), samples.end());
    switch (kind) {
        case Builtin::constant: return constant;
        default: return 0.0;
    }
}

double PotentialSpec::q_max() const {
    if (!samples.empty()) return *std::max_element(samples.begin(), samples.end());
    switch (kind) {
        case Builtin::zero: return 0.0;
        case Builtin::constant: return constant;
        case Builtin::bump: return 1.5;
        case Builtin::step: return 1.0;
        case Builtin::hat: return 1.0;
    }
    return 0.0;
}

std::vector<double> PotentialSpec::breakpoints() const {
    if (!samples.empty()) {
        std::vector<double> b(samples.size() - 2);
        const double dx = kPi / static_cast<double>(samples.size() - 1);
        for (std::size_t i = 1; i + 1 < samples.size(); ++i)
            b[i - 1] = dx * static_cast<double>(i);
        return b;
    }
    switch (kind) {
        case Builtin::step: return {kPi / 3.0, 2.0 * kPi / 3.0};
        case Builtin::hat: return {kPi / 3.0, kPi / 2.0, 2.0 * kPi / 3.0};
        default: return {};
    }
}

PotentialSpec PotentialSpec::builtin(Builtin kind, double c, double h, double H) {
    PotentialSpec spec;
    spec.kind = kind;
    spec.constant = c;
    spec.h = h;
    spec.H = H;
    return spec;
}

PotentialSpec PotentialSpec::sampled(std::vector<double> samples, double h, double H) {
    if (samples.size() < 2)
        throw ValidationError("sampled potential needs at least 2 nodes");
    PotentialSpec spec;
    spec.samples = std::move(samples);
    spec.h = h;
    spec.H = H;
    return spec;
}

std::vector<double> eigenvalues(const PotentialSpec& spec, std::size_t count,
                                int threads) {
    if (count == 0) throw ValidationError("eigenvalue count must be positive");
    std::vector<double> lams(count);
    parallel_indices(count, threads,
                     [&](std::size_t n) { lams[n] = eigenvalue_at(spec, n); });
    for (std::size_t n = 1; n < count; ++n)
        if (!(lams[n - 1] < lams[n]))
            throw NumericalError("eigenvalue solver produced a non-increasing pair");
    return lams;
}

std::vector<double> norming_constants(const PotentialSpec& spec,
                                      const std::vector<double>& lambdas,
                                      int threads) {
    std::vector<double> alphas(lambdas.size());
    parallel_indices(lambdas.size(), threads, [&](std::size_t n) {
        const double lam = lambdas[n];
        auto rhs = [&](double x, const std::array<double, 3>& y,
                       std::array<double, 3>& dy) {
            dy[0] = y[1];
            dy[1] = (spec.q(x) - lam) * y[0];
            dy[2] = y[0] * y[0];
        };
        std::array<double, 3> y{1.0, spec.h, 0.0};
        integrate<3>(spec, rhs, y, 1e-12, 1e-13);
        alphas[n] = y[2];
    });
    for (double a : alphas)
        if (!(a > 0.0)) throw NumericalError("nonpositive norming constant");
    return alphas;
}

double spectral_error(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size())
        throw ValidationError("spectral_error needs lists of equal length");
    auto sorted = [](const std::vector<double>& v) {
        for (std::size_t i = 1; i < v.size(); ++i)
            if (!(v[i - 1] < v[i])) return false;
        return true;
    };
    if (!sorted(a) || !sorted(b))
        throw ValidationError("spectral_error needs sorted eigenvalue lists");
    auto root = [](double lam) {
        return std::copysign(std::sqrt(std::abs(lam)), lam);
    };
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = root(a[i]) - root(b[i]);
        s += d * d;
    }
    return std::sqrt(s);
}

SpectralData make_spectral_data(const PotentialSpec& spec, std::size_t count,
                                int threads) {
    SpectralData data;
    data.lambda = eigenvalues(spec, count, threads);
    data.alpha = norming_constants(spec, data.lambda, threads);
    return data;
}

} // namespace seashell
