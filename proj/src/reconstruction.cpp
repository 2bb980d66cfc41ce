#include "seashell/reconstruction.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "seashell/errors.hpp"
#include "seashell/glm_solver.hpp"
#include "seashell/trig_kernel.hpp"

namespace seashell {

namespace {
constexpr double kPi = std::numbers::pi;
}

std::vector<double> differentiate_diagonal(const std::vector<double>& f,
                                           double dx, DiffScheme scheme) {
    const std::size_t n = f.size();
    const std::size_t need = scheme == DiffScheme::central4 ? 5 : 3;
    if (n < need) throw ValidationError("grid too small for the stencil");
    std::vector<double> d(n);

    if (scheme == DiffScheme::central2) {
        d[0] = (-3.0 * f[0] + 4.0 * f[1] - f[2]) / (2.0 * dx);
        for (std::size_t i = 1; i + 1 < n; ++i)
            d[i] = (f[i + 1] - f[i - 1]) / (2.0 * dx);
        d[n - 1] = (3.0 * f[n - 1] - 4.0 * f[n - 2] + f[n - 3]) / (2.0 * dx);
        return d;
    }

    d[0] = (-25.0 * f[0] + 48.0 * f[1] - 36.0 * f[2] + 16.0 * f[3] - 3.0 * f[4]) /
           (12.0 * dx);
    d[1] = (-3.0 * f[0] - 10.0 * f[1] + 18.0 * f[2] - 6.0 * f[3] + f[4]) /
           (12.0 * dx);
    for (std::size_t i = 2; i + 2 < n; ++i)
        d[i] = (f[i - 2] - 8.0 * f[i - 1] + 8.0 * f[i + 1] - f[i + 2]) / (12.0 * dx);
    d[n - 2] = (3.0 * f[n - 1] + 10.0 * f[n - 2] - 18.0 * f[n - 3] +
                6.0 * f[n - 4] - f[n - 5]) / (12.0 * dx);
    d[n - 1] = (25.0 * f[n - 1] - 48.0 * f[n - 2] + 36.0 * f[n - 3] -
                16.0 * f[n - 4] + 3.0 * f[n - 5]) / (12.0 * dx);
    return d;
}

double sobolev_diagnostic(const std::vector<double>& k1,
                          const std::vector<double>& k2, double p) {
    if (k1.size() != k2.size())
        throw ValidationError("sobolev_diagnostic needs equal grids");
    if (k1.size() < 2) throw ValidationError("grid too small");
    if (!(p >= 1.0)) throw ValidationError("p must lie in [1, inf]");

    if (std::isinf(p)) {
        double m = 0.0;
        for (std::size_t i = 0; i < k1.size(); ++i)
            m = std::max(m, std::abs(k1[i] - k2[i]));
        return 2.0 * m;
    }
    const double dx = kPi / static_cast<double>(k1.size() - 1);
    double sum = 0.0;
    for (std::size_t i = 0; i < k1.size(); ++i) {
        const double v = std::pow(std::abs(k1[i] - k2[i]), p);
        sum += (i == 0 || i + 1 == k1.size()) ? 0.5 * v : v;
    }
    return 2.0 * std::pow(sum * dx, 1.0 / p);
}

Reconstruction reconstruct(const SpectralData& data, std::size_t m,
                           const ReconstructOptions& opts) {
    data.check();
    if (m < 8) throw ValidationError("grid size m must be at least 8");

    Reconstruction rec;
    rec.n_used = data.size();
    rec.varpi = 0.0;

    SpectralData work = data;
    if (opts.shift == ShiftMode::automatic) {
        rec.varpi = estimate_omega(data);
        for (double& lam : work.lambda) lam -= rec.varpi;
    }

    KernelFN kernel(work);

    rec.grid.resize(m + 1);
    for (std::size_t i = 0; i <= m; ++i)
        rec.grid[i] = (i == m) ? kPi
                               : kPi * static_cast<double>(i) / static_cast<double>(m);

    rec.k_diag = glm_diagonal(kernel, rec.grid, opts.threads);

    const std::vector<double> dk =
        differentiate_diagonal(rec.k_diag, kPi / static_cast<double>(m), opts.scheme);
    rec.q.resize(m + 1);
    for (std::size_t i = 0; i <= m; ++i) rec.q[i] = 2.0 * dk[i] + rec.varpi;

    rec.h = rec.k_diag.front();
    if (opts.h_from_limit) {
        // H from the tail identity at the largest stored index, on the shifted
        // data; for omega != 0 inputs this is a diagnostic, not a certified value.
        const std::size_t idx = work.size() - 1;
        const double lam = work.lambda[idx];
        if (lam < 0.0)
            throw NumericalError("limit formula needs a nonnegative top eigenvalue");
        const double np1 = static_cast<double>(idx) + 1.0;
        rec.H = kPi * np1 * (std::sqrt(lam) - static_cast<double>(idx)) -
                rec.k_diag.back() - rec.h + rec.k_diag.front();
    } else {
        rec.H = -rec.k_diag.back() + 0.0; // + 0.0 drops a negative zero
    }
    return rec;
}

} // namespace seashell
