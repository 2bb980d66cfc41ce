// Timing comparison of the serial reference diagonal kernel against the
// OpenMP version, on synthetic data of increasing rank.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <vector>

#include "seashell/glm_solver.hpp"
#include "seashell/spectral_data.hpp"
#include "seashell/threads.hpp"
#include "seashell/trig_kernel.hpp"

namespace {

using Clock = std::chrono::steady_clock;

seashell::SpectralData synthetic(std::size_t len) {
    seashell::SpectralData data = seashell::SpectralData::trivial(len);
    for (std::size_t n = 0; n < len; ++n) {
        const double np1 = static_cast<double>(n) + 1.0;
        const double rho = static_cast<double>(n) + 0.35 / (np1 * np1);
        data.lambda[n] = rho * rho;
        data.alpha[n] = 1.0 / (2.0 / std::numbers::pi + 0.25 / (np1 * np1));
    }
    return data;
}

double best_of(int reps, const std::vector<double>& xs,
               const seashell::KernelFN& kernel, bool parallel, int threads,
               std::vector<double>& out) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const auto t0 = Clock::now();
        out = parallel ? seashell::glm_diagonal(kernel, xs, threads)
                       : seashell::glm_diagonal_serial(kernel, xs);
        const auto t1 = Clock::now();
        best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    return best;
}

} // namespace

int main() {
    const std::size_t m = 600;
    std::vector<double> xs(m + 1);
    for (std::size_t i = 0; i <= m; ++i)
        xs[i] = std::numbers::pi * static_cast<double>(i) / static_cast<double>(m);

    const int threads = seashell::effective_threads(0);
    std::printf("diagonal kernel, m = %zu grid nodes, %d worker thread(s)\n", m, threads);
    std::printf("%6s %12s %12s %9s %10s\n", "pairs", "serial[ms]", "openmp[ms]",
                "speedup", "max|diff|");

    for (std::size_t len : {8, 16, 32, 64}) {
        const seashell::SpectralData data = synthetic(len);
        const seashell::KernelFN kernel(data);
        std::vector<double> serial, parallel;
        const double ts = best_of(3, xs, kernel, false, threads, serial);
        const double tp = best_of(3, xs, kernel, true, threads, parallel);
        double diff = 0.0;
        for (std::size_t i = 0; i < serial.size(); ++i)
            diff = std::max(diff, std::abs(serial[i] - parallel[i]));
        std::printf("%6zu %12.2f %12.2f %8.2fx %10.3g\n", len, ts, tp, ts / tp, diff);
    }
    return 0;
}
