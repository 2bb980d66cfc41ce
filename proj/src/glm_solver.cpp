#include "seashell/glm_solver.hpp"

#include <atomic>
#include <bit>
#include <cmath>
#include <sstream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "seashell/errors.hpp"
#include "seashell/threads.hpp"

/*
 * For fixed x the integral equation
 *
 *   u_x(y) - int_0^x k(y,s) u_x(s) ds = f_x(y),   k = -F,  f_x = -F(x,.)
 *
 * with the degenerate kernel k(t,s) = sum_i A_i(t) B_i(s) reduces, via the
 * ansatz u_x = f_x + sum_i c_i A_i, to
 *
 *   c_i - sum_j <A_j, B_i> c_j = <f_x, B_i>,   <.,.> over L^2[0,x].
 *
 * f_x(s) = sum_j A_j(x) B_j(s), so the right-hand side is closed-form too.
 * The solution is K_N(x,y) = u_x(y).
 */

namespace seashell {

GlmSystem assemble(const BasisSet& basis, double x) {
    const auto n = static_cast<Eigen::Index>(basis.size());
    GlmSystem sys;
    sys.x = x;
    sys.matrix.resize(n, n);
    sys.rhs.resize(n);

    std::vector<double> weight(basis.size()); // A_j(x)
    for (std::size_t j = 0; j < basis.size(); ++j)
        weight[j] = basis.atoms_a[j](x);

    for (Eigen::Index i = 0; i < n; ++i) {
        const TrigAtom& bi = basis.atoms_b[static_cast<std::size_t>(i)];
        double rhs = 0.0;
        for (Eigen::Index j = 0; j < n; ++j) {
            const std::size_t ju = static_cast<std::size_t>(j);
            sys.matrix(i, j) = (i == j ? 1.0 : 0.0) -
                               atom_inner_product(basis.atoms_a[ju], bi, x);
            rhs += weight[ju] * atom_inner_product(basis.atoms_b[ju], bi, x);
        }
        sys.rhs(i) = rhs;
    }
    return sys;
}

Eigen::VectorXd solve_coefficients(const GlmSystem& sys) {
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(sys.matrix);
    Eigen::VectorXd c = lu.solve(sys.rhs);
    const double res = (sys.matrix * c - sys.rhs).cwiseAbs().maxCoeff();
    const double scale = 1.0 + sys.rhs.cwiseAbs().maxCoeff();
    if (!(res <= 1e-10 * scale)) {
        std::ostringstream msg;
        msg << "GLM system singular at x = " << sys.x
            << " (backward error " << res << ")";
        throw NumericalError(msg.str());
    }
    return c;
}

const Eigen::VectorXd& KNEvaluator::coefficients(double x) const {
    const std::uint64_t key = std::bit_cast<std::uint64_t>(x);
    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto it = cache_.find(key);
    if (it == cache_.end())
        it = cache_.emplace(key, solve_coefficients(assemble(kernel_.basis(), x))).first;
    return it->second;
}

double KNEvaluator::operator()(double x, double y) const {
    if (y > x)
        throw std::domain_error("K_N(x,y) is defined on the triangle y <= x");
    const Eigen::VectorXd& c = coefficients(x);
    const BasisSet& basis = kernel_.basis();
    double u = -kernel_(x, y);
    for (Eigen::Index i = 0; i < c.size(); ++i)
        u += c(i) * basis.atoms_a[static_cast<std::size_t>(i)](y);
    return u;
}

namespace {

double diagonal_value(const KernelFN& kernel, double x) {
    const Eigen::VectorXd c = solve_coefficients(assemble(kernel.basis(), x));
    const BasisSet& basis = kernel.basis();
    double u = -kernel(x, x);
    for (Eigen::Index i = 0; i < c.size(); ++i)
        u += c(i) * basis.atoms_a[static_cast<std::size_t>(i)](x);
    return u;
}

} // namespace

std::vector<double> glm_diagonal_serial(const KernelFN& kernel,
                                        const std::vector<double>& xs) {
    std::vector<double> out(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i)
        out[i] = diagonal_value(kernel, xs[i]);
    return out;
}

std::vector<double> glm_diagonal(const KernelFN& kernel,
                                 const std::vector<double>& xs, int threads) {
#ifdef _OPENMP
    const int nt = effective_threads(threads);
    std::vector<double> out(xs.size());
    std::atomic<bool> failed{false};
    std::string message;
    std::mutex message_mutex;

    #pragma omp parallel for schedule(dynamic, 8) num_threads(nt)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(xs.size()); ++i) {
        if (failed.load(std::memory_order_relaxed)) continue;
        try {
            out[static_cast<std::size_t>(i)] =
                diagonal_value(kernel, xs[static_cast<std::size_t>(i)]);
        } catch (const std::exception& e) {
            std::lock_guard<std::mutex> lock(message_mutex);
            if (!failed.exchange(true)) message = e.what();
        }
    }
    if (failed) throw NumericalError(message);
    return out;
#else
    (void)threads;
    return glm_diagonal_serial(kernel, xs);
#endif
}

NystromSlice solve_nystrom(const KernelFN& kernel, double x, std::size_t m) {
    if (m < 2) throw ValidationError("Nystrom rule needs at least 2 nodes");
    if (!(x > 0.0)) throw ValidationError("Nystrom slice needs x > 0");

    const auto n = static_cast<Eigen::Index>(m);
    NystromSlice slice;
    slice.x = x;
    slice.nodes.resize(m);
    const double dx = x / static_cast<double>(m - 1);
    for (std::size_t i = 0; i < m; ++i)
        slice.nodes[i] = x * static_cast<double>(i) / static_cast<double>(m - 1);

    // (I - W k) u = f_x with trapezoid weights; k(t,s) = -F(t,s).
    Eigen::MatrixXd a(n, n);
    Eigen::VectorXd rhs(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const double ti = slice.nodes[static_cast<std::size_t>(i)];
        for (Eigen::Index j = 0; j < n; ++j) {
            const double w = (j == 0 || j == n - 1) ? 0.5 * dx : dx;
            a(i, j) = (i == j ? 1.0 : 0.0) +
                      w * kernel(ti, slice.nodes[static_cast<std::size_t>(j)]);
        }
        rhs(i) = -kernel(x, ti);
    }
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(a);
    Eigen::VectorXd u = lu.solve(rhs);
    if (!u.allFinite())
        throw NumericalError("Nystrom discretization is singular");
    slice.values.assign(u.data(), u.data() + u.size());
    return slice;
}

} // namespace seashell
