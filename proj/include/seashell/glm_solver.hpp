#ifndef SEASHELL_GLM_SOLVER_HPP
#define SEASHELL_GLM_SOLVER_HPP

#include <cstdint>
#include <mutex>
#include <unordered_map>
#include <vector>

#include <Eigen/Dense>

#include "seashell/trig_kernel.hpp"

namespace seashell {

// The per-abscissa linear problem (I - 𝔄(x)) c = 𝔟(x) with
// 𝔄_ij = <A_j, B_i>_{L^2[0,x]} and 𝔟_i = <f_x, B_i>, f_x = -F(x,.).
struct GlmSystem {
    double x = 0.0;
    Eigen::MatrixXd matrix; // I - 𝔄
    Eigen::VectorXd rhs;    // 𝔟
};

// All entries in closed form; exactly the identity/zero at x = 0.
GlmSystem assemble(const BasisSet& basis, double x);

// Dense partial-pivoting solve with a backward-error gate; throws
// NumericalError("GLM system singular at x...") on failure.
Eigen::VectorXd solve_coefficients(const GlmSystem& sys);

// K_N(x,y) = -F(x,y) + sum_i c_i(x) A_i(y), defined on the triangle y <= x.
// Coefficient vectors are cached per exact x bit-pattern; the cache is safe
// for concurrent use.
class KNEvaluator {
public:
    explicit KNEvaluator(const SpectralData& data) : kernel_(data) {}
    explicit KNEvaluator(KernelFN kernel) : kernel_(std::move(kernel)) {}

    double operator()(double x, double y) const; // throws std::domain_error if y > x
    double diag(double x) const { return (*this)(x, x); }

    const KernelFN& kernel() const { return kernel_; }

private:
    const Eigen::VectorXd& coefficients(double x) const;

    KernelFN kernel_;
    mutable std::unordered_map<std::uint64_t, Eigen::VectorXd> cache_;
    mutable std::mutex cache_mutex_;
};

// K_N(x_i, x_i) over a list of abscissae. The solves at distinct x are
// independent; the parallel version gathers into a preallocated buffer in
// grid order and is bit-identical to the serial reference.
std::vector<double> glm_diagonal_serial(const KernelFN& kernel,
                                        const std::vector<double>& xs);
std::vector<double> glm_diagonal(const KernelFN& kernel,
                                 const std::vector<double>& xs,
                                 int threads = 0);

// Independent cross-check: trapezoid-rule Nystrom discretization of the
// integral equation on [0,x] with m nodes. Test oracle only.
struct NystromSlice {
    double x = 0.0;
    std::vector<double> nodes;
    std::vector<double> values; // K~(x, nodes[i])
};
NystromSlice solve_nystrom(const KernelFN& kernel, double x, std::size_t m);

} // namespace seashell

#endif
