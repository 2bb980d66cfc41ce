#ifndef SEASHELL_CERTIFY_HPP
#define SEASHELL_CERTIFY_HPP

#include <cstddef>

#include <Eigen/Dense>

#include "seashell/spectral_data.hpp"

namespace seashell {

// A-priori error certificate for data in Omega_{0,M}: the explicit constants
// and the final q/h/H bounds at truncation level N.
struct Certificate {
    double M = 0.0;
    double C1 = 0.0;      // C_M^(1)
    double C_omega = 0.0;
    double c_eta = 0.0;
    std::size_t J = 0;
    double delta_J = 0.0;
    long a_J = 0;
    double C2 = 0.0;      // C_M^(2) (Riesz constant)
    double N0 = 0.0;      // certified threshold 2 pi (C1 C2)^2
    std::size_t N = 0;
    double bound_q = 0.0; // W^{-1,inf}
    double bound_h = 0.0; // = bound_q / 2
    double bound_H = 0.0; // = bound_q
};

// C_M^(1) = M cosh(2 pi M) [ (8 pi^2 / sqrt(6) + 2 pi) M + 5 ]
double c_m1(double M);

struct HypothesisConstants {
    double c_omega = 0.0; // tail bound Omega_J <= C_Omega / J
    double c_eta = 0.0;   // cross-term constant
};
HypothesisConstants hypothesis_constants(double M);

// delta_J = max{ 4 c_eta log(J)/J, C_Omega/J }
double delta_j(std::size_t j, double M);

// T_ij = <g_j, f_i> with f_n = (2/pi)^{1/2} cos(n t), g_n = alpha_n^{-1/2} cos(lambda_n^{1/2} t),
// integrated over [0,pi]; the trivial tail rule supplies entries beyond the prefix.
double t_matrix_entry(const SpectralData& data, std::size_t i, std::size_t j);
Eigen::MatrixXd t_matrix(const SpectralData& data, std::size_t j_max);

// Smallest integer k >= 1 with A^T A - k^{-2} I positive definite (Cholesky
// probe). Brackets the inverse norm: k-1 <= ||A^{-1}||_2 <= k.
long inverse_norm_bracket(const Eigen::MatrixXd& a, long cap = 1000000);

struct RieszResult {
    std::size_t J = 0;
    double C2 = 0.0;
    double delta_J = 0.0;
    long a_J = 0;
};

// Loops J = 1, 2, ... until delta_J < (a_J + 1)^{-1} (skipping J < 2M), then
// returns C2 = (a_J + 1) / (1 - delta_J (a_J + 1)).
RieszResult riesz_constant(const SpectralData& data, double M,
                           std::size_t j_cap = 10000);

// Full certificate; throws CertificateError when the data is outside
// Omega_{0,M} or when N <= N0.
Certificate certify(const SpectralData& data, double M, std::size_t N);

} // namespace seashell

#endif
