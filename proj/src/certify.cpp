#include "seashell/certify.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include <Eigen/Cholesky>

#include "seashell/errors.hpp"
#include "seashell/trig_kernel.hpp"

namespace seashell {

namespace {
constexpr double kPi = std::numbers::pi;
}

double c_m1(double M) {
    return M * std::cosh(2.0 * kPi * M) *
           ((8.0 * kPi * kPi / std::sqrt(6.0) + 2.0 * kPi) * M + 5.0);
}

HypothesisConstants hypothesis_constants(double M) {
    HypothesisConstants c;
    c.c_omega = M * kPi * std::cosh(M * kPi) *
                std::sqrt(1.5 * (1.0 + (2.0 * kPi) * (2.0 * kPi) * M * M +
                                 (2.0 + kPi * M) * (2.0 + kPi * M)));
    c.c_eta = std::sqrt(2.0 / kPi) * std::sqrt(2.0 / kPi + M) * M * (1.0 + M) *
              std::cosh(M * kPi);
    return c;
}

double delta_j(std::size_t j, double M) {
    if (j == 0) throw ValidationError("delta_J needs J >= 1");
    const HypothesisConstants c = hypothesis_constants(M);
    const double jd = static_cast<double>(j);
    return std::max(4.0 * c.c_eta * std::log(jd) / jd, c.c_omega / jd);
}

double t_matrix_entry(const SpectralData& data, std::size_t i, std::size_t j) {
    const double lam = data.lambda_at(j);
    const double alp = data.alpha_at(j);
    if (!(alp > 0.0)) throw ValidationError("norming constant must be positive");
    const TrigAtom g{1.0 / std::sqrt(alp), std::sqrt(std::abs(lam)),
                     lam < 0.0 ? Branch::hyperbolic : Branch::circular};
    const TrigAtom f{1.0 / std::sqrt(kPi / 2.0), static_cast<double>(i),
                     Branch::circular};
    return atom_inner_product(g, f, kPi);
}

Eigen::MatrixXd t_matrix(const SpectralData& data, std::size_t j_max) {
    const auto n = static_cast<Eigen::Index>(j_max + 1);
    Eigen::MatrixXd a(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            a(i, j) = t_matrix_entry(data, static_cast<std::size_t>(i),
                                     static_cast<std::size_t>(j));
    return a;
}

long inverse_norm_bracket(const Eigen::MatrixXd& a, long cap) {
    if (a.rows() != a.cols() || a.rows() == 0)
        throw ValidationError("inverse_norm_bracket needs a nonempty square matrix");
    const Eigen::MatrixXd gram = a.transpose() * a;
    Eigen::MatrixXd shifted(gram.rows(), gram.cols());
    for (long k = 1; k <= cap; ++k) {
        shifted = gram;
        const double kd = static_cast<double>(k);
        shifted.diagonal().array() -= 1.0 / (kd * kd);
        Eigen::LLT<Eigen::MatrixXd> llt(shifted);
        if (llt.info() == Eigen::Success) return k;
    }
    throw NumericalError("matrix numerically singular: inverse-norm bracket "
                         "search exceeded its cap");
}

RieszResult riesz_constant(const SpectralData& data, double M, std::size_t j_cap) {
    data.check();
    if (M < 0.0) throw ValidationError("M must be nonnegative");
    for (std::size_t j = 1; j <= j_cap; ++j) {
        if (static_cast<double>(j) < 2.0 * M) continue; // hypothesis needs J > 2 mu
        const long a_j = inverse_norm_bracket(t_matrix(data, j));
        const double dj = delta_j(j, M);
        const double ap1 = static_cast<double>(a_j) + 1.0;
        if (dj < 1.0 / ap1) {
            RieszResult r;
            r.J = j;
            r.C2 = ap1 / (1.0 - dj * ap1);
            r.delta_J = dj;
            r.a_J = a_j;
            return r;
        }
    }
    throw NumericalError("Riesz-constant search exceeded its J cap; "
                         "M is likely inconsistent with the data");
}

Certificate certify(const SpectralData& data, double M, std::size_t N) {
    data.check();
    if (M < 0.0) throw ValidationError("M must be nonnegative");
    if (N == 0) throw ValidationError("N must be positive");

    if (data.omega_hint && *data.omega_hint != 0.0)
        throw CertificateError("certificate requires Omega_{0,M} (omega = 0)");
    AsymptoticDecomposition split;
    try {
        split = decompose(data, 0.0);
    } catch (const ValidationError&) {
        throw CertificateError("certificate requires Omega_{0,M} "
                               "(no real omega = 0 decomposition)");
    }
    if (split.kappa_norm() > M || split.kappa_tilde_norm() > M) {
        std::ostringstream msg;
        msg << "certificate requires Omega_{0,M}: stored remainders "
            << "||kappa|| = " << split.kappa_norm() << ", ||kappa~|| = "
            << split.kappa_tilde_norm() << " exceed M = " << M;
        throw CertificateError(msg.str());
    }

    Certificate cert;
    cert.M = M;
    cert.C1 = c_m1(M);
    const HypothesisConstants hc = hypothesis_constants(M);
    cert.C_omega = hc.c_omega;
    cert.c_eta = hc.c_eta;
    cert.N = N;

    // C2 >= 1 always, so N <= 2 pi C1^2 already implies N <= N0; this skips the
    // Riesz search when refusal is forced anyway.
    const double n0_floor = 2.0 * kPi * cert.C1 * cert.C1;
    if (static_cast<double>(N) <= n0_floor) {
        std::ostringstream msg;
        msg << "N below certified threshold N_0 (N = " << N
            << ", N_0 >= " << n0_floor << ")";
        throw CertificateError(msg.str());
    }

    const RieszResult riesz = riesz_constant(data, M);
    cert.J = riesz.J;
    cert.delta_J = riesz.delta_J;
    cert.a_J = riesz.a_J;
    cert.C2 = riesz.C2;

    const double c12 = cert.C1 * cert.C2;
    cert.N0 = 2.0 * kPi * c12 * c12;
    if (static_cast<double>(N) <= cert.N0) {
        std::ostringstream msg;
        msg << "N below certified threshold N_0 (N = " << N
            << ", N_0 = " << cert.N0 << ")";
        throw CertificateError(msg.str());
    }

    cert.bound_q = 2.0 / std::sqrt(static_cast<double>(N)) * cert.C1 *
                   (std::sqrt(kPi) + kPi * c12) *
                   (1.0 + 2.0 * std::pow(kPi, 1.5) * c12);
    cert.bound_h = cert.bound_q / 2.0;
    cert.bound_H = cert.bound_q;
    return cert;
}

} // namespace seashell
