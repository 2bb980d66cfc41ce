#include <cmath>
#include <random>

#include <doctest.h>

#include "seashell/errors.hpp"
#include "seashell/glm_solver.hpp"
#include "test_support.hpp"

using namespace seashell;
using test_support::kPi;
using test_support::RankOne;

namespace {

// closed-form int_0^x K(x,t) F(t,y) dt from the atom representation of K(x,.)
double glm_integral_term(const KNEvaluator& ev, const Eigen::VectorXd& c,
                         double x, double y) {
    const BasisSet& basis = ev.kernel().basis();
    double total = 0.0;
    for (std::size_t j = 0; j < basis.size(); ++j) {
        // F(t,y) = -sum_j A_j(t) B_j(y)
        double inner = 0.0;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            const double ki = basis.atoms_a[i](x) *
                                  atom_inner_product(basis.atoms_b[i],
                                                     basis.atoms_a[j], x) +
                              c(static_cast<Eigen::Index>(i)) *
                                  atom_inner_product(basis.atoms_a[i],
                                                     basis.atoms_a[j], x);
            inner += ki;
        }
        total -= inner * basis.atoms_b[j](y);
    }
    return total;
}

} // namespace

TEST_SUITE("glm_solver") {

TEST_CASE("assembly at x = 0 is the identity with zero right-hand side") {
    const RankOne r{2, 1.0};
    const BasisSet basis = build_basis(r.data(4));
    const GlmSystem sys = assemble(basis, 0.0);
    const auto n = static_cast<Eigen::Index>(basis.size());
    CHECK((sys.matrix - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff() == 0.0);
    CHECK(sys.rhs.cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("trivial data: vanishing right-hand side, coefficients and kernel") {
    // The per-atom matrix 𝔄 is not entrywise zero (the atoms only cancel in
    // the kernel sum), but the right-hand side collapses pairwise and the
    // solution vanishes with it.
    const SpectralData trivial = SpectralData::trivial(3);
    const BasisSet basis = build_basis(trivial);
    const KNEvaluator k(trivial);
    for (double x : {0.4, 1.7, kPi}) {
        const GlmSystem sys = assemble(basis, x);
        CHECK(sys.rhs.cwiseAbs().maxCoeff() < 1e-15);
        CHECK(solve_coefficients(sys).cwiseAbs().maxCoeff() < 1e-15);
        for (double y : {0.0, 0.5 * x, x}) CHECK(std::abs(k(x, y)) < 1e-15);
    }
}

TEST_CASE("rank-one data reproduces the closed-form transformation kernel") {
    for (double beta : {0.5, 1.0, 2.0}) {
        for (std::size_t n0 : {1u, 3u}) {
            const RankOne r{n0, beta};
            const KNEvaluator k(r.data());
            for (int i = 1; i <= 30; ++i) {
                const double x = kPi * i / 30.0;
                for (int j = 0; j <= i; ++j) {
                    const double y = x * j / std::max(1, i);
                    CHECK(std::abs(k(x, y) - r.k(x, y)) <= 1e-10);
                }
            }
        }
    }
}

TEST_CASE("pinned kernel values on the counterexample data") {
    const RankOne r{1, 2.0};
    const KNEvaluator k(r.data());
    CHECK(k(0.0, 0.0) == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(k(kPi, kPi) == doctest::Approx(-1.0 / (1.0 + kPi / 2.0)).epsilon(1e-12));
    // x = pi/2: K(x,y) = -cos(x)cos(y)/(1+I(x)), I = x/2 + sin(2x)/4
    const double x = kPi / 2.0;
    for (double y : {0.0, 0.3, 1.2, x}) {
        const double expect = -std::cos(x) * std::cos(y) / (1.0 + (x / 2.0 + std::sin(2.0 * x) / 4.0));
        CHECK(k(x, y) == doctest::Approx(expect).epsilon(1e-12).scale(1.0));
    }
}

TEST_CASE("evaluation outside the triangle is a domain error") {
    const KNEvaluator k(SpectralData::trivial(2));
    CHECK_THROWS_AS(k(1.0, 1.5), std::domain_error);
}

TEST_CASE("solver succeeds across the whole interval") {
    const SpectralData gentle = test_support::omega0_family(8, 0.8, 13);
    const BasisSet basis = build_basis(gentle);
    for (int i = 0; i <= 1000; ++i)
        CHECK_NOTHROW(solve_coefficients(assemble(basis, kPi * i / 1000.0)));
}

TEST_CASE("integral-equation residual vanishes in closed form") {
    const SpectralData data = test_support::omega0_family(7, 0.9, 19);
    const KNEvaluator ev(data);
    const KernelFN& f = ev.kernel();
    std::mt19937 rng(101);
    for (int gi = 1; gi <= 20; ++gi) {
        const double x = kPi * gi / 20.0;
        const Eigen::VectorXd c = solve_coefficients(assemble(f.basis(), x));
        std::uniform_real_distribution<double> pos(0.0, x);
        for (int t = 0; t < 100; ++t) {
            const double y = pos(rng);
            const double residual = ev(x, y) + f(x, y) + glm_integral_term(ev, c, x, y);
            CHECK(std::abs(residual) <= 1e-8);
        }
    }
}

TEST_CASE("Nystrom oracle") {
    SUBCASE("trivial data gives the zero slice") {
        const KernelFN f(SpectralData::trivial(3));
        const NystromSlice s = solve_nystrom(f, kPi, 64);
        for (double v : s.values) CHECK(v == 0.0);
    }
    SUBCASE("rank-one slice at x = pi matches the closed form at m = 512") {
        const RankOne r{1, 2.0};
        const KernelFN f(r.data());
        const NystromSlice s = solve_nystrom(f, kPi, 512);
        double worst = 0.0;
        for (std::size_t i = 0; i < s.nodes.size(); ++i)
            worst = std::max(worst, std::abs(s.values[i] - r.k(kPi, s.nodes[i])));
        CHECK(worst <= 1e-6);
    }
    SUBCASE("second-order convergence on smooth data") {
        const RankOne r{2, 1.0};
        const KernelFN f(r.data());
        auto deviation = [&](std::size_t m) {
            const NystromSlice s = solve_nystrom(f, 2.0, m);
            double worst = 0.0;
            for (std::size_t i = 0; i < s.nodes.size(); ++i)
                worst = std::max(worst, std::abs(s.values[i] - r.k(2.0, s.nodes[i])));
            return worst;
        };
        const double e1 = deviation(128);
        const double e2 = deviation(256);
        CHECK(e2 <= 0.55 * e1); // halves at worst; quarters for the 2nd-order rule
    }
    SUBCASE("agreement with the degenerate-kernel solve") {
        const SpectralData data = test_support::omega0_family(10, 0.9, 23);
        const AsymptoticDecomposition dec = decompose(data, 0.0);
        REQUIRE(dec.kappa_norm() <= 1.0);
        REQUIRE(dec.kappa_tilde_norm() <= 1.0);
        const KNEvaluator ev(data);
        double worst = 0.0;
        for (int gi = 1; gi <= 30; ++gi) {
            const double x = kPi * gi / 30.0;
            const NystromSlice s = solve_nystrom(ev.kernel(), x, 1024);
            for (std::size_t j = 0; j < s.nodes.size(); j += 37)
                worst = std::max(worst, std::abs(s.values[j] - ev(x, s.nodes[j])));
        }
        CHECK(worst <= 1e-5);
    }
}

TEST_CASE("parallel diagonal kernel is bit-identical to the serial reference") {
    const SpectralData data = test_support::omega0_family(9, 0.7, 29);
    const KernelFN kernel(data);
    const std::vector<double> xs = test_support::uniform_grid(160);
    const std::vector<double> serial = glm_diagonal_serial(kernel, xs);
    for (int threads : {1, 2, 4}) {
        const std::vector<double> parallel = glm_diagonal(kernel, xs, threads);
        REQUIRE(parallel.size() == serial.size());
        for (std::size_t i = 0; i < serial.size(); ++i)
            CHECK(parallel[i] == serial[i]);
    }
}

TEST_CASE("coefficient cache reuses solves per abscissa") {
    const RankOne r{1, 1.0};
    const KNEvaluator k(r.data());
    const double a = k(1.0, 0.5);
    const double b = k(1.0, 0.5);
    CHECK(a == b);
}

} // TEST_SUITE
