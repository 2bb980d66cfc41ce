#include <cmath>
#include <random>
#include <set>

#include <doctest.h>

#include "seashell/errors.hpp"
#include "seashell/spectral_data.hpp"
#include "test_support.hpp"

using namespace seashell;
using test_support::kPi;

TEST_SUITE("spectral_data") {

TEST_CASE("validate: membership report") {
    SUBCASE("zero-potential data") {
        SpectralData d;
        d.lambda = {0.0, 1.0, 4.0};
        d.alpha = {kPi, kPi / 2.0, kPi / 2.0};
        const MembershipReport rep = validate(d, 1.0);
        CHECK(rep.in_omega);
        CHECK(rep.in_omega0m); // ||kappa~|| = 1/pi <= 1
        CHECK(rep.finite_rank_n == 0);
    }
    SUBCASE("single perturbed norming constant") {
        SpectralData d;
        d.lambda = {0.0, 1.0, 4.0};
        d.alpha = {kPi, kPi / (kPi + 2.0), kPi / 2.0};
        const MembershipReport rep = validate(d);
        CHECK(rep.in_omega);
        CHECK(rep.finite_rank_n == 1);
    }
    SUBCASE("ordering violation is rejected") {
        SpectralData d;
        d.lambda = {4.0, 1.0, 0.0};
        d.alpha = {kPi / 2.0, kPi / 2.0, kPi / 2.0};
        CHECK_THROWS_AS(validate(d), ValidationError);
    }
    SUBCASE("nonpositive alpha is rejected") {
        SpectralData d;
        d.lambda = {0.0, 1.0};
        d.alpha = {kPi, -0.5};
        CHECK_THROWS_AS(validate(d), ValidationError);
    }
    SUBCASE("M gate controls Omega_{0,M} membership") {
        SpectralData d = SpectralData::trivial(3);
        CHECK_FALSE(validate(d).in_omega0m);           // no bound supplied
        CHECK_FALSE(validate(d, 0.1).in_omega0m);      // below the 1/pi floor
        CHECK(validate(d, 0.5).in_omega0m);
        d.M = 0.5;
        CHECK(validate(d).in_omega0m);                 // bound from the file
    }
}

TEST_CASE("decompose: pinned splits") {
    SUBCASE("zero-potential data") {
        const AsymptoticDecomposition dec = decompose(SpectralData::trivial(5), 0.0);
        CHECK(dec.kappa_tilde[0] == doctest::Approx(-1.0 / kPi).epsilon(1e-15));
        for (std::size_t n = 0; n < 5; ++n) {
            CHECK(std::abs(dec.kappa[n]) < 1e-14);
            if (n >= 1) CHECK(std::abs(dec.kappa_tilde[n]) < 1e-14);
        }
    }
    SUBCASE("lambda_0 = 1 alone gives kappa_0 = 1") {
        SpectralData d;
        d.lambda = {1.0};
        d.alpha = {kPi};
        CHECK(decompose(d, 0.0).kappa[0] == doctest::Approx(1.0).epsilon(1e-15));
    }
    SUBCASE("omega shifts kappa_n by -omega/(pi(n+1)) relative to omega = 0") {
        const SpectralData d = test_support::omega0_family(6, 0.5, 41);
        const AsymptoticDecomposition base = decompose(d, 0.0);
        const AsymptoticDecomposition shifted = decompose(d, kPi);
        for (std::size_t n = 0; n < d.size(); ++n)
            CHECK(shifted.kappa[n] ==
                  doctest::Approx(base.kappa[n] - 1.0).epsilon(1e-13));
    }
    SUBCASE("negative eigenvalues have no real split") {
        SpectralData d;
        d.lambda = {-1.0, 1.0};
        d.alpha = {kPi, kPi / 2.0};
        CHECK_THROWS_AS(decompose(d, 0.0), ValidationError);
        d.lambda = {0.0, -0.5};
        CHECK_THROWS_AS(decompose(d, 0.0), ValidationError);
    }
}

TEST_CASE("decompose inverts synthesis to 1e-13") {
    std::mt19937 rng(97);
    std::uniform_real_distribution<double> coef(-0.9, 0.9);
    std::uniform_real_distribution<double> om(-2.0, 2.0);
    for (int trial = 0; trial < 100; ++trial) {
        const double omega = om(rng);
        const std::size_t len = 1 + static_cast<std::size_t>(rng() % 12);
        std::vector<double> kappa(len), kat(len);
        SpectralData d;
        bool representable = true; // needs rho_n >= 0 and alpha_n > 0
        for (std::size_t n = 0; n < len; ++n) {
            kappa[n] = coef(rng);
            kat[n] = coef(rng);
            const double np1 = static_cast<double>(n) + 1.0;
            const double rho =
                static_cast<double>(n) + omega / (kPi * np1) + kappa[n] / np1;
            const double inv_alpha = 2.0 / kPi + kat[n] / np1;
            if (rho < 0.0 || inv_alpha <= 0.0) representable = false;
            d.lambda.push_back(rho * rho);
            d.alpha.push_back(1.0 / inv_alpha);
        }
        if (!representable) continue;
        bool increasing = true;
        for (std::size_t n = 1; n < len; ++n)
            if (!(d.lambda[n - 1] < d.lambda[n])) increasing = false;
        if (!increasing) continue;
        const AsymptoticDecomposition dec = decompose(d, omega);
        for (std::size_t n = 0; n < len; ++n) {
            CHECK(dec.kappa[n] ==
                  doctest::Approx(kappa[n]).epsilon(1e-13).scale(1.0));
            CHECK(dec.kappa_tilde[n] ==
                  doctest::Approx(kat[n]).epsilon(1e-13).scale(1.0));
        }
    }
}

TEST_CASE("estimate_omega") {
    SpectralData d = SpectralData::trivial(3);
    CHECK(estimate_omega(d) == 0.0);

    SpectralData e;
    e.lambda = {1.0, 2.0, 5.0};
    e.alpha = {kPi, kPi / 2.0, kPi / 2.0};
    CHECK(estimate_omega(e) == 1.0);

    SpectralData one;
    one.lambda = {0.5};
    one.alpha = {kPi};
    CHECK(estimate_omega(one) == 0.5);

    // shift equivariance, exact for representable shifts
    for (double c : {1.0, 2.5}) {
        SpectralData shifted = e;
        for (double& l : shifted.lambda) l += c;
        CHECK(estimate_omega(shifted) == estimate_omega(e) + c);
    }
}

TEST_CASE("finite-rank detection follows the counter algorithm") {
    auto stream_from = [](std::set<std::size_t> nontrivial) {
        return [nontrivial](std::size_t n) {
            if (nontrivial.count(n))
                return std::pair<double, double>(SpectralData::trivial_lambda(n) + 0.5,
                                                 kPi / 2.0);
            return std::pair<double, double>(SpectralData::trivial_lambda(n),
                                             SpectralData::trivial_alpha(n));
        };
    };

    SUBCASE("pinned traces") {
        CHECK(detect_finite_rank(PairStream(stream_from({1})), 2) == 2);
        CHECK(detect_finite_rank(PairStream(stream_from({})), 1) == 1);
        CHECK(detect_finite_rank(PairStream(stream_from({2, 4})), 3) == 5);
    }
    SUBCASE("read cap turns a violated promise into an error") {
        // nontrivial every 2nd index: never 3 consecutive trivial pairs
        PairStream bad = [](std::size_t n) {
            if (n % 2 == 0)
                return std::pair<double, double>(SpectralData::trivial_lambda(n) + 1.0,
                                                 kPi / 2.0);
            return std::pair<double, double>(SpectralData::trivial_lambda(n),
                                             SpectralData::trivial_alpha(n));
        };
        CHECK_THROWS_AS(detect_finite_rank(bad, 3, 0.0, 500), NumericalError);
    }
    SUBCASE("compliant streams: N = last nontrivial index + 1") {
        // generate supports whose gaps stay below n_tilde, so the stream
        // honors the trivial-tail promise
        std::mt19937 rng(3);
        for (int trial = 0; trial < 50; ++trial) {
            const std::size_t n_tilde = 1 + rng() % 4;
            std::set<std::size_t> support;
            std::size_t cur = 0;
            const std::size_t count = 1 + rng() % 4;
            for (std::size_t k = 0; k < count; ++k) {
                cur += 1 + rng() % n_tilde;
                support.insert(cur);
            }
            const std::size_t n =
                detect_finite_rank(PairStream(stream_from(support)), n_tilde);
            CHECK(n == *support.rbegin() + 1);
            for (std::size_t idx : support) CHECK(idx <= n);
            // entries beyond N + n_tilde were never read and cannot matter
            auto tampered = support;
            tampered.insert(n + n_tilde + 1);
            CHECK(detect_finite_rank(PairStream(stream_from(tampered)), n_tilde) == n);
        }
    }
    SUBCASE("tolerance-based trivial test") {
        SpectralData d = SpectralData::trivial(4);
        d.lambda[2] = 4.0 + 1e-9; // quantized tail
        CHECK(detect_finite_rank(d, 2) == 3);
        CHECK(detect_finite_rank(d, 2, 1e-8) == 1);
    }
}

} // TEST_SUITE
