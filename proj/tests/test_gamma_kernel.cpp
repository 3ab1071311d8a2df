#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "exbeta/gamma_kernel.hpp"
#include "oracles.hpp"

using namespace exbeta;

TEST_CASE("log_gamma reference points") {
    CHECK(std::abs(log_gamma(1.0)) <= 1e-14);
    CHECK(log_gamma(5.0) == doctest::Approx(std::log(24.0)).epsilon(1e-14));
    CHECK(log_gamma(0.5) == doctest::Approx(0.5 * std::log(M_PI)).epsilon(1e-14));
    CHECK_THROWS_AS(log_gamma(0.0), std::domain_error);
    CHECK_THROWS_AS(log_gamma(-2.5), std::domain_error);
}

TEST_CASE("digamma reference points and series oracle") {
    CHECK(digamma(1.0) == doctest::Approx(-oracles::kEulerGamma).epsilon(1e-13));
    CHECK(digamma(2.0) == doctest::Approx(1.0 - oracles::kEulerGamma).epsilon(1e-13));
    const double at_half = -oracles::kEulerGamma - 2.0 * std::log(2.0);
    CHECK(digamma(0.5) == doctest::Approx(at_half).epsilon(1e-13));
    CHECK(digamma(0.5) == doctest::Approx(oracles::digamma_series(0.5)).epsilon(1e-12));
    CHECK(digamma(3.7) == doctest::Approx(oracles::digamma_series(3.7)).epsilon(1e-12));
    CHECK_THROWS_AS(digamma(0.0), std::domain_error);
    CHECK_THROWS_AS(digamma(-1.0), std::domain_error);
}

TEST_CASE("classical beta reference points") {
    CHECK(classical_beta(1, 1) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(classical_beta(2, 3) == doctest::Approx(1.0 / 12).epsilon(1e-13));
    CHECK(classical_beta(0.5, 0.5) == doctest::Approx(M_PI).epsilon(1e-13));
    CHECK_THROWS_AS(classical_beta(0.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(classical_beta(1.0, -3.0), std::domain_error);
}

TEST_CASE("classical beta symmetry and recurrence") {
    oracles::TestRng rng(5);
    for (int i = 0; i < 200; ++i) {
        const double x = rng.log_uniform(0.1, 20);
        const double y = rng.log_uniform(0.1, 20);
        CHECK(classical_beta(x, y) == classical_beta(y, x));
        const double lhs = classical_beta(x + 1, y);
        const double rhs = classical_beta(x, y) * x / (x + y);
        CHECK(std::abs(lhs - rhs) <= 1e-12 * std::abs(rhs));
    }
}

TEST_CASE("pochhammer") {
    CHECK(pochhammer(3.0, 0) == 1.0);
    CHECK(pochhammer(2.0, 3) == 24.0);
    CHECK(pochhammer(0.5, 2) == 0.75);
    CHECK(pochhammer(-1.5, 2) == doctest::Approx(0.75));
    CHECK(std::isinf(pochhammer(1e300, 3)));
    CHECK_THROWS_AS(pochhammer(1.0, -1), std::domain_error);
}

TEST_CASE("coefficient function f(delta)") {
    CHECK(coeff_f_delta(1, 1, 0) == 1.0);
    CHECK(coeff_f_delta(1, 1, 1) == doctest::Approx(0.75).epsilon(1e-13));
    // Independent high-precision gamma oracle value.
    CHECK(coeff_f_delta(2, 3, 0.7) ==
          doctest::Approx(0.87944746772882287).epsilon(1e-13));
    CHECK_THROWS_AS(coeff_f_delta(0, 1, 1), std::domain_error);
    CHECK_THROWS_AS(coeff_f_delta(1, 1, -0.5), std::domain_error);
}

TEST_CASE("f(delta) decreasing with nonpositive log-derivative") {
    oracles::TestRng rng(17);
    for (int trial = 0; trial < 5; ++trial) {
        const double b = rng.log_uniform(0.1, 10);
        const double c = rng.log_uniform(0.1, 10);
        double prev = 1.0;
        for (int i = 0; i <= 50; ++i) {
            const double delta = 0.1 * i;
            const double f = coeff_f_delta(b, c, delta);
            CHECK(f <= 1.0 + 1e-15);
            CHECK(f <= prev + 1e-14);
            CHECK(coeff_f_delta_log_derivative(b, c, delta) <= 1e-12);
            prev = f;
        }
    }
}
