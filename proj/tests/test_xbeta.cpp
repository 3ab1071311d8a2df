#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "exbeta/gamma_kernel.hpp"
#include "exbeta/xbeta.hpp"
#include "oracles.hpp"

using namespace exbeta;

TEST_CASE("sigma = 0 reduces to the classical beta") {
    const QuadratureResult r = ext_beta({2, 3, 0});
    REQUIRE(r.converged);
    CHECK(r.value == doctest::Approx(1.0 / 12).epsilon(1e-12));

    const double grid[] = {0.5, 1, 2, 5.5, 10};
    for (double x : grid)
        for (double y : grid) {
            const QuadratureResult q = ext_beta({x, y, 0});
            REQUIRE(q.converged);
            const double ref = classical_beta(x, y);
            CHECK(std::abs(q.value - ref) <= 1e-12 * ref);
        }
}

TEST_CASE("symmetry in x and y") {
    const QuadratureResult a = ext_beta({1.7, 2.4, 0.9});
    const QuadratureResult b = ext_beta({2.4, 1.7, 0.9});
    REQUIRE(a.converged);
    REQUIRE(b.converged);
    CHECK(std::abs(a.value - b.value) <= 1e-13 * std::abs(a.value));

    oracles::TestRng rng(101);
    for (int i = 0; i < 500; ++i) {
        const double x = rng.log_uniform(0.1, 10);
        const double y = rng.log_uniform(0.1, 10);
        const double s = rng.log_uniform(0.1, 10);
        const double fwd = ext_beta({x, y, s}).value;
        const double rev = ext_beta({y, x, s}).value;
        CHECK(std::abs(fwd - rev) <= 1e-13 * std::abs(fwd));
    }
}

TEST_CASE("B_1(1,1) agrees with the Simpson oracle") {
    const QuadratureResult r = ext_beta({1, 1, 1});
    REQUIRE(r.converged);
    const double oracle =
        oracles::simpson_unit([](double t) { return std::exp(-1.0 / (t * (1.0 - t))); });
    CHECK(std::abs(r.value - oracle) <= 1e-10 * oracle);
}

TEST_CASE("strictly decreasing in sigma") {
    oracles::TestRng rng(7);
    for (int i = 0; i < 50; ++i) {
        const double x = rng.log_uniform(0.1, 10);
        const double y = rng.log_uniform(0.1, 10);
        const double s1 = rng.log_uniform(0.05, 5);
        const double s2 = s1 + rng.log_uniform(0.05, 5);
        CHECK(ext_beta({x, y, s1}).value > ext_beta({x, y, s2}).value);
    }
}

TEST_CASE("domain validation") {
    CHECK_THROWS_AS(ext_beta({1, 1, -0.5}), std::domain_error);
    CHECK_THROWS_AS(ext_beta({-1, 1, 0}), std::domain_error);
    CHECK_THROWS_AS(ext_beta({1, 0, 0}), std::domain_error);
    CHECK_NOTHROW(ext_beta({-1, -2, 0.5}));  // extended domain for sigma > 0
}

TEST_CASE("sigma derivative identity") {
    const ExtBetaPoint p{2, 2, 1};
    const QuadratureResult base = ext_beta_sigma_derivative(p, 0);
    CHECK(base.value == ext_beta(p).value);

    const QuadratureResult d1 = ext_beta_sigma_derivative(p, 1);
    const QuadratureResult b11 = ext_beta({1, 1, 1});
    REQUIRE(d1.converged);
    CHECK(d1.value == doctest::Approx(-b11.value).epsilon(1e-13));

    CHECK_THROWS_AS(ext_beta_sigma_derivative({2, 2, 0}, 1), std::domain_error);
    CHECK_THROWS_AS(ext_beta_sigma_derivative(p, -1), std::domain_error);
}

TEST_CASE("first sigma derivative matches central differences") {
    {
        const double h = 1e-4;
        const double fd =
            (ext_beta({3, 3, 0.5 + h}).value - ext_beta({3, 3, 0.5 - h}).value) / (2 * h);
        const double ident = ext_beta_sigma_derivative({3, 3, 0.5}, 1).value;
        CHECK(std::abs(fd - ident) <= 1e-5 * std::abs(ident));
    }
    oracles::TestRng rng(42);
    for (int i = 0; i < 20; ++i) {
        const double x = rng.uniform(1.5, 6);
        const double y = rng.uniform(1.5, 6);
        const double s = rng.uniform(0.5, 5);
        const double h = 1e-4;
        const double fd =
            (ext_beta({x, y, s + h}).value - ext_beta({x, y, s - h}).value) / (2 * h);
        const double ident = ext_beta_sigma_derivative({x, y, s}, 1).value;
        CHECK(std::abs(fd - ident) <= 1e-5 * std::abs(ident));
    }
}

TEST_CASE("far negative arguments flag non-convergence instead of lying") {
    QuadratureConfig cfg;
    cfg.max_levels = 4;  // starve the engine so the flag path is exercised
    const QuadratureResult r = ext_beta({-5, -5, 0.01}, cfg);
    CHECK_FALSE(r.converged);
}
