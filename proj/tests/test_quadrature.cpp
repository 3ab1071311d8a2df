#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "exbeta/quadrature.hpp"
#include "oracles.hpp"

using exbeta::QuadratureConfig;
using exbeta::QuadratureResult;
using exbeta::UnitIntegrand;
using exbeta::integrate_unit;

namespace {

double bump(double t, double omt) { return std::exp(-1.0 / (t * omt)); }

// int_0^1 exp(-1/(t(1-t))) dt; the Simpson truncation to [1e-6, 1-1e-6]
// discards tails below exp(-1e6).
constexpr double kBumpIntegral = 0.00702985840660965624;

}  // namespace

TEST_CASE("constant integrand is exact") {
    const QuadratureResult r = integrate_unit([](double) { return 1.0; });
    CHECK(r.converged);
    CHECK(r.evaluations >= 1);
    CHECK(r.value == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(r.error_estimate <= 1e-14);
}

TEST_CASE("inverse square root endpoint singularity") {
    const QuadratureResult r = integrate_unit([](double t) { return 1.0 / std::sqrt(t); });
    CHECK(r.converged);
    CHECK(std::abs(r.value - 2.0) <= 1e-12 * 2.0);
}

TEST_CASE("essential endpoint decay agrees with the Simpson oracle") {
    const QuadratureResult r = integrate_unit(UnitIntegrand(bump));
    REQUIRE(r.converged);
    const double oracle = oracles::simpson_unit([](double t) { return bump(t, 1.0 - t); });
    CHECK(std::abs(r.value - oracle) <= 1e-10 * std::abs(oracle));
    CHECK(r.value == doctest::Approx(kBumpIntegral).epsilon(1e-12));
}

TEST_CASE("linearity over random polynomials") {
    oracles::TestRng rng(11);
    const QuadratureConfig cfg;
    for (int iter = 0; iter < 25; ++iter) {
        std::vector<double> cf(6), cg(6);
        for (auto& c : cf) c = rng.uniform(-1, 1);
        for (auto& c : cg) c = rng.uniform(-1, 1);
        auto poly = [](const std::vector<double>& c, double t) {
            double v = 0.0;
            for (std::size_t i = c.size(); i-- > 0;) v = v * t + c[i];
            return v;
        };
        const double alpha = rng.uniform(-2, 2), beta = rng.uniform(-2, 2);
        const double fi = integrate_unit([&](double t) { return poly(cf, t); }, cfg).value;
        const double gi = integrate_unit([&](double t) { return poly(cg, t); }, cfg).value;
        const double combined =
            integrate_unit([&](double t) { return alpha * poly(cf, t) + beta * poly(cg, t); },
                           cfg)
                .value;
        const double expected = alpha * fi + beta * gi;
        const double scale = std::abs(alpha * fi) + std::abs(beta * gi) + 1e-30;
        CHECK(std::abs(combined - expected) <= 10 * cfg.rel_tol * scale);
    }
}

TEST_CASE("reflection symmetry of the extended-beta family") {
    oracles::TestRng rng(23);
    for (int iter = 0; iter < 20; ++iter) {
        const double x = rng.log_uniform(0.2, 5);
        const double y = rng.log_uniform(0.2, 5);
        const double sigma = rng.log_uniform(0.1, 3);
        auto f = [&](double t, double omt) {
            return std::exp((x - 1) * std::log(t) + (y - 1) * std::log(omt) -
                            sigma / (t * omt));
        };
        auto reflected = [&](double t, double omt) { return f(omt, t); };
        const QuadratureResult a = integrate_unit(UnitIntegrand(f));
        const QuadratureResult b = integrate_unit(UnitIntegrand(reflected));
        REQUIRE(a.converged);
        REQUIRE(b.converged);
        CHECK(std::abs(a.value - b.value) <= 1e-12 * std::abs(a.value));
    }
}

TEST_CASE("refinement never worsens the oracle discrepancy") {
    const double oracle = oracles::simpson_unit([](double t) { return bump(t, 1.0 - t); });
    QuadratureConfig cfg;
    cfg.abs_tol = 1e-280;  // force full depth
    cfg.rel_tol = 1e-280;
    double prev = std::numeric_limits<double>::infinity();
    for (int levels = 1; levels <= 10; ++levels) {
        cfg.max_levels = levels;
        const double v = integrate_unit(UnitIntegrand(bump), cfg).value;
        const double disc = std::abs(v - oracle);
        CHECK(disc <= prev + 4e-16 * std::abs(oracle));
        prev = disc;
    }
}

TEST_CASE("deterministic for fixed integrand and config") {
    const QuadratureResult a = integrate_unit(UnitIntegrand(bump));
    const QuadratureResult b = integrate_unit(UnitIntegrand(bump));
    CHECK(a.value == b.value);
    CHECK(a.error_estimate == b.error_estimate);
    CHECK(a.evaluations == b.evaluations);
}

TEST_CASE("non-finite integrand values are rejected") {
    CHECK_THROWS_AS(
        integrate_unit([](double t) { return t < 0.5 ? 0.0 : std::nan(""); }),
        std::domain_error);
    CHECK_THROWS_AS(integrate_unit([](double t) { return 1.0 / (t - 0.5); }),
                    std::domain_error);
}

TEST_CASE("invalid configuration is rejected") {
    QuadratureConfig cfg;
    cfg.abs_tol = 0.0;
    CHECK_THROWS_AS(integrate_unit([](double) { return 1.0; }, cfg), std::invalid_argument);
    cfg = {};
    cfg.max_levels = 0;
    CHECK_THROWS_AS(integrate_unit([](double) { return 1.0; }, cfg), std::invalid_argument);
}

TEST_CASE("non-convergence is flagged, not thrown") {
    QuadratureConfig cfg;
    cfg.max_levels = 2;
    cfg.abs_tol = 1e-280;
    cfg.rel_tol = 1e-280;
    const QuadratureResult r = integrate_unit(UnitIntegrand(bump), cfg);
    CHECK_FALSE(r.converged);
    CHECK(r.error_estimate >= 0.0);
}
