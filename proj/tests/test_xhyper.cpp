#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "exbeta/gamma_kernel.hpp"
#include "exbeta/xbeta.hpp"
#include "exbeta/xhyper.hpp"
#include "oracles.hpp"

using namespace exbeta;

namespace {

HypergeomParams confluent(double b, double c, double sigma, double x, Route route) {
    HypergeomParams p;
    p.b = b;
    p.c = c;
    p.sigma = sigma;
    p.x = x;
    p.route = route;
    return p;
}

HypergeomParams gaussian(double a, double b, double c, double sigma, double x, Route route) {
    HypergeomParams p = confluent(b, c, sigma, x, route);
    p.a = a;
    return p;
}

}  // namespace

TEST_CASE("echf classical reduction at sigma = 0") {
    for (Route route : {Route::series, Route::integral}) {
        const QuadratureResult r = echf(confluent(1, 2, 0, 1, route));
        REQUIRE(r.converged);
        CHECK(r.value == doctest::Approx(std::exp(1.0) - 1.0).epsilon(1e-12));
    }
}

TEST_CASE("echf at x = 0 keeps only the n = 0 term") {
    const QuadratureResult r = echf(confluent(1.5, 3, 0.8, 0, Route::series));
    REQUIRE(r.converged);
    const double expected = ext_beta({1.5, 1.5, 0.8}).value / classical_beta(1.5, 1.5);
    CHECK(r.value == doctest::Approx(expected).epsilon(1e-11));
    CHECK(r.value == doctest::Approx(0.020653757537219344).epsilon(1e-11));
}

TEST_CASE("echf routes agree") {
    const double series = echf(confluent(2, 4.5, 1.2, 0.7, Route::series)).value;
    const double integral = echf(confluent(2, 4.5, 1.2, 0.7, Route::integral)).value;
    CHECK(std::abs(series - integral) <= 1e-9 * std::abs(integral));
}

TEST_CASE("echf reflection identity") {
    const QuadratureResult classical = echf_reflect(confluent(1, 2, 0, -1, Route::series));
    REQUIRE(classical.converged);
    CHECK(classical.value == doctest::Approx(1.0 - std::exp(-1.0)).epsilon(1e-12));

    const double reflected = echf_reflect(confluent(1.5, 3, 0.5, -0.4, Route::integral)).value;
    const double direct = echf(confluent(1.5, 3, 0.5, -0.4, Route::integral)).value;
    CHECK(std::abs(reflected - direct) <= 1e-9 * std::abs(direct));

    const double near_zero = echf_reflect(confluent(1.5, 3, 0.5, -1e-12, Route::integral)).value;
    const double at_zero = echf(confluent(1.5, 3, 0.5, 0, Route::integral)).value;
    CHECK(std::abs(near_zero - at_zero) <= 1e-9 * std::abs(at_zero));

    CHECK_THROWS_AS(echf_reflect(confluent(1, 2, 0, 0.5, Route::series)), std::domain_error);
}

TEST_CASE("echf series route handles negative x through reflection") {
    const double series = echf(confluent(1.2, 2.5, 0.3, -2.0, Route::series)).value;
    const double integral = echf(confluent(1.2, 2.5, 0.3, -2.0, Route::integral)).value;
    CHECK(std::abs(series - integral) <= 1e-9 * std::abs(integral));
}

TEST_CASE("eghf classical reduction at sigma = 0") {
    for (Route route : {Route::series, Route::integral}) {
        const QuadratureResult r = eghf(gaussian(1, 1, 2, 0, 0.5, route));
        REQUIRE(r.converged);
        CHECK(r.value == doctest::Approx(2.0 * std::log(2.0)).epsilon(1e-12));
    }
}

TEST_CASE("eghf at x = 0 keeps only the n = 0 term") {
    const QuadratureResult r = eghf(gaussian(2.5, 1.2, 3.3, 0.6, 0, Route::series));
    REQUIRE(r.converged);
    const double expected = ext_beta({1.2, 2.1, 0.6}).value / classical_beta(1.2, 2.1);
    CHECK(r.value == doctest::Approx(expected).epsilon(1e-11));
}

TEST_CASE("eghf routes agree") {
    const double series = eghf(gaussian(1.5, 2, 5, 1, 0.8, Route::series)).value;
    const double integral = eghf(gaussian(1.5, 2, 5, 1, 0.8, Route::integral)).value;
    CHECK(std::abs(series - integral) <= 1e-9 * std::abs(integral));
}

TEST_CASE("route agreement over a random parameter sweep") {
    oracles::TestRng rng(2024);
    for (int i = 0; i < 20; ++i) {
        const double b = rng.log_uniform(0.1, 5);
        const double c = b + rng.log_uniform(0.1, 5);
        const double sigma = rng.log_uniform(0.1, 5);
        const double x = rng.uniform(0, 5);
        const double s = echf(confluent(b, c, sigma, x, Route::series)).value;
        const double q = echf(confluent(b, c, sigma, x, Route::integral)).value;
        CHECK(std::abs(s - q) <= 1e-9 * std::abs(q));
    }
    for (int i = 0; i < 20; ++i) {
        const double a = rng.log_uniform(0.1, 5);
        const double b = rng.log_uniform(0.1, 5);
        const double c = b + rng.log_uniform(0.1, 5);
        const double sigma = rng.log_uniform(0.1, 5);
        const double x = rng.uniform(-0.9, 0.9);
        const double s = eghf(gaussian(a, b, c, sigma, x, Route::series)).value;
        const double q = eghf(gaussian(a, b, c, sigma, x, Route::integral)).value;
        CHECK(std::abs(s - q) <= 1e-9 * std::abs(q));
    }
}

TEST_CASE("echf positivity") {
    oracles::TestRng rng(9);
    for (int i = 0; i < 30; ++i) {
        const double b = rng.log_uniform(0.1, 5);
        const double c = b + rng.log_uniform(0.1, 5);
        const double sigma = rng.log_uniform(0.1, 5);
        const double x = rng.uniform(-5, 5);
        CHECK(echf(confluent(b, c, sigma, x, Route::integral)).value > 0.0);
    }
}

TEST_CASE("eghf series term ratio approaches x") {
    // |term_{n+1}/term_n| -> |x| as n grows; checked at n = 200.
    const double a = 1.5, b = 2, c = 5, sigma = 1, x = 0.8;
    const int n = 200;
    const double beta_n = ext_beta({b + n, c - b, sigma}).value;
    const double beta_n1 = ext_beta({b + n + 1, c - b, sigma}).value;
    const double ratio = (beta_n1 / beta_n) * (a + n) / (n + 1) * x;
    CHECK(std::abs(std::abs(ratio) - std::abs(x)) <= 0.05);
}

TEST_CASE("echf x-derivative identity") {
    const HypergeomParams base = confluent(1, 2, 0, 0.3, Route::series);
    CHECK(echf_x_derivative(base, 0).value == echf(base).value);

    const double d1 = echf_x_derivative(base, 1).value;
    CHECK(d1 == doctest::Approx(0.5 * 1.2244185488177295).epsilon(1e-11));
    CHECK(d1 == doctest::Approx(0.5 * oracles::classical_1f1(2, 3, 0.3)).epsilon(1e-11));

    const HypergeomParams p = confluent(2, 4, 0.7, 0.5, Route::integral);
    const double h = 1e-4;
    const double fd = (echf(confluent(2, 4, 0.7, 0.5 + h, Route::integral)).value -
                       echf(confluent(2, 4, 0.7, 0.5 - h, Route::integral)).value) /
                      (2 * h);
    CHECK(std::abs(echf_x_derivative(p, 1).value - fd) <= 1e-6 * std::abs(fd));
}

TEST_CASE("b = 0 gives the constant function 1") {
    CHECK(echf(confluent(0, 2, 1, 3, Route::series)).value == 1.0);
    CHECK(echf(confluent(0, 2, 1, 3, Route::integral)).value == 1.0);
    CHECK(eghf(gaussian(1.5, 0, 2, 1, 0.5, Route::integral)).value == 1.0);
    CHECK(echf_x_derivative(confluent(0, 2, 1, 3, Route::series), 1).value == 0.0);
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(echf(confluent(2, 2, 0, 1, Route::series)), std::domain_error);
    CHECK_THROWS_AS(echf(confluent(3, 2, 0, 1, Route::series)), std::domain_error);
    CHECK_THROWS_AS(echf(confluent(1, 2, -1, 1, Route::series)), std::domain_error);
    CHECK_THROWS_AS(echf(gaussian(1, 1, 2, 0, 0.5, Route::series)), std::invalid_argument);
    CHECK_THROWS_AS(eghf(confluent(1, 2, 0, 0.5, Route::series)), std::invalid_argument);
    CHECK_THROWS_AS(eghf(gaussian(1, 1, 2, 0, 1.0, Route::series)), std::domain_error);
    CHECK_THROWS_AS(eghf(gaussian(1, 1, 2, 0, -1.2, Route::integral)), std::domain_error);
    SeriesControl sc;
    sc.max_terms = 0;
    CHECK_THROWS_AS(echf(confluent(1, 2, 0, 1, Route::series), sc), std::invalid_argument);
}

TEST_CASE("series non-convergence is flagged") {
    SeriesControl sc;
    sc.max_terms = 3;
    const QuadratureResult r = echf(confluent(1, 2, 0.5, 4, Route::series), sc);
    CHECK_FALSE(r.converged);
}
