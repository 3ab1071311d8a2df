#pragma once

#include <optional>

#include "exbeta/quadrature.hpp"

namespace exbeta {

enum class Route { series, integral };

// Parameter bundle for the extended confluent hypergeometric function
// Phi_sigma(b;c;x) and the extended Gaussian hypergeometric function
// F_sigma(a,b;c;x). `a` is only meaningful for the Gaussian case.
//
// Invariants: c > b > 0 (b = 0 is accepted and yields the constant 1, the
// sole surviving series term), sigma >= 0, and |x| < 1 for the Gaussian
// function on either route.
struct HypergeomParams {
    std::optional<double> a;
    double b = 1.0;
    double c = 2.0;
    double sigma = 0.0;
    double x = 0.0;
    Route route = Route::integral;
};

// Truncation control for the series routes. A series is declared truncated
// only after `consecutive_small` successive terms each fall below
// rel_term_tol * |partial sum|.
struct SeriesControl {
    double rel_term_tol = 1e-15;
    int consecutive_small = 3;
    int max_terms = 10000;
};

// Phi_sigma(b;c;x). Series coefficients are B_sigma(b+n, c-b)/B(b, c-b),
// matching the integral representation
//   Phi_sigma(b;c;x) = 1/B(b,c-b) int_0^1 t^{b-1}(1-t)^{c-b-1}
//                      exp(x t - sigma/(t(1-t))) dt.
// Negative x on the series route goes through the Kummer-type reflection;
// the integral route evaluates any real x directly.
QuadratureResult echf(const HypergeomParams& params, const SeriesControl& sc = {},
                      const QuadratureConfig& cfg = {});

// Phi_sigma(b;c;x) for x < 0 via the reflection identity
//   Phi_sigma(b;c;x) = e^x Phi_sigma(c-b;c;-x).
QuadratureResult echf_reflect(const HypergeomParams& params, const SeriesControl& sc = {},
                              const QuadratureConfig& cfg = {});

// d^n/dx^n Phi_sigma(b;c;x) = (b)_n/(c)_n Phi_sigma(b+n;c+n;x).
QuadratureResult echf_x_derivative(const HypergeomParams& params, int n,
                                   const SeriesControl& sc = {},
                                   const QuadratureConfig& cfg = {});

// F_sigma(a,b;c;x), |x| < 1. Series coefficients share the extended-beta
// ratio of the confluent case with the extra (a)_n factor; the integral
// route carries (1 - x t)^{-a}.
QuadratureResult eghf(const HypergeomParams& params, const SeriesControl& sc = {},
                      const QuadratureConfig& cfg = {});

}  // namespace exbeta
