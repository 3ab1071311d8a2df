#pragma once

#include "exbeta/quadrature.hpp"

namespace exbeta {

// Evaluation point of the extended beta function
//   B_sigma(x,y) = int_0^1 t^{x-1} (1-t)^{y-1} exp(-sigma/(t(1-t))) dt.
// sigma = 0 requires x, y > 0 (classical beta domain); sigma > 0 admits any
// real x, y because the exponential factor dominates all algebraic endpoint
// growth.
struct ExtBetaPoint {
    double x;
    double y;
    double sigma;
};

// B_sigma(x,y) by tanh-sinh quadrature of the log-space integrand.
// Throws std::domain_error on invariant violations; quadrature
// non-convergence is reported through the result flag.
QuadratureResult ext_beta(const ExtBetaPoint& p, const QuadratureConfig& cfg = {});

// d^n/d sigma^n B_sigma(x,y) = (-1)^n B_sigma(x-n, y-n).
// n = 0 is ext_beta itself; n >= 1 requires sigma > 0.
QuadratureResult ext_beta_sigma_derivative(const ExtBetaPoint& p, int n,
                                           const QuadratureConfig& cfg = {});

}  // namespace exbeta
