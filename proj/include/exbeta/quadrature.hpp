#pragma once

#include <functional>

namespace exbeta {

// Integrand over the open unit interval. The engine hands the node t together
// with 1-t computed directly from the transform (no cancellation), so weights
// like t^{x-1}(1-t)^{y-1} stay accurate arbitrarily close to the endpoints.
using UnitIntegrand = std::function<double(double t, double one_minus_t)>;

struct QuadratureConfig {
    double abs_tol = 1e-14;
    double rel_tol = 1e-12;
    int max_levels = 12;              // refinement depth (engine caps at 14)
    long max_evaluations = 2'000'000;
};

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;  // |last level - previous level|, absolute
    long evaluations = 0;
    bool converged = false;
};

// Tanh-sinh (double-exponential) quadrature over (0,1).
//
// The substitution t = 1/(1 + exp(-pi*sinh(u))) makes the transformed
// integrand decay doubly exponentially in u, which absorbs both algebraic
// endpoint singularities t^{x-1}, x > 0, and essential decay of the
// exp(-sigma/(t(1-t))) kind without scheme switching. Levels halve the node
// spacing; convergence is declared when two successive levels agree within
// max(abs_tol, rel_tol*|value|). Abscissae closer than 1e-300 to an endpoint
// are never generated.
//
// Throws std::invalid_argument on a bad config and std::domain_error if the
// integrand produces a non-finite value at an interior node. Non-convergence
// within max_levels/max_evaluations is reported via converged=false with the
// best estimate, not an exception.
QuadratureResult integrate_unit(const UnitIntegrand& f, const QuadratureConfig& cfg = {});

// Convenience overload for integrands that do not need 1-t.
QuadratureResult integrate_unit(const std::function<double(double)>& f,
                                const QuadratureConfig& cfg = {});

}  // namespace exbeta
