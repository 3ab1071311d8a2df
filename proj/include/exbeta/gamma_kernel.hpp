#pragma once

namespace exbeta {

// ln Gamma(x), x > 0. Throws std::domain_error for x <= 0.
double log_gamma(double x);

// Digamma psi(x) = Gamma'(x)/Gamma(x), x > 0. Recurrence shift into the
// asymptotic regime plus the Bernoulli tail; relative error well under 1e-12.
double digamma(double x);

// Classical Euler beta B(x,y), x, y > 0. Evaluated in log space.
double classical_beta(double x, double y);
double log_classical_beta(double x, double y);

// Rising factorial (a)_n = a(a+1)...(a+n-1); (a)_0 = 1 exactly.
// Overflow saturates to +/-inf, detectable with std::isinf.
double pochhammer(double a, int n);

// f(delta) = B(b+delta,c)^2 / (B(b+2*delta,c) * B(b,c)), b, c > 0, delta >= 0.
// f(0) = 1 and f is non-increasing in delta with values in (0, 1].
double coeff_f_delta(double b, double c, double delta);

// d/d delta of log f(delta), expressed through digamma:
//   2 psi(b+delta) + 2 psi(b+2 delta+c) - 2 psi(b+c+delta) - 2 psi(b+2 delta).
// Nonpositive on delta >= 0.
double coeff_f_delta_log_derivative(double b, double c, double delta);

}  // namespace exbeta
