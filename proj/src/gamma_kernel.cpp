#include "exbeta/gamma_kernel.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace exbeta {
namespace {

void require_positive(double v, const char* name) {
    if (!(v > 0.0))
        throw std::domain_error(std::string(name) + " must be positive");
}

}  // namespace

double log_gamma(double x) {
    require_positive(x, "log_gamma argument");
#if defined(__GLIBC__)
    int sign = 0;
    return ::lgamma_r(x, &sign);
#else
    return std::lgamma(x);
#endif
}

double digamma(double x) {
    require_positive(x, "digamma argument");
    double acc = 0.0;
    while (x < 10.0) {
        acc -= 1.0 / x;
        x += 1.0;
    }
    // psi(x) ~ ln x - 1/(2x) - sum B_{2k}/(2k x^{2k}); truncated after x^-14,
    // tail < 5e-14 absolute at x = 10.
    const double u = 1.0 / (x * x);
    const double tail =
        u * (1.0 / 12 -
             u * (1.0 / 120 -
                  u * (1.0 / 252 -
                       u * (1.0 / 240 -
                            u * (1.0 / 132 - u * (691.0 / 32760 - u / 12))))));
    return acc + std::log(x) - 0.5 / x - tail;
}

double log_classical_beta(double x, double y) {
    require_positive(x, "beta argument x");
    require_positive(y, "beta argument y");
    return log_gamma(x) + log_gamma(y) - log_gamma(x + y);
}

double classical_beta(double x, double y) {
    return std::exp(log_classical_beta(x, y));
}

double pochhammer(double a, int n) {
    if (n < 0) throw std::domain_error("pochhammer order must be nonnegative");
    double p = 1.0;
    for (int k = 0; k < n; ++k) p *= a + k;
    return p;
}

double coeff_f_delta(double b, double c, double delta) {
    require_positive(b, "coeff_f_delta b");
    require_positive(c, "coeff_f_delta c");
    if (delta < 0.0) throw std::domain_error("coeff_f_delta delta must be >= 0");
    // At delta = 0 all three log-betas are the same double, so the exponent
    // cancels to exactly 0 and f(0) = 1 exactly.
    const double lb1 = log_classical_beta(b + delta, c);
    const double lb2 = log_classical_beta(b + 2 * delta, c);
    const double lb0 = log_classical_beta(b, c);
    return std::exp(2.0 * lb1 - lb2 - lb0);
}

double coeff_f_delta_log_derivative(double b, double c, double delta) {
    require_positive(b, "coeff_f_delta b");
    require_positive(c, "coeff_f_delta c");
    if (delta < 0.0) throw std::domain_error("coeff_f_delta delta must be >= 0");
    return 2.0 * digamma(b + delta) + 2.0 * digamma(b + 2 * delta + c) -
           2.0 * digamma(b + c + delta) - 2.0 * digamma(b + 2 * delta);
}

}  // namespace exbeta
