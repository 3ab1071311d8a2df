#include "exbeta/xhyper.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "exbeta/gamma_kernel.hpp"
#include "exbeta/xbeta.hpp"

namespace exbeta {
namespace {

constexpr double kLogUnderflow = -745.0;

void validate_common(const HypergeomParams& p) {
    if (!std::isfinite(p.b) || !std::isfinite(p.c) || !std::isfinite(p.x))
        throw std::domain_error("hypergeometric parameters must be finite");
    if (p.b < 0.0) throw std::domain_error("hypergeometric b must be >= 0");
    if (p.b == 0.0) {
        if (!(p.c > 0.0)) throw std::domain_error("hypergeometric c must be positive");
    } else if (!(p.c > p.b)) {
        throw std::domain_error("hypergeometric parameters require c > b");
    }
    if (p.sigma < 0.0 || !std::isfinite(p.sigma))
        throw std::domain_error("hypergeometric sigma must be >= 0");
}

void validate_series_control(const SeriesControl& sc) {
    if (!(sc.rel_term_tol > 0.0) || sc.consecutive_small < 1 || sc.max_terms < 1)
        throw std::invalid_argument("invalid series control");
}

// b = 0 leaves only the n = 0 term of either series.
QuadratureResult constant_one() {
    QuadratureResult r;
    r.value = 1.0;
    r.error_estimate = 0.0;
    r.evaluations = 1;
    r.converged = true;
    return r;
}

// Shared series loop: sum_n  [B_sigma(b+n, c-b)/B(b, c-b)] * m_n
// with m_n = x^n/n! (confluent) or (a)_n x^n/n! (Gaussian).
QuadratureResult hyper_series(const HypergeomParams& p, const SeriesControl& sc,
                              const QuadratureConfig& cfg, bool gaussian) {
    const double y = p.c - p.b;
    const double log_b0 = log_classical_beta(p.b, y);

    QuadratureResult res;
    double sum = 0.0;
    double err = 0.0;
    double multiplier = 1.0;  // m_n
    int small_run = 0;

    for (int n = 0; n < sc.max_terms; ++n) {
        if (n > 0) {
            multiplier *= p.x / n;
            if (gaussian) multiplier *= *p.a + (n - 1);
        }
        double beta_n, beta_err;
        if (p.sigma == 0.0) {
            beta_n = std::exp(log_classical_beta(p.b + n, y) - log_b0);
            beta_err = 0.0;
            ++res.evaluations;
        } else {
            const QuadratureResult q = ext_beta({p.b + n, y, p.sigma}, cfg);
            res.evaluations += q.evaluations;
            if (!q.converged) {
                res.value = sum;
                res.error_estimate = std::numeric_limits<double>::infinity();
                return res;  // converged stays false
            }
            beta_n = q.value * std::exp(-log_b0);
            beta_err = q.error_estimate * std::exp(-log_b0);
        }
        const double term = beta_n * multiplier;
        sum += term;
        err += beta_err * std::abs(multiplier);

        if (n > 0 && std::abs(term) <= sc.rel_term_tol * std::abs(sum)) {
            if (++small_run >= sc.consecutive_small) {
                res.value = sum;
                res.error_estimate = err + std::abs(term);
                res.converged = true;
                return res;
            }
        } else {
            small_run = 0;
        }
    }
    res.value = sum;
    res.error_estimate = std::numeric_limits<double>::infinity();
    return res;  // max_terms exhausted
}

QuadratureResult echf_integral(const HypergeomParams& p, const QuadratureConfig& cfg) {
    const double b = p.b, cb = p.c - p.b, sigma = p.sigma, x = p.x;
    const double log_b0 = log_classical_beta(b, cb);
    UnitIntegrand f = [b, cb, sigma, x, log_b0](double t, double omt) {
        double lf = (b - 1.0) * std::log(t) + (cb - 1.0) * std::log(omt) + x * t - log_b0;
        if (sigma > 0.0) lf -= sigma / (t * omt);
        return lf < kLogUnderflow ? 0.0 : std::exp(lf);
    };
    return integrate_unit(f, cfg);
}

QuadratureResult eghf_integral(const HypergeomParams& p, const QuadratureConfig& cfg) {
    const double a = *p.a, b = p.b, cb = p.c - p.b, sigma = p.sigma, x = p.x;
    const double log_b0 = log_classical_beta(b, cb);
    UnitIntegrand f = [a, b, cb, sigma, x, log_b0](double t, double omt) {
        double lf = (b - 1.0) * std::log(t) + (cb - 1.0) * std::log(omt) -
                    a * std::log1p(-x * t) - log_b0;
        if (sigma > 0.0) lf -= sigma / (t * omt);
        return lf < kLogUnderflow ? 0.0 : std::exp(lf);
    };
    return integrate_unit(f, cfg);
}

}  // namespace

QuadratureResult echf(const HypergeomParams& params, const SeriesControl& sc,
                      const QuadratureConfig& cfg) {
    validate_common(params);
    validate_series_control(sc);
    if (params.a.has_value())
        throw std::invalid_argument("echf: parameter a is not part of the confluent function");
    if (params.b == 0.0) return constant_one();
    if (params.route == Route::integral) return echf_integral(params, cfg);
    if (params.x < 0.0) return echf_reflect(params, sc, cfg);
    return hyper_series(params, sc, cfg, /*gaussian=*/false);
}

QuadratureResult echf_reflect(const HypergeomParams& params, const SeriesControl& sc,
                              const QuadratureConfig& cfg) {
    validate_common(params);
    if (!(params.x < 0.0))
        throw std::domain_error("echf_reflect requires x < 0");
    if (params.b == 0.0) {
        // Phi(0;c;x) = 1 = e^x Phi(c;c;-x); keep the closed form.
        return constant_one();
    }
    HypergeomParams reflected = params;
    reflected.b = params.c - params.b;
    reflected.x = -params.x;
    QuadratureResult r = echf(reflected, sc, cfg);
    const double scale = std::exp(params.x);
    r.value *= scale;
    r.error_estimate *= scale;
    return r;
}

QuadratureResult echf_x_derivative(const HypergeomParams& params, int n,
                                   const SeriesControl& sc, const QuadratureConfig& cfg) {
    if (n < 0) throw std::domain_error("echf_x_derivative: n must be >= 0");
    validate_common(params);
    if (n == 0) return echf(params, sc, cfg);
    const double factor = pochhammer(params.b, n) / pochhammer(params.c, n);
    if (factor == 0.0) {  // b = 0: the function is the constant 1
        QuadratureResult r = constant_one();
        r.value = 0.0;
        return r;
    }
    HypergeomParams shifted = params;
    shifted.b = params.b + n;
    shifted.c = params.c + n;
    QuadratureResult r = echf(shifted, sc, cfg);
    r.value *= factor;
    r.error_estimate *= std::abs(factor);
    return r;
}

QuadratureResult eghf(const HypergeomParams& params, const SeriesControl& sc,
                      const QuadratureConfig& cfg) {
    validate_common(params);
    validate_series_control(sc);
    if (!params.a.has_value())
        throw std::invalid_argument("eghf: parameter a is required");
    if (!std::isfinite(*params.a))
        throw std::domain_error("eghf: parameter a must be finite");
    if (!(std::abs(params.x) < 1.0))
        throw std::domain_error("eghf requires |x| < 1");
    if (params.b == 0.0) return constant_one();
    if (params.route == Route::integral) return eghf_integral(params, cfg);
    return hyper_series(params, sc, cfg, /*gaussian=*/true);
}

}  // namespace exbeta
