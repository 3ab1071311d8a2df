#include "exbeta/xbeta.hpp"

#include <cmath>
#include <stdexcept>

namespace exbeta {
namespace {

// exp arguments below this produce exact zero contributions in double.
constexpr double kLogUnderflow = -745.0;

void validate(const ExtBetaPoint& p) {
    if (p.sigma < 0.0 || !std::isfinite(p.sigma))
        throw std::domain_error("ext_beta: sigma must be >= 0");
    if (!std::isfinite(p.x) || !std::isfinite(p.y))
        throw std::domain_error("ext_beta: x and y must be finite");
    if (p.sigma == 0.0 && (p.x <= 0.0 || p.y <= 0.0))
        throw std::domain_error("ext_beta: sigma = 0 requires x > 0 and y > 0");
}

}  // namespace

QuadratureResult ext_beta(const ExtBetaPoint& p, const QuadratureConfig& cfg) {
    validate(p);
    const double x = p.x, y = p.y, sigma = p.sigma;
    // Assembled in log space and exponentiated once per node.
    UnitIntegrand f = [x, y, sigma](double t, double omt) {
        double lf = (x - 1.0) * std::log(t) + (y - 1.0) * std::log(omt);
        if (sigma > 0.0) lf -= sigma / (t * omt);
        return lf < kLogUnderflow ? 0.0 : std::exp(lf);
    };
    return integrate_unit(f, cfg);
}

QuadratureResult ext_beta_sigma_derivative(const ExtBetaPoint& p, int n,
                                           const QuadratureConfig& cfg) {
    if (n < 0) throw std::domain_error("ext_beta_sigma_derivative: n must be >= 0");
    if (n == 0) return ext_beta(p, cfg);
    if (!(p.sigma > 0.0))
        throw std::domain_error(
            "ext_beta_sigma_derivative: n >= 1 requires sigma > 0");
    QuadratureResult r = ext_beta({p.x - n, p.y - n, p.sigma}, cfg);
    if (n % 2 != 0) r.value = -r.value;
    return r;
}

}  // namespace exbeta
