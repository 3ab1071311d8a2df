#include "exbeta/quadrature.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace exbeta {
namespace {

// t(u) = 1/(1+q), 1-t(u) = q/(1+q) with q = exp(-pi*sinh(u)), u >= 0;
// dt/du = pi*cosh(u)*t*(1-t). Nodes are stored for u >= 0 only; u < 0 is the
// mirror (t, omt) -> (omt, t) with the same weight.
struct Node {
    double t;
    double omt;
    double w;
};

constexpr int kMaxLevel = 14;
constexpr double kMinEndpointDistance = 1e-300;

bool make_node(double u, Node& out) {
    const double q = std::exp(-M_PI * std::sinh(u));
    const double omt = q / (1.0 + q);
    if (omt < kMinEndpointDistance) return false;
    out.t = 1.0 / (1.0 + q);
    out.omt = omt;
    out.w = M_PI * std::cosh(u) * out.t * omt;
    return true;
}

// levels[0]: u = 0, 1, 2, ...   (spacing h = 1)
// levels[L]: u = h, 3h, 5h, ... (h = 2^-L), the nodes new at that level
const std::vector<std::vector<Node>>& node_tables() {
    static const std::vector<std::vector<Node>> tables = [] {
        std::vector<std::vector<Node>> t(kMaxLevel + 1);
        for (int level = 0; level <= kMaxLevel; ++level) {
            const double h = std::ldexp(1.0, -level);
            const int stride = level == 0 ? 1 : 2;
            Node n;
            for (long k = level == 0 ? 0 : 1; make_node(k * h, n); k += stride)
                t[level].push_back(n);
        }
        return t;
    }();
    return tables;
}

// Compensated accumulation; level sums are short but the constant-integrand
// case must close to ~1e-16.
struct KahanSum {
    double s = 0.0;
    double c = 0.0;
    void add(double x) {
        const double y = x - c;
        const double t = s + y;
        c = (t - s) - y;
        s = t;
    }
};

}  // namespace

QuadratureResult integrate_unit(const UnitIntegrand& f, const QuadratureConfig& cfg) {
    if (!(cfg.abs_tol > 0.0) || !(cfg.rel_tol > 0.0))
        throw std::invalid_argument("quadrature tolerances must be positive");
    if (cfg.max_levels < 1 || cfg.max_evaluations < 1)
        throw std::invalid_argument("quadrature limits must be at least 1");

    const auto& tables = node_tables();
    const int last_level = std::min(cfg.max_levels - 1, kMaxLevel);

    QuadratureResult res;
    res.error_estimate = std::numeric_limits<double>::infinity();

    auto eval = [&](double t, double omt) {
        const double v = f(t, omt);
        ++res.evaluations;
        if (!std::isfinite(v))
            throw std::domain_error("integrand returned a non-finite value at t=" +
                                    std::to_string(t));
        return v;
    };

    double sum = 0.0;
    for (int level = 0; level <= last_level; ++level) {
        const auto& nodes = tables[level];
        const long cost = level == 0 ? 2 * static_cast<long>(nodes.size()) - 1
                                     : 2 * static_cast<long>(nodes.size());
        if (res.evaluations + cost > cfg.max_evaluations) break;

        const double h = std::ldexp(1.0, -level);
        KahanSum acc;
        if (level == 0) {
            acc.add(nodes[0].w * eval(nodes[0].t, nodes[0].omt));
            for (std::size_t i = 1; i < nodes.size(); ++i) {
                const Node& n = nodes[i];
                acc.add(n.w * eval(n.t, n.omt));
                acc.add(n.w * eval(n.omt, n.t));
            }
            sum = h * acc.s;
            continue;
        }
        for (const Node& n : nodes) {
            acc.add(n.w * eval(n.t, n.omt));
            acc.add(n.w * eval(n.omt, n.t));
        }
        const double refined = 0.5 * sum + h * acc.s;
        res.error_estimate = std::abs(refined - sum);
        sum = refined;
        if (res.error_estimate <= std::max(cfg.abs_tol, cfg.rel_tol * std::abs(sum))) {
            res.converged = true;
            break;
        }
    }
    res.value = sum;
    return res;
}

QuadratureResult integrate_unit(const std::function<double(double)>& f,
                                const QuadratureConfig& cfg) {
    return integrate_unit(UnitIntegrand([&f](double t, double) { return f(t); }), cfg);
}

}  // namespace exbeta
