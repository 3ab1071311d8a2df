#include "exbeta/inequalities.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "exbeta/gamma_kernel.hpp"
#include "exbeta/xbeta.hpp"

namespace exbeta {
namespace {

// Collects evaluation counts and the all-converged flag behind a check.
struct Eval {
    const CheckContext& ctx;
    long evaluations = 0;
    bool ok = true;

    double track(const QuadratureResult& r) {
        evaluations += r.evaluations;
        ok = ok && r.converged && std::isfinite(r.value);
        return r.value;
    }
    double beta(double x, double y, double sigma) {
        return track(ext_beta({x, y, sigma}, ctx.quad));
    }
    double phi(double b, double c, double sigma, double x) {
        HypergeomParams p;
        p.b = b;
        p.c = c;
        p.sigma = sigma;
        p.x = x;
        p.route = Route::integral;
        return track(x < 0.0 ? echf_reflect(p, ctx.series, ctx.quad)
                             : echf(p, ctx.series, ctx.quad));
    }
    double gauss(double a, double b, double c, double sigma, double x) {
        HypergeomParams p;
        p.a = a;
        p.b = b;
        p.c = c;
        p.sigma = sigma;
        p.x = x;
        p.route = Route::integral;
        return track(eghf(p, ctx.series, ctx.quad));
    }
};

InequalityCheck finish(std::string name, ParamRecord inputs, double lhs, double rhs,
                       const Eval& ev, const CheckContext& ctx, bool informational = false) {
    InequalityCheck c;
    c.name = std::move(name);
    c.inputs = std::move(inputs);
    c.lhs = lhs;
    c.rhs = rhs;
    c.slack = rhs - lhs;
    c.tolerance = ctx.slack_rel_tol * std::max({std::abs(lhs), std::abs(rhs), 1.0});
    c.informational = informational;
    c.evaluations = ev.evaluations;
    if (!ev.ok || !std::isfinite(lhs) || !std::isfinite(rhs))
        c.verdict = Verdict::indeterminate;
    else
        c.verdict = c.slack >= -c.tolerance ? Verdict::satisfied : Verdict::violated;
    return c;
}

MonotonicityCheck finish_mono(std::string name, ParamRecord inputs,
                              std::vector<double> grid, std::vector<double> values,
                              MonotonicityCheck::Direction dir, const Eval& ev,
                              const CheckContext& ctx, bool informational = false) {
    MonotonicityCheck c;
    c.name = std::move(name);
    c.inputs = std::move(inputs);
    c.grid = std::move(grid);
    c.values = std::move(values);
    c.direction = dir;
    c.informational = informational;
    c.evaluations = ev.evaluations;

    double scale = 1.0;
    bool finite = true;
    for (double v : c.values) {
        finite = finite && std::isfinite(v);
        scale = std::max(scale, std::abs(v));
    }
    for (std::size_t i = 0; i + 1 < c.values.size(); ++i) {
        const double step = c.values[i + 1] - c.values[i];
        const double violation =
            dir == MonotonicityCheck::Direction::decreasing ? step : -step;
        c.max_violation = std::max(c.max_violation, violation);
    }
    c.max_violation = std::max(c.max_violation, 0.0);
    c.tolerance = ctx.slack_rel_tol * scale;
    if (!ev.ok || !finite)
        c.verdict = Verdict::indeterminate;
    else
        c.verdict = c.max_violation <= c.tolerance ? Verdict::satisfied : Verdict::violated;
    return c;
}

void require(bool cond, const char* msg) {
    if (!cond) throw std::domain_error(msg);
}

ParamRecord grid_params(ParamRecord base, std::span<const double> grid) {
    base.emplace_back("grid_lo", grid.empty() ? 0.0 : grid.front());
    base.emplace_back("grid_hi", grid.empty() ? 0.0 : grid.back());
    base.emplace_back("grid_n", static_cast<double>(grid.size()));
    return base;
}

void require_increasing_grid(std::span<const double> grid, const char* msg) {
    require(!grid.empty(), msg);
    for (std::size_t i = 0; i + 1 < grid.size(); ++i)
        require(grid[i] < grid[i + 1], msg);
}

// Geometric mean with exponent alpha in log space; both values positive.
double weighted_geomean(double a, double va, double vb) {
    return std::exp(a * std::log(va) + (1.0 - a) * std::log(vb));
}

}  // namespace

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::satisfied: return "satisfied";
        case Verdict::violated: return "violated";
        case Verdict::indeterminate: return "indeterminate";
    }
    return "unknown";
}

InequalityCheck check_thm1(double x, double x1, double y, double y1, double sigma,
                           const CheckContext& ctx) {
    require(x > 0 && x1 > 0 && y > 0 && y1 > 0, "thm1 requires positive parameters");
    require((x - x1) * (y - y1) >= 0.0, "thm1 requires (x-x1)(y-y1) >= 0");
    require(sigma >= 0.0, "thm1 requires sigma >= 0");
    Eval ev{ctx};
    const double aligned = ev.beta(x1, y1, sigma) * ev.beta(x, y, sigma);
    const double crossed = ev.beta(x, y1, sigma) * ev.beta(x1, y, sigma);
    return finish("thm1",
                  {{"x", x}, {"x1", x1}, {"y", y}, {"y1", y1}, {"sigma", sigma}},
                  aligned, crossed, ev, ctx);
}

InequalityCheck check_turan_sigma(double x, double y, double sigma, double a,
                                  const CheckContext& ctx) {
    require(sigma - a >= 0.0 && sigma + a >= 0.0,
            "turan-sigma requires sigma-a >= 0 and sigma+a >= 0");
    if (sigma - std::abs(a) == 0.0)
        require(x > 0 && y > 0, "turan-sigma at the classical endpoint requires x, y > 0");
    Eval ev{ctx};
    const double mid = ev.beta(x, y, sigma);
    const double lo = ev.beta(x, y, sigma - a);
    const double hi = ev.beta(x, y, sigma + a);
    return finish("turan-sigma", {{"x", x}, {"y", y}, {"sigma", sigma}, {"a", a}},
                  mid * mid, hi * lo, ev, ctx);
}

MonotonicityCheck check_thm2_ratio_decreasing(double x, double y,
                                              std::span<const double> sigma_grid,
                                              const CheckContext& ctx) {
    require_increasing_grid(sigma_grid, "thm2 ratio requires a strictly increasing grid");
    require(sigma_grid.front() > 0.0, "thm2 ratio requires sigma > 0");
    Eval ev{ctx};
    std::vector<double> values;
    values.reserve(sigma_grid.size());
    for (double s : sigma_grid)
        values.push_back(ev.beta(x - 1, y - 1, s) / ev.beta(x, y, s));
    return finish_mono("thm2-ratio-decreasing", grid_params({{"x", x}, {"y", y}}, sigma_grid),
                       {sigma_grid.begin(), sigma_grid.end()}, std::move(values),
                       MonotonicityCheck::Direction::decreasing, ev, ctx);
}

InequalityCheck check_logconvex_sigma(double x, double y, double sigma1, double sigma2,
                                      double alpha, const CheckContext& ctx) {
    require(sigma1 > 0 && sigma2 > 0, "logconvex-sigma requires sigma1, sigma2 > 0");
    require(alpha >= 0.0 && alpha <= 1.0, "logconvex-sigma requires alpha in [0,1]");
    Eval ev{ctx};
    const double mix = ev.beta(x, y, alpha * sigma1 + (1 - alpha) * sigma2);
    const double b1 = ev.beta(x, y, sigma1);
    const double b2 = ev.beta(x, y, sigma2);
    return finish(
        "logconvex-sigma",
        {{"x", x}, {"y", y}, {"sigma1", sigma1}, {"sigma2", sigma2}, {"alpha", alpha}},
        mix, weighted_geomean(alpha, b1, b2), ev, ctx);
}

InequalityCheck check_thm3_midpoint(double x1, double y1, double x2, double y2,
                                    double sigma, const CheckContext& ctx) {
    require(sigma >= 0.0, "thm3 requires sigma >= 0");
    if (sigma == 0.0)
        require(x1 > 0 && y1 > 0 && x2 > 0 && y2 > 0,
                "thm3 at sigma = 0 requires positive coordinates");
    Eval ev{ctx};
    const double mid = ev.beta(0.5 * (x1 + x2), 0.5 * (y1 + y2), sigma);
    const double ends = ev.beta(x1, y1, sigma) * ev.beta(x2, y2, sigma);
    return finish("thm3-midpoint",
                  {{"x1", x1}, {"y1", y1}, {"x2", x2}, {"y2", y2}, {"sigma", sigma}},
                  mid * mid, ends, ev, ctx);
}

QuadratureResult gruss_functional(const UnitIntegrand& f, const UnitIntegrand& g,
                                  const UnitIntegrand& h, const QuadratureConfig& cfg) {
    auto product = [](const UnitIntegrand& u, const UnitIntegrand& v) {
        return UnitIntegrand(
            [&u, &v](double t, double omt) { return u(t, omt) * v(t, omt); });
    };
    const QuadratureResult ih = integrate_unit(h, cfg);
    const QuadratureResult ihf = integrate_unit(product(h, f), cfg);
    const QuadratureResult ihg = integrate_unit(product(h, g), cfg);
    const QuadratureResult ihfg = integrate_unit(
        UnitIntegrand([&](double t, double omt) { return h(t, omt) * f(t, omt) * g(t, omt); }),
        cfg);

    QuadratureResult d;
    d.value = ih.value * ihfg.value - ihf.value * ihg.value;
    d.error_estimate = std::abs(ih.value) * ihfg.error_estimate +
                       std::abs(ihfg.value) * ih.error_estimate +
                       std::abs(ihf.value) * ihg.error_estimate +
                       std::abs(ihg.value) * ihf.error_estimate;
    d.evaluations = ih.evaluations + ihf.evaluations + ihg.evaluations + ihfg.evaluations;
    d.converged = ih.converged && ihf.converged && ihg.converged && ihfg.converged;
    return d;
}

std::vector<InequalityCheck> check_gruss_extbeta(double x, double y, double sigma1,
                                                 double sigma2, const CheckContext& ctx) {
    require(x > 0 && y > 0 && sigma1 > 0 && sigma2 > 0,
            "gruss-extbeta requires positive parameters");
    Eval ev{ctx};
    const double b_mixed = ev.beta(x + y + 1, x + y + 1, sigma1 + sigma2);
    const double b_f = ev.beta(x + 1, x + 1, sigma1);
    const double b_g = ev.beta(y + 1, y + 1, sigma2);
    const double var_f = std::max(ev.beta(2 * x + 1, 2 * x + 1, 2 * sigma1) - b_f * b_f, 0.0);
    const double var_g = std::max(ev.beta(2 * y + 1, 2 * y + 1, 2 * sigma2) - b_g * b_g, 0.0);
    const double b_g_s1 = ev.beta(y + 1, y + 1, sigma1);
    const double var_g_printed =
        std::max(ev.beta(2 * y + 1, 2 * y + 1, 2 * sigma1) - b_g_s1 * b_g_s1, 0.0);

    const double mid = std::abs(b_mixed - b_f * b_g);
    const double product = std::sqrt(var_f) * std::sqrt(var_g);
    const double product_printed = std::sqrt(var_f) * std::sqrt(var_g_printed);
    const double outer =
        std::exp(-4.0 * (sigma1 + sigma2) - (x + y + 1) * std::log(4.0));

    const ParamRecord inputs{{"x", x}, {"y", y}, {"sigma1", sigma1}, {"sigma2", sigma2}};
    std::vector<InequalityCheck> checks;
    checks.push_back(finish("gruss-extbeta-mid", inputs, mid, product, ev, ctx));
    checks.push_back(finish("gruss-extbeta-outer", inputs, product, outer, ev, ctx));
    checks.push_back(finish("gruss-extbeta-mid-printed", inputs, mid, product_printed, ev,
                            ctx, /*informational=*/true));
    return checks;
}

std::vector<InequalityCheck> check_gruss_shift(double x, double y, double x1, double y1,
                                               double sigma, const CheckContext& ctx) {
    require(x >= 0 && y >= 0, "gruss-shift requires x, y >= 0");
    require(x1 > 0 && y1 > 0, "gruss-shift requires x1, y1 > 0");
    require(sigma >= 0.0, "gruss-shift requires sigma >= 0");
    Eval ev{ctx};
    const double b1 = ev.beta(x1, y1, sigma);
    const double b2 = ev.beta(x + x1, y + y1, sigma);
    const double b3 = ev.beta(x + x1, y1, sigma);
    const double b4 = ev.beta(x1, y + y1, sigma);
    const double dff = std::max(b1 * ev.beta(2 * x + x1, y1, sigma) - b3 * b3, 0.0);
    const double dgg = std::max(b1 * ev.beta(x1, 2 * y + y1, sigma) - b4 * b4, 0.0);

    const double mid = std::abs(b1 * b2 - b3 * b4);
    const double product = std::sqrt(dff) * std::sqrt(dgg);
    const ParamRecord inputs{{"x", x}, {"y", y}, {"x1", x1}, {"y1", y1}, {"sigma", sigma}};
    std::vector<InequalityCheck> checks;
    checks.push_back(finish("gruss-shift-mid", inputs, mid, product, ev, ctx));
    checks.push_back(
        finish("gruss-shift-outer", inputs, product, 0.25 * b1 * b1, ev, ctx));
    return checks;
}

std::vector<InequalityCheck> check_gruss_power(double alpha, double beta, double m,
                                               double n, double p, double q, double sigma,
                                               const CheckContext& ctx) {
    require(alpha > 0 && beta > 0 && m > 0 && n > 0 && p > 0 && q > 0,
            "gruss-power requires positive parameters");
    require(sigma >= 0.0, "gruss-power requires sigma >= 0");
    Eval ev{ctx};
    const double b1 = ev.beta(alpha, beta, sigma);
    const double b2 = ev.beta(alpha + m + p, beta + n + q, sigma);
    const double b3 = ev.beta(alpha + m, beta + n, sigma);
    const double b4 = ev.beta(alpha + p, beta + q, sigma);
    const double dff = std::max(b1 * ev.beta(alpha + 2 * m, beta + 2 * n, sigma) - b3 * b3, 0.0);
    const double dgg = std::max(b1 * ev.beta(alpha + 2 * p, beta + 2 * q, sigma) - b4 * b4, 0.0);

    // sup of t^m (1-t)^n over (0,1), in log space.
    auto peak = [](double u, double v) {
        return std::exp(u * std::log(u) + v * std::log(v) - (u + v) * std::log(u + v));
    };
    const double mid = std::abs(b1 * b2 - b3 * b4);
    const double product = std::sqrt(dff) * std::sqrt(dgg);
    const double outer = 0.25 * b1 * b1 * peak(m, n) * peak(p, q);

    const ParamRecord inputs{{"alpha", alpha}, {"beta", beta}, {"m", m},
                             {"n", n},         {"p", p},       {"q", q},
                             {"sigma", sigma}};
    std::vector<InequalityCheck> checks;
    checks.push_back(finish("gruss-power-mid", inputs, mid, product, ev, ctx));
    checks.push_back(finish("gruss-power-outer", inputs, product, outer, ev, ctx));
    return checks;
}

MonotonicityCheck check_echf_ratio_decreasing(double b, double c, double d, double sigma,
                                              std::span<const double> x_grid,
                                              const CheckContext& ctx) {
    require(b >= 0.0, "echf ratio requires b >= 0");
    require(c >= d && d > 0, "echf ratio requires c >= d > 0");
    require(b == 0.0 || d > b, "echf ratio requires d > b");
    require_increasing_grid(x_grid, "echf ratio requires a strictly increasing x grid");
    require(x_grid.front() > 0.0, "echf ratio grid must lie in (0, inf)");
    Eval ev{ctx};
    std::vector<double> values;
    values.reserve(x_grid.size());
    for (double x : x_grid) values.push_back(ev.phi(b, c, sigma, x) / ev.phi(b, d, sigma, x));
    return finish_mono("echf-ratio-decreasing",
                       grid_params({{"b", b}, {"c", c}, {"d", d}, {"sigma", sigma}}, x_grid),
                       {x_grid.begin(), x_grid.end()}, std::move(values),
                       MonotonicityCheck::Direction::decreasing, ev, ctx);
}

InequalityCheck check_echf_product(double b, double c, double d, double sigma, double x,
                                   const CheckContext& ctx) {
    require(b >= 0.0, "echf product requires b >= 0");
    require(c >= d && d > 0, "echf product requires c >= d > 0");
    require(b == 0.0 || d > b, "echf product requires d > b");
    require(x > 0.0, "echf product requires x > 0");
    Eval ev{ctx};
    const double lhs = d * ev.phi(b + 1, c + 1, sigma, x) * ev.phi(b, d, sigma, x);
    const double rhs = c * ev.phi(b, c, sigma, x) * ev.phi(b + 1, d + 1, sigma, x);
    return finish("echf-product",
                  {{"b", b}, {"c", c}, {"d", d}, {"sigma", sigma}, {"x", x}}, lhs, rhs,
                  ev, ctx);
}

InequalityCheck check_echf_logconvex_x(double b, double c, double sigma, double x,
                                       double y, double alpha, const CheckContext& ctx) {
    require(alpha >= 0.0 && alpha <= 1.0, "echf logconvex-x requires alpha in [0,1]");
    Eval ev{ctx};
    const double mix = ev.phi(b, c, sigma, alpha * x + (1 - alpha) * y);
    const double fx = ev.phi(b, c, sigma, x);
    const double fy = ev.phi(b, c, sigma, y);
    return finish("echf-logconvex-x",
                  {{"b", b}, {"c", c}, {"sigma", sigma}, {"x", x}, {"y", y}, {"alpha", alpha}},
                  mix, weighted_geomean(alpha, fx, fy), ev, ctx);
}

InequalityCheck check_echf_logconvex_sigma(double b, double c, double x, double sigma1,
                                           double sigma2, double alpha,
                                           const CheckContext& ctx) {
    require(sigma1 > 0 && sigma2 > 0, "echf logconvex-sigma requires sigma1, sigma2 > 0");
    require(alpha >= 0.0 && alpha <= 1.0, "echf logconvex-sigma requires alpha in [0,1]");
    require(x > 0.0, "echf logconvex-sigma requires x > 0");
    Eval ev{ctx};
    const double mix = ev.phi(b, c, alpha * sigma1 + (1 - alpha) * sigma2, x);
    const double f1 = ev.phi(b, c, sigma1, x);
    const double f2 = ev.phi(b, c, sigma2, x);
    return finish("echf-logconvex-sigma",
                  {{"b", b},
                   {"c", c},
                   {"x", x},
                   {"sigma1", sigma1},
                   {"sigma2", sigma2},
                   {"alpha", alpha}},
                  mix, weighted_geomean(alpha, f1, f2), ev, ctx);
}

std::vector<MonotonicityCheck> check_echf_b_ratio_decreasing(
    double c, double x, double sigma, double delta, std::span<const double> b_grid,
    const CheckContext& ctx) {
    require(delta > 0.0, "echf b-ratio requires delta > 0");
    require(x > 0.0 && c > 0.0, "echf b-ratio requires c, x > 0");
    require_increasing_grid(b_grid, "echf b-ratio requires a strictly increasing b grid");
    require(b_grid.front() > 0.0, "echf b-ratio grid must be positive");
    require(b_grid.back() + delta < c, "echf b-ratio requires b + delta < c on the grid");

    Eval ev{ctx};
    std::vector<double> proof_norm, paper_norm;
    proof_norm.reserve(b_grid.size());
    paper_norm.reserve(b_grid.size());
    for (double b : b_grid) {
        const double phi_ratio = ev.phi(b + delta, c, sigma, x) / ev.phi(b, c, sigma, x);
        proof_norm.push_back(
            std::exp(log_classical_beta(b, c - b) - log_classical_beta(b + delta, c - b - delta)) *
            phi_ratio);
        paper_norm.push_back(
            std::exp(log_classical_beta(b, c) - log_classical_beta(b + delta, c)) * phi_ratio);
    }
    const ParamRecord inputs =
        grid_params({{"c", c}, {"x", x}, {"sigma", sigma}, {"delta", delta}}, b_grid);
    std::vector<MonotonicityCheck> checks;
    checks.push_back(finish_mono("echf-b-ratio-decreasing", inputs,
                                 {b_grid.begin(), b_grid.end()}, std::move(proof_norm),
                                 MonotonicityCheck::Direction::decreasing, ev, ctx));
    checks.push_back(finish_mono("echf-b-ratio-decreasing-paper-norm", inputs,
                                 {b_grid.begin(), b_grid.end()}, std::move(paper_norm),
                                 MonotonicityCheck::Direction::decreasing, ev, ctx,
                                 /*informational=*/true));
    return checks;
}

InequalityCheck check_echf_reverse_turan(double b, double c, double x, double sigma,
                                         double delta, const CheckContext& ctx) {
    require(b > 0.0 && x > 0.0, "echf reverse-turan requires b, x > 0");
    require(delta >= 0.0, "echf reverse-turan requires delta >= 0");
    require(c > b + 2 * delta, "echf reverse-turan requires c > b + 2 delta");
    require(sigma >= 0.0, "echf reverse-turan requires sigma >= 0");
    Eval ev{ctx};
    const double coeff = coeff_f_delta(b, c, delta);
    const double lo = ev.phi(b, c, sigma, x);
    const double mid = ev.phi(b + delta, c, sigma, x);
    const double hi = ev.phi(b + 2 * delta, c, sigma, x);
    return finish("echf-reverse-turan",
                  {{"b", b}, {"c", c}, {"x", x}, {"sigma", sigma}, {"delta", delta}},
                  coeff * hi * lo, mid * mid, ev, ctx);
}

namespace {

void require_eghf_family(double a, double b, double c, double d, double sigma) {
    require(a > 0.0, "eghf checks require a > 0");
    require(b >= 0.0, "eghf checks require b >= 0");
    require(c >= d && d > 0, "eghf checks require c >= d > 0");
    require(b == 0.0 || d > b, "eghf checks require d > b");
    require(sigma >= 0.0, "eghf checks require sigma >= 0");
}

}  // namespace

MonotonicityCheck check_eghf_ratio_decreasing(double a, double b, double c, double d,
                                              double sigma, std::span<const double> x_grid,
                                              const CheckContext& ctx) {
    require_eghf_family(a, b, c, d, sigma);
    require_increasing_grid(x_grid, "eghf ratio requires a strictly increasing x grid");
    require(x_grid.front() > 0.0 && x_grid.back() < 1.0, "eghf ratio grid must lie in (0,1)");
    Eval ev{ctx};
    std::vector<double> values;
    values.reserve(x_grid.size());
    for (double x : x_grid)
        values.push_back(ev.gauss(a, b, c, sigma, x) / ev.gauss(a, b, d, sigma, x));
    return finish_mono(
        "eghf-ratio-decreasing",
        grid_params({{"a", a}, {"b", b}, {"c", c}, {"d", d}, {"sigma", sigma}}, x_grid),
        {x_grid.begin(), x_grid.end()}, std::move(values),
        MonotonicityCheck::Direction::decreasing, ev, ctx);
}

InequalityCheck check_eghf_product(double a, double b, double c, double d, double sigma,
                                   double x, const CheckContext& ctx) {
    require_eghf_family(a, b, c, d, sigma);
    require(x > 0.0 && x < 1.0, "eghf product requires x in (0,1)");
    Eval ev{ctx};
    const double lhs =
        d * ev.gauss(a + 1, b + 1, c + 1, sigma, x) * ev.gauss(a, b, d, sigma, x);
    const double rhs =
        c * ev.gauss(a, b, c, sigma, x) * ev.gauss(a + 1, b + 1, d + 1, sigma, x);
    return finish("eghf-product",
                  {{"a", a}, {"b", b}, {"c", c}, {"d", d}, {"sigma", sigma}, {"x", x}},
                  lhs, rhs, ev, ctx);
}

InequalityCheck check_eghf_logconvex_sigma(double a, double b, double c, double x,
                                           double sigma1, double sigma2, double alpha,
                                           const CheckContext& ctx) {
    require(a > 0.0 && b >= 0.0, "eghf logconvex-sigma requires a > 0, b >= 0");
    require(b == 0.0 || c > b, "eghf logconvex-sigma requires c > b");
    require(sigma1 > 0 && sigma2 > 0, "eghf logconvex-sigma requires sigma1, sigma2 > 0");
    require(alpha >= 0.0 && alpha <= 1.0, "eghf logconvex-sigma requires alpha in [0,1]");
    require(x > 0.0 && x < 1.0, "eghf logconvex-sigma requires x in (0,1)");
    Eval ev{ctx};
    const double mix = ev.gauss(a, b, c, alpha * sigma1 + (1 - alpha) * sigma2, x);
    const double f1 = ev.gauss(a, b, c, sigma1, x);
    const double f2 = ev.gauss(a, b, c, sigma2, x);
    return finish("eghf-logconvex-sigma",
                  {{"a", a},
                   {"b", b},
                   {"c", c},
                   {"x", x},
                   {"sigma1", sigma1},
                   {"sigma2", sigma2},
                   {"alpha", alpha}},
                  mix, weighted_geomean(alpha, f1, f2), ev, ctx);
}

InequalityCheck check_eghf_logconvex_a(double b, double c, double sigma, double x,
                                       std::span<const double> a_grid,
                                       const CheckContext& ctx) {
    require(b >= 0.0, "eghf logconvex-a requires b >= 0");
    require(b == 0.0 || c > b, "eghf logconvex-a requires c > b");
    require(sigma >= 0.0, "eghf logconvex-a requires sigma >= 0");
    require(x > 0.0 && x < 1.0, "eghf logconvex-a requires x in (0,1)");
    require_increasing_grid(a_grid, "eghf logconvex-a requires a strictly increasing a grid");
    require(a_grid.front() > 0.0, "eghf logconvex-a grid must be positive");
    require(a_grid.size() >= 2, "eghf logconvex-a needs at least two grid points");

    // Midpoint log-convexity over adjacent grid pairs; the reported lhs/rhs
    // belong to the pair with the smallest normalized slack.
    Eval ev{ctx};
    std::vector<double> f_at;
    f_at.reserve(a_grid.size());
    for (double a : a_grid) f_at.push_back(ev.gauss(a, b, c, sigma, x));
    double worst_lhs = 0.0, worst_rhs = 0.0;
    double worst_score = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i + 1 < a_grid.size(); ++i) {
        const double amid = 0.5 * (a_grid[i] + a_grid[i + 1]);
        const double fmid = ev.gauss(amid, b, c, sigma, x);
        const double lhs = fmid * fmid;
        const double rhs = f_at[i] * f_at[i + 1];
        const double score = (rhs - lhs) / std::max({std::abs(lhs), std::abs(rhs), 1.0});
        if (score < worst_score) {
            worst_score = score;
            worst_lhs = lhs;
            worst_rhs = rhs;
        }
    }
    return finish("eghf-logconvex-a",
                  grid_params({{"b", b}, {"c", c}, {"sigma", sigma}, {"x", x}}, a_grid),
                  worst_lhs, worst_rhs, ev, ctx);
}

EghfSuiteChecks check_eghf_suite(const EghfSuiteParams& p, const CheckContext& ctx) {
    EghfSuiteChecks out;
    out.ratio_decreasing =
        check_eghf_ratio_decreasing(p.a, p.b, p.c, p.d, p.sigma, p.x_grid, ctx);
    out.product = check_eghf_product(p.a, p.b, p.c, p.d, p.sigma, p.x, ctx);
    out.logconvex_sigma =
        check_eghf_logconvex_sigma(p.a, p.b, p.c, p.x, p.sigma1, p.sigma2, p.alpha, ctx);
    out.logconvex_a = check_eghf_logconvex_a(p.b, p.c, p.sigma, p.x, p.a_grid, ctx);
    return out;
}

}  // namespace exbeta
