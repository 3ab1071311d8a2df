#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "exbeta/quadrature.hpp"
#include "exbeta/xhyper.hpp"

namespace exbeta {

enum class Verdict { satisfied, violated, indeterminate };

const char* to_string(Verdict v);

// Flattened parameter record, insertion-ordered; keys double as CSV columns.
using ParamRecord = std::vector<std::pair<std::string, double>>;

// One certified inequality instance. slack = rhs - lhs, and the check is
// satisfied iff slack >= -tolerance. lhs and rhs count only if every
// evaluation behind them converged; otherwise the verdict is indeterminate,
// never violated. Informational rows document ambiguous paper readings and
// are excluded from pass/fail aggregation.
struct InequalityCheck {
    std::string name;
    ParamRecord inputs;
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;
    double tolerance = 0.0;
    Verdict verdict = Verdict::indeterminate;
    bool informational = false;
    long evaluations = 0;
};

// Sampled-monotonicity proxy for the paper's continuous claims: certifies
// "no adjacent-pair violation on this grid", nothing stronger.
// max_violation is the worst signed violation of the claimed direction,
// clamped at 0 when the direction holds everywhere.
struct MonotonicityCheck {
    enum class Direction { increasing, decreasing };
    std::string name;
    ParamRecord inputs;
    std::vector<double> grid;
    std::vector<double> values;
    Direction direction = Direction::decreasing;
    double max_violation = 0.0;
    double tolerance = 0.0;
    Verdict verdict = Verdict::indeterminate;
    bool informational = false;
    long evaluations = 0;
};

// Shared evaluation context. Quadrature agreement runs two orders tighter
// than the slack tolerance so evaluation error cannot flip a verdict, and
// abs_tol sits far below any integral magnitude in scope so the stopping
// rule stays relative even for B_sigma ~ exp(-4 sigma).
struct CheckContext {
    QuadratureConfig quad{1e-280, 1e-12, 12, 2'000'000};
    SeriesControl series{};
    double slack_rel_tol = 1e-10;
};

// --- Extended beta inequalities (Thm 1-3 and the Gruss applications) ------

// Chebyshev ordering under (x-x1)(y-y1) >= 0:
//   B_sigma(x1,y1) B_sigma(x,y) <= B_sigma(x,y1) B_sigma(x1,y).
InequalityCheck check_thm1(double x, double x1, double y, double y1, double sigma,
                           const CheckContext& ctx = {});

// Turan inequality in sigma: B_sigma(x,y)^2 <= B_{sigma+a}(x,y) B_{sigma-a}(x,y).
InequalityCheck check_turan_sigma(double x, double y, double sigma, double a,
                                  const CheckContext& ctx = {});

// sigma -> B_sigma(x-1,y-1)/B_sigma(x,y) decreasing, sampled on sigma_grid.
MonotonicityCheck check_thm2_ratio_decreasing(double x, double y,
                                              std::span<const double> sigma_grid,
                                              const CheckContext& ctx = {});

// Log-convexity in sigma:
//   B_{a s1+(1-a)s2}(x,y) <= B_{s1}(x,y)^a B_{s2}(x,y)^{1-a}.
InequalityCheck check_logconvex_sigma(double x, double y, double sigma1, double sigma2,
                                      double alpha, const CheckContext& ctx = {});

// Joint log-convexity midpoint form:
//   B_sigma((x1+x2)/2,(y1+y2)/2)^2 <= B_sigma(x1,y1) B_sigma(x2,y2).
InequalityCheck check_thm3_midpoint(double x1, double y1, double x2, double y2,
                                    double sigma, const CheckContext& ctx = {});

// Gruss covariance functional over (0,1):
//   D(f,g;h) = int h * int hfg - int hf * int hg.
// Indeterminate (converged=false) if any of the four quadratures fails.
QuadratureResult gruss_functional(const UnitIntegrand& f, const UnitIntegrand& g,
                                  const UnitIntegrand& h,
                                  const QuadratureConfig& cfg = {});

// Gruss bound for the x^x-weighted pair, Eq. (2.8) family. Returns
//   [0] mid:   |B_{s1+s2}(x+y+1,x+y+1) - B_{s1}(x+1,x+1) B_{s2}(y+1,y+1)|
//              <= sqrt(D(f,f;1)) sqrt(D(g,g;1))   (corrected second factor)
//   [1] outer: sqrt-product <= exp(-4(s1+s2))/4^{x+y+1}
//   [2] the paper's as-printed middle reading (informational; false in
//       general when s1 >> s2).
std::vector<InequalityCheck> check_gruss_extbeta(double x, double y, double sigma1,
                                                 double sigma2,
                                                 const CheckContext& ctx = {});

// Gruss with weight h = t^{x1-1}(1-t)^{y1-1} exp(-sigma/(t(1-t))), f = t^x,
// g = (1-t)^y. Returns [mid, outer] links of the chain ending at
// B_sigma(x1,y1)^2 / 4.
std::vector<InequalityCheck> check_gruss_shift(double x, double y, double x1, double y1,
                                               double sigma, const CheckContext& ctx = {});

// Gruss with f = t^m (1-t)^n, g = t^p (1-t)^q; outer bound
//   (B_sigma(alpha,beta)^2/4) m^m n^n/(m+n)^{m+n} p^p q^q/(p+q)^{p+q}.
std::vector<InequalityCheck> check_gruss_power(double alpha, double beta, double m,
                                               double n, double p, double q, double sigma,
                                               const CheckContext& ctx = {});

// --- ECHF / EGHF inequalities ---------------------------------------------

// x -> Phi_sigma(b;c;x)/Phi_sigma(b;d;x) is decreasing on (0,inf) for c >= d.
MonotonicityCheck check_echf_ratio_decreasing(double b, double c, double d, double sigma,
                                              std::span<const double> x_grid,
                                              const CheckContext& ctx = {});

// d Phi_sigma(b+1;c+1;x) Phi_sigma(b;d;x)
//   <= c Phi_sigma(b;c;x) Phi_sigma(b+1;d+1;x) for c >= d.
InequalityCheck check_echf_product(double b, double c, double d, double sigma, double x,
                                   const CheckContext& ctx = {});

// Log-convexity of x -> Phi_sigma(b;c;x) on R; negative arguments are served
// through the reflection identity.
InequalityCheck check_echf_logconvex_x(double b, double c, double sigma, double x,
                                       double y, double alpha,
                                       const CheckContext& ctx = {});

// Log-convexity of sigma -> Phi_sigma(b;c;x) for fixed x > 0.
InequalityCheck check_echf_logconvex_sigma(double b, double c, double x, double sigma1,
                                           double sigma2, double alpha,
                                           const CheckContext& ctx = {});

// b -> B(b,c-b) Phi_sigma(b+delta;c;x) / (B(b+delta,c-b-delta) Phi_sigma(b;c;x))
// decreasing on b_grid (normalizers follow the proof's integral weight).
// Returns [0] that check and [1] the paper's literal B(b,c)/B(b+delta,c)
// normalization as an informational row.
std::vector<MonotonicityCheck> check_echf_b_ratio_decreasing(
    double c, double x, double sigma, double delta, std::span<const double> b_grid,
    const CheckContext& ctx = {});

// Reverse Turan:
//   Phi^2(b+delta;c;x) >= [B^2(b+delta,c)/(B(b+2delta,c)B(b,c))]
//                         * Phi(b+2delta;c;x) Phi(b;c;x),  c > b + 2 delta.
InequalityCheck check_echf_reverse_turan(double b, double c, double x, double sigma,
                                         double delta, const CheckContext& ctx = {});

// --- EGHF counterparts (i)-(iv) --------------------------------------------

// x -> F_sigma(a,b;c;x)/F_sigma(a,b;d;x) decreasing on (0,1) for c >= d.
MonotonicityCheck check_eghf_ratio_decreasing(double a, double b, double c, double d,
                                              double sigma, std::span<const double> x_grid,
                                              const CheckContext& ctx = {});

// d F_sigma(a+1,b+1;c+1;x) F_sigma(a,b;d;x)
//   <= c F_sigma(a+1,b+1;d+1;x) F_sigma(a,b;c;x) for c >= d.
InequalityCheck check_eghf_product(double a, double b, double c, double d, double sigma,
                                   double x, const CheckContext& ctx = {});

// Log-convexity of sigma -> F_sigma(a,b;c;x), x in (0,1).
InequalityCheck check_eghf_logconvex_sigma(double a, double b, double c, double x,
                                           double sigma1, double sigma2, double alpha,
                                           const CheckContext& ctx = {});

// Midpoint log-convexity of a -> F_sigma(a,b;c;x) over adjacent a_grid pairs
// (Karp-Sitnik criterion); reports the pair with the smallest normalized slack.
InequalityCheck check_eghf_logconvex_a(double b, double c, double sigma, double x,
                                       std::span<const double> a_grid,
                                       const CheckContext& ctx = {});

// The four assertions bundled, mirroring the ECHF suite.
struct EghfSuiteParams {
    double a = 1.0;
    double b = 1.0;
    double c = 3.0;
    double d = 2.0;
    double sigma = 0.0;
    double x = 0.5;
    std::vector<double> x_grid;
    double alpha = 0.5;
    double sigma1 = 0.5;
    double sigma2 = 1.5;
    std::vector<double> a_grid;
};

struct EghfSuiteChecks {
    MonotonicityCheck ratio_decreasing;
    InequalityCheck product;
    InequalityCheck logconvex_sigma;
    InequalityCheck logconvex_a;
};

EghfSuiteChecks check_eghf_suite(const EghfSuiteParams& params,
                                 const CheckContext& ctx = {});

}  // namespace exbeta
