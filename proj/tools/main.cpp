#include <charconv>
#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "exbeta/gamma_kernel.hpp"
#include "exbeta/inequalities.hpp"
#include "exbeta/sweep.hpp"
#include "exbeta/xbeta.hpp"
#include "exbeta/xhyper.hpp"

namespace {

using exbeta::CheckContext;
using exbeta::SweepRow;
using exbeta::Verdict;

// Exit codes, shared with the acceptance docs:
// 0 ok, 1 violation, 2 usage, 3 domain, 4 indeterminate/non-converged, 5 I/O.
enum ExitCode {
    kOk = 0,
    kViolation = 1,
    kUsage = 2,
    kDomain = 3,
    kIndeterminate = 4,
    kIo = 5,
};

std::string format_double(double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

// Grid flags accept "lo:hi:count" (linear spacing) or "v1,v2,...".
std::vector<double> parse_grid(const std::string& text) {
    std::vector<double> grid;
    try {
        if (text.find(':') != std::string::npos) {
            const auto first = text.find(':');
            const auto second = text.find(':', first + 1);
            if (second == std::string::npos) throw std::invalid_argument(text);
            const double lo = std::stod(text.substr(0, first));
            const double hi = std::stod(text.substr(first + 1, second - first - 1));
            const int n = std::stoi(text.substr(second + 1));
            if (n < 1) throw std::invalid_argument(text);
            for (int i = 0; i < n; ++i)
                grid.push_back(n == 1 ? lo : lo + (hi - lo) * i / (n - 1));
            return grid;
        }
        std::size_t pos = 0;
        while (pos <= text.size()) {
            const std::size_t comma = text.find(',', pos);
            grid.push_back(std::stod(text.substr(pos, comma - pos)));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed grid '" + text +
                                    "' (expected lo:hi:count or v1,v2,...)");
    }
    return grid;
}

struct ParamFlags {
    std::map<std::string, std::optional<double>> scalars;
    std::string x_grid, sigma_grid, b_grid, a_grid;

    double need(const std::string& key) const {
        const auto it = scalars.find(key);
        if (it == scalars.end() || !it->second.has_value())
            throw std::invalid_argument("missing required parameter --" + key);
        return *it->second;
    }
    std::vector<double> grid_or(const std::string& text, const char* fallback) const {
        return parse_grid(text.empty() ? fallback : text);
    }
};

void add_param_flags(CLI::App* cmd, ParamFlags& p) {
    static const std::vector<std::pair<const char*, const char*>> kScalars = {
        {"x", "x parameter"},       {"y", "y parameter"},
        {"x1", "x1 parameter"},     {"y1", "y1 parameter"},
        {"x2", "x2 parameter"},     {"y2", "y2 parameter"},
        {"sigma", "sigma >= 0"},    {"a", "a parameter"},
        {"b", "b parameter"},       {"c", "c parameter"},
        {"d", "d parameter"},       {"alpha", "alpha (or weight in [0,1])"},
        {"beta", "beta parameter"}, {"delta", "delta shift"},
        {"m", "m exponent"},        {"n", "n exponent"},
        {"p", "p exponent"},        {"q", "q exponent"},
    };
    for (const auto& [name, desc] : kScalars)
        cmd->add_option("--" + std::string(name), p.scalars[name], desc);
    cmd->add_option("--s1,--sigma1", p.scalars["sigma1"], "sigma1 > 0");
    cmd->add_option("--s2,--sigma2", p.scalars["sigma2"], "sigma2 > 0");
    cmd->add_option("--x-grid", p.x_grid, "x grid, lo:hi:count or comma list");
    cmd->add_option("--sigma-grid", p.sigma_grid, "sigma grid");
    cmd->add_option("--b-grid", p.b_grid, "b grid");
    cmd->add_option("--a-grid", p.a_grid, "a grid");
}

const std::vector<std::string>& registered_check_names() {
    static const std::vector<std::string> names{
        "thm1",
        "turan-sigma",
        "thm2-ratio-decreasing",
        "logconvex-sigma",
        "thm3-midpoint",
        "gruss-extbeta",
        "gruss-shift",
        "gruss-power",
        "echf-ratio-decreasing",
        "echf-product",
        "echf-logconvex-x",
        "echf-logconvex-sigma",
        "echf-b-ratio-decreasing",
        "echf-reverse-turan",
        "eghf-suite",
    };
    return names;
}

std::vector<SweepRow> run_named_check(const std::string& name, const ParamFlags& p,
                                      const CheckContext& ctx) {
    using namespace exbeta;
    auto one = [](const InequalityCheck& c) { return std::vector<SweepRow>{to_row(c, 0)}; };
    auto many = [](const auto& checks) {
        std::vector<SweepRow> rows;
        for (const auto& c : checks) rows.push_back(to_row(c, 0));
        return rows;
    };

    if (name == "thm1")
        return one(check_thm1(p.need("x"), p.need("x1"), p.need("y"), p.need("y1"),
                              p.need("sigma"), ctx));
    if (name == "turan-sigma")
        return one(check_turan_sigma(p.need("x"), p.need("y"), p.need("sigma"), p.need("a"),
                                     ctx));
    if (name == "thm2-ratio-decreasing")
        return {to_row(check_thm2_ratio_decreasing(
                           p.need("x"), p.need("y"), p.grid_or(p.sigma_grid, "0.5,1,2,4"), ctx),
                       0)};
    if (name == "logconvex-sigma")
        return one(check_logconvex_sigma(p.need("x"), p.need("y"), p.need("sigma1"),
                                         p.need("sigma2"), p.need("alpha"), ctx));
    if (name == "thm3-midpoint")
        return one(check_thm3_midpoint(p.need("x1"), p.need("y1"), p.need("x2"), p.need("y2"),
                                       p.need("sigma"), ctx));
    if (name == "gruss-extbeta")
        return many(check_gruss_extbeta(p.need("x"), p.need("y"), p.need("sigma1"),
                                        p.need("sigma2"), ctx));
    if (name == "gruss-shift")
        return many(check_gruss_shift(p.need("x"), p.need("y"), p.need("x1"), p.need("y1"),
                                      p.need("sigma"), ctx));
    if (name == "gruss-power")
        return many(check_gruss_power(p.need("alpha"), p.need("beta"), p.need("m"),
                                      p.need("n"), p.need("p"), p.need("q"), p.need("sigma"),
                                      ctx));
    if (name == "echf-ratio-decreasing")
        return {to_row(check_echf_ratio_decreasing(p.need("b"), p.need("c"), p.need("d"),
                                                   p.need("sigma"),
                                                   p.grid_or(p.x_grid, "0.5:2.5:8"), ctx),
                       0)};
    if (name == "echf-product")
        return one(check_echf_product(p.need("b"), p.need("c"), p.need("d"), p.need("sigma"),
                                      p.need("x"), ctx));
    if (name == "echf-logconvex-x")
        return one(check_echf_logconvex_x(p.need("b"), p.need("c"), p.need("sigma"),
                                          p.need("x"), p.need("y"), p.need("alpha"), ctx));
    if (name == "echf-logconvex-sigma")
        return one(check_echf_logconvex_sigma(p.need("b"), p.need("c"), p.need("x"),
                                              p.need("sigma1"), p.need("sigma2"),
                                              p.need("alpha"), ctx));
    if (name == "echf-b-ratio-decreasing")
        return many(check_echf_b_ratio_decreasing(p.need("c"), p.need("x"), p.need("sigma"),
                                                  p.need("delta"),
                                                  p.grid_or(p.b_grid, "0.5:2:6"), ctx));
    if (name == "echf-reverse-turan")
        return one(check_echf_reverse_turan(p.need("b"), p.need("c"), p.need("x"),
                                            p.need("sigma"), p.need("delta"), ctx));
    if (name == "eghf-suite") {
        EghfSuiteParams sp;
        sp.a = p.need("a");
        sp.b = p.need("b");
        sp.c = p.need("c");
        sp.d = p.need("d");
        sp.sigma = p.need("sigma");
        sp.x = p.need("x");
        sp.alpha = p.need("alpha");
        sp.sigma1 = p.need("sigma1");
        sp.sigma2 = p.need("sigma2");
        sp.x_grid = p.grid_or(p.x_grid, "0.1:0.85:8");
        sp.a_grid = p.grid_or(p.a_grid, "0.5:3:4");
        const EghfSuiteChecks suite = check_eghf_suite(sp, ctx);
        return {to_row(suite.ratio_decreasing, 0), to_row(suite.product, 0),
                to_row(suite.logconvex_sigma, 0), to_row(suite.logconvex_a, 0)};
    }

    std::string msg = "unknown check '" + name + "'; registered checks:";
    for (const auto& n : registered_check_names()) msg += "\n  " + n;
    throw std::invalid_argument(msg);
}

void print_rows(const std::vector<SweepRow>& rows) {
    for (const auto& row : rows) {
        std::cout << "check     = " << row.check_name
                  << (row.informational ? "  (informational)" : "") << "\n";
        for (const auto& [key, value] : row.inputs)
            std::cout << "  " << key << " = " << format_double(value) << "\n";
        std::cout << "lhs       = " << format_double(row.lhs) << "\n"
                  << "rhs       = " << format_double(row.rhs) << "\n"
                  << "slack     = " << format_double(row.slack) << "\n"
                  << "tolerance = " << format_double(row.tolerance) << "\n"
                  << "verdict   = " << to_string(row.verdict) << "\n";
    }
}

int exit_code_for(const std::vector<SweepRow>& rows) {
    bool indeterminate = false;
    for (const auto& row : rows) {
        if (row.informational) continue;
        if (row.verdict == Verdict::violated) return kViolation;
        if (row.verdict == Verdict::indeterminate) indeterminate = true;
    }
    return indeterminate ? kIndeterminate : kOk;
}

std::string default_out_dir() {
    if (const char* env = std::getenv("EXBETA_OUT_DIR"); env && *env) return env;
    return ".";
}

int run(int argc, char** argv) {
    CLI::App app{"extended beta / hypergeometric evaluator and inequality certifier"};
    app.require_subcommand(1);
    app.set_version_flag("--version", exbeta::kArtifactVersion);

    // --- eval ---
    auto* eval_cmd = app.add_subcommand("eval", "evaluate extbeta, echf or eghf");
    eval_cmd->set_config("--config");
    std::string eval_fn;
    eval_cmd->add_option("function", eval_fn, "one of extbeta|echf|eghf")
        ->required()
        ->check(CLI::IsMember({"extbeta", "echf", "eghf"}));
    ParamFlags eval_params;
    add_param_flags(eval_cmd, eval_params);
    std::string route = "integral";
    eval_cmd->add_option("--route", route, "series|integral")
        ->check(CLI::IsMember({"series", "integral"}));
    exbeta::QuadratureConfig eval_cfg;
    eval_cmd->add_option("--abs-tol", eval_cfg.abs_tol, "absolute tolerance");
    eval_cmd->add_option("--rel-tol", eval_cfg.rel_tol, "relative tolerance");
    eval_cmd->add_option("--max-levels", eval_cfg.max_levels, "refinement depth");

    // --- check ---
    auto* check_cmd = app.add_subcommand("check", "run one named inequality check");
    check_cmd->set_config("--config");
    std::string check_name;
    check_cmd->add_option("name", check_name, "registered check name")->required();
    ParamFlags check_params;
    add_param_flags(check_cmd, check_params);
    double check_tol = 1e-10;
    check_cmd->add_option("--slack-tol", check_tol, "relative slack tolerance");

    // --- sweep ---
    auto* sweep_cmd = app.add_subcommand("sweep", "randomized certification sweep");
    sweep_cmd->set_config("--config");
    exbeta::SweepOptions sweep_opts;
    sweep_cmd->add_option("--suite", sweep_opts.suite, "all|thm1|thm2|thm3|gruss|echf|eghf")
        ->check(CLI::IsMember(exbeta::suite_names()));
    sweep_cmd->add_option("--n", sweep_opts.n, "number of checks")->required();
    sweep_cmd->add_option("--seed", sweep_opts.seed, "RNG seed")->required();
    sweep_cmd->add_option("--threads", sweep_opts.threads, "worker threads (0 = auto)");
    sweep_cmd->add_option("--slack-tol", sweep_opts.ctx.slack_rel_tol,
                          "relative slack tolerance");
    std::string out_dir = default_out_dir();
    sweep_cmd->add_option("--out", out_dir, "output directory for CSV/JSON");

    // --- report ---
    auto* report_cmd = app.add_subcommand("report", "re-render a sweep CSV as text");
    std::string report_in;
    report_cmd->add_option("--in", report_in, "sweep CSV path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    if (eval_cmd->parsed()) {
        exbeta::QuadratureResult result;
        if (eval_fn == "extbeta") {
            result = exbeta::ext_beta({eval_params.need("x"), eval_params.need("y"),
                                       eval_params.need("sigma")},
                                      eval_cfg);
        } else {
            exbeta::HypergeomParams hp;
            hp.b = eval_params.need("b");
            hp.c = eval_params.need("c");
            hp.sigma = eval_params.need("sigma");
            hp.x = eval_params.need("x");
            hp.route = route == "series" ? exbeta::Route::series : exbeta::Route::integral;
            if (eval_fn == "eghf") {
                hp.a = eval_params.need("a");
                result = exbeta::eghf(hp, {}, eval_cfg);
            } else {
                result = exbeta::echf(hp, {}, eval_cfg);
            }
        }
        std::cout << format_double(result.value) << "\n"
                  << "error_estimate = " << format_double(result.error_estimate) << "\n"
                  << "evaluations    = " << result.evaluations << "\n"
                  << "converged      = " << (result.converged ? "true" : "false") << "\n";
        return result.converged ? kOk : kIndeterminate;
    }

    if (check_cmd->parsed()) {
        CheckContext ctx;
        ctx.slack_rel_tol = check_tol;
        const auto rows = run_named_check(check_name, check_params, ctx);
        print_rows(rows);
        return exit_code_for(rows);
    }

    if (sweep_cmd->parsed()) {
        const exbeta::SweepResult result = exbeta::run_sweep(sweep_opts);
        const std::string stem = out_dir + "/sweep_" + sweep_opts.suite + "_seed" +
                                 std::to_string(sweep_opts.seed) + "_n" +
                                 std::to_string(sweep_opts.n);
        exbeta::write_text_file(stem + ".csv", exbeta::sweep_csv(result));
        const std::string summary = exbeta::sweep_summary_json(result.report);
        exbeta::write_text_file(stem + ".json", summary);
        std::cout << summary << "csv  = " << stem << ".csv\n"
                  << "json = " << stem << ".json\n";
        return result.report.failed == 0 ? kOk : kViolation;
    }

    if (report_cmd->parsed()) {
        std::cout << exbeta::render_csv_report(exbeta::read_text_file(report_in));
        return kOk;
    }
    return kUsage;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kDomain;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::runtime_error& e) {
        std::cerr << "I/O error: " << e.what() << "\n";
        return kIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
}
