#include "exbeta/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <exception>
#include <fstream>
#include <limits>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

namespace exbeta {
namespace {

// splitmix64; the per-sample stream depends only on (seed, index).
std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Deterministic across platforms, unlike std::uniform_real_distribution.
class SampleRng {
public:
    SampleRng(std::uint64_t seed, std::uint64_t index)
        : state_(mix64(seed ^ mix64(index))) {}

    double uniform01() {
        state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
        const std::uint64_t z = mix64(state_);
        return static_cast<double>(z >> 11) * 0x1.0p-53;
    }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }
    double log_uniform(double lo, double hi) {
        return std::exp(uniform(std::log(lo), std::log(hi)));
    }

private:
    std::uint64_t state_;
};

std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> g(n);
    for (int i = 0; i < n; ++i) g[i] = lo + (hi - lo) * i / (n - 1);
    return g;
}

std::vector<double> logspace(double lo, double hi, int n) {
    std::vector<double> g = linspace(std::log(lo), std::log(hi), n);
    for (double& v : g) v = std::exp(v);
    return g;
}

// Log-uniform [0.1, 10] is the default magnitude distribution for positive
// parameters; sign conditions are built in by adding positive gaps.
constexpr double kLo = 0.1;
constexpr double kHi = 10.0;

std::vector<SweepRow> rows_of(const InequalityCheck& c) { return {to_row(c, 0)}; }
std::vector<SweepRow> rows_of(const MonotonicityCheck& c) { return {to_row(c, 0)}; }

std::vector<SweepRow> pick(const std::vector<InequalityCheck>& checks,
                           const std::string& primary) {
    // The named check plus any informational companions.
    std::vector<SweepRow> rows;
    for (const auto& c : checks)
        if (c.name == primary || (c.informational && c.name.rfind(primary, 0) == 0))
            rows.push_back(to_row(c, 0));
    return rows;
}

std::vector<SweepRow> run_kind(const std::string& kind, SampleRng& rng,
                               const CheckContext& ctx) {
    if (kind == "thm1") {
        const double x1 = rng.log_uniform(kLo, kHi), y1 = rng.log_uniform(kLo, kHi);
        const double x = x1 + rng.log_uniform(kLo, kHi), y = y1 + rng.log_uniform(kLo, kHi);
        return rows_of(check_thm1(x, x1, y, y1, rng.log_uniform(kLo, kHi), ctx));
    }
    if (kind == "turan-sigma") {
        const double sigma = rng.log_uniform(kLo, kHi);
        return rows_of(check_turan_sigma(rng.log_uniform(kLo, kHi), rng.log_uniform(kLo, kHi),
                                         sigma, sigma * rng.uniform01(), ctx));
    }
    if (kind == "logconvex-sigma") {
        return rows_of(check_logconvex_sigma(rng.log_uniform(kLo, kHi),
                                             rng.log_uniform(kLo, kHi),
                                             rng.log_uniform(kLo, kHi),
                                             rng.log_uniform(kLo, kHi), rng.uniform01(), ctx));
    }
    if (kind == "thm2-ratio-decreasing") {
        const double lo = rng.log_uniform(kLo, 0.5), hi = rng.log_uniform(2.0, kHi);
        const auto grid = logspace(lo, hi, 8);
        return rows_of(check_thm2_ratio_decreasing(rng.log_uniform(kLo, kHi),
                                                   rng.log_uniform(kLo, kHi), grid, ctx));
    }
    if (kind == "thm3-midpoint") {
        return rows_of(check_thm3_midpoint(rng.log_uniform(kLo, kHi), rng.log_uniform(kLo, kHi),
                                           rng.log_uniform(kLo, kHi), rng.log_uniform(kLo, kHi),
                                           rng.log_uniform(kLo, kHi), ctx));
    }
    if (kind == "gruss-extbeta-mid" || kind == "gruss-extbeta-outer") {
        const auto checks =
            check_gruss_extbeta(rng.log_uniform(kLo, kHi), rng.log_uniform(kLo, kHi),
                                rng.log_uniform(kLo, kHi), rng.log_uniform(kLo, kHi), ctx);
        return pick(checks, kind);
    }
    if (kind == "gruss-shift-mid" || kind == "gruss-shift-outer") {
        const auto checks = check_gruss_shift(
            rng.log_uniform(kLo, kHi), rng.log_uniform(kLo, kHi), rng.log_uniform(kLo, kHi),
            rng.log_uniform(kLo, kHi), rng.log_uniform(kLo, kHi), ctx);
        return pick(checks, kind);
    }
    if (kind == "gruss-power-mid" || kind == "gruss-power-outer") {
        const auto checks = check_gruss_power(
            rng.log_uniform(kLo, kHi), rng.log_uniform(kLo, kHi), rng.log_uniform(kLo, kHi),
            rng.log_uniform(kLo, kHi), rng.log_uniform(kLo, kHi), rng.log_uniform(kLo, kHi),
            rng.log_uniform(kLo, kHi), ctx);
        return pick(checks, kind);
    }
    if (kind == "echf-ratio-decreasing") {
        const double b = rng.log_uniform(kLo, 5.0);
        const double d = b + rng.log_uniform(kLo, kHi);
        const double c = d + rng.log_uniform(kLo, kHi);
        const double x0 = rng.uniform(0.05, 0.5);
        const auto grid = linspace(x0, x0 + rng.log_uniform(0.5, 4.0), 8);
        return rows_of(
            check_echf_ratio_decreasing(b, c, d, rng.log_uniform(kLo, kHi), grid, ctx));
    }
    if (kind == "echf-product") {
        const double b = rng.log_uniform(kLo, 5.0);
        const double d = b + rng.log_uniform(kLo, kHi);
        const double c = d + rng.log_uniform(kLo, kHi);
        return rows_of(check_echf_product(b, c, d, rng.log_uniform(kLo, kHi),
                                          rng.log_uniform(kLo, kHi), ctx));
    }
    if (kind == "echf-logconvex-x") {
        const double b = rng.log_uniform(kLo, 5.0);
        const double c = b + rng.log_uniform(kLo, kHi);
        // The claim is log-convexity on all of R; exercise both signs so the
        // reflection identity sees sweep traffic.
        const double x = rng.log_uniform(kLo, kHi) * (rng.uniform01() < 0.5 ? -1.0 : 1.0);
        const double y = rng.log_uniform(kLo, kHi) * (rng.uniform01() < 0.5 ? -1.0 : 1.0);
        return rows_of(check_echf_logconvex_x(b, c, rng.log_uniform(kLo, kHi), x, y,
                                              rng.uniform01(), ctx));
    }
    if (kind == "echf-logconvex-sigma") {
        const double b = rng.log_uniform(kLo, 5.0);
        const double c = b + rng.log_uniform(kLo, kHi);
        return rows_of(check_echf_logconvex_sigma(b, c, rng.log_uniform(kLo, kHi),
                                                  rng.log_uniform(kLo, kHi),
                                                  rng.log_uniform(kLo, kHi), rng.uniform01(),
                                                  ctx));
    }
    if (kind == "echf-b-ratio-decreasing") {
        const double b_lo = rng.log_uniform(kLo, 2.0);
        const double b_hi = b_lo + rng.log_uniform(0.5, 3.0);
        const double delta = rng.log_uniform(kLo, 2.0);
        const double c = b_hi + delta + rng.log_uniform(kLo, kHi);
        const auto grid = linspace(b_lo, b_hi, 6);
        const auto checks = check_echf_b_ratio_decreasing(
            c, rng.log_uniform(kLo, 5.0), rng.log_uniform(kLo, kHi), delta, grid, ctx);
        std::vector<SweepRow> rows;
        for (const auto& c2 : checks) rows.push_back(to_row(c2, 0));
        return rows;
    }
    if (kind == "echf-reverse-turan") {
        const double b = rng.log_uniform(kLo, 5.0);
        const double delta = rng.log_uniform(kLo, 3.0);
        const double c = b + 2 * delta + rng.log_uniform(kLo, kHi);
        return rows_of(check_echf_reverse_turan(b, c, rng.log_uniform(kLo, 5.0),
                                                rng.log_uniform(kLo, kHi), delta, ctx));
    }
    if (kind == "eghf-ratio-decreasing") {
        const double a = rng.log_uniform(kLo, 5.0);
        const double b = rng.log_uniform(kLo, 5.0);
        const double d = b + rng.log_uniform(kLo, kHi);
        const double c = d + rng.log_uniform(kLo, kHi);
        const double x0 = rng.uniform(0.02, 0.3);
        const double x1 = std::min(x0 + rng.uniform(0.1, 0.6), 0.92);
        const auto grid = linspace(x0, x1, 8);
        return rows_of(
            check_eghf_ratio_decreasing(a, b, c, d, rng.log_uniform(kLo, kHi), grid, ctx));
    }
    if (kind == "eghf-product") {
        const double a = rng.log_uniform(kLo, 5.0);
        const double b = rng.log_uniform(kLo, 5.0);
        const double d = b + rng.log_uniform(kLo, kHi);
        const double c = d + rng.log_uniform(kLo, kHi);
        return rows_of(check_eghf_product(a, b, c, d, rng.log_uniform(kLo, kHi),
                                          rng.uniform(0.05, 0.9), ctx));
    }
    if (kind == "eghf-logconvex-sigma") {
        const double a = rng.log_uniform(kLo, 5.0);
        const double b = rng.log_uniform(kLo, 5.0);
        const double c = b + rng.log_uniform(kLo, kHi);
        return rows_of(check_eghf_logconvex_sigma(a, b, c, rng.uniform(0.05, 0.9),
                                                  rng.log_uniform(kLo, kHi),
                                                  rng.log_uniform(kLo, kHi), rng.uniform01(),
                                                  ctx));
    }
    if (kind == "eghf-logconvex-a") {
        const double b = rng.log_uniform(kLo, 5.0);
        const double c = b + rng.log_uniform(kLo, kHi);
        const double a0 = rng.log_uniform(kLo, 3.0);
        const auto grid = linspace(a0, a0 + rng.log_uniform(0.5, 5.0), 4);
        return rows_of(check_eghf_logconvex_a(b, c, rng.log_uniform(kLo, kHi),
                                              rng.uniform(0.05, 0.9), grid, ctx));
    }
    throw std::invalid_argument("unknown check kind: " + kind);
}

const std::vector<std::string>& kinds_thm1() {
    static const std::vector<std::string> k{"thm1"};
    return k;
}
const std::vector<std::string>& kinds_thm2() {
    static const std::vector<std::string> k{"turan-sigma", "logconvex-sigma",
                                            "thm2-ratio-decreasing"};
    return k;
}
const std::vector<std::string>& kinds_thm3() {
    static const std::vector<std::string> k{"thm3-midpoint"};
    return k;
}
const std::vector<std::string>& kinds_gruss() {
    static const std::vector<std::string> k{"gruss-extbeta-mid", "gruss-extbeta-outer",
                                            "gruss-shift-mid",   "gruss-shift-outer",
                                            "gruss-power-mid",   "gruss-power-outer"};
    return k;
}
const std::vector<std::string>& kinds_echf() {
    static const std::vector<std::string> k{
        "echf-ratio-decreasing", "echf-product",           "echf-logconvex-x",
        "echf-logconvex-sigma",  "echf-b-ratio-decreasing", "echf-reverse-turan"};
    return k;
}
const std::vector<std::string>& kinds_eghf() {
    static const std::vector<std::string> k{"eghf-ratio-decreasing", "eghf-product",
                                            "eghf-logconvex-sigma", "eghf-logconvex-a"};
    return k;
}

std::string format_double(double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

const std::vector<std::string>& csv_param_columns() {
    static const std::vector<std::string> cols{
        "x",  "y",     "x1",    "y1",    "x2", "y2", "sigma", "sigma1",
        "sigma2", "a", "b",     "c",     "d",  "alpha",  "beta", "delta",
        "m",  "n",     "p",     "q",     "grid_lo", "grid_hi", "grid_n"};
    return cols;
}

}  // namespace

SweepRow to_row(const InequalityCheck& check, int sample_index) {
    SweepRow r;
    r.sample_index = sample_index;
    r.check_name = check.name;
    r.inputs = check.inputs;
    r.lhs = check.lhs;
    r.rhs = check.rhs;
    r.slack = check.slack;
    r.tolerance = check.tolerance;
    r.verdict = check.verdict;
    r.informational = check.informational;
    return r;
}

SweepRow to_row(const MonotonicityCheck& check, int sample_index) {
    SweepRow r;
    r.sample_index = sample_index;
    r.check_name = check.name;
    r.inputs = check.inputs;
    r.lhs = check.max_violation;
    r.rhs = 0.0;
    r.slack = -check.max_violation;
    r.tolerance = check.tolerance;
    r.verdict = check.verdict;
    r.informational = check.informational;
    return r;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"all",   "thm1", "thm2", "thm3",
                                                "gruss", "echf", "eghf"};
    return names;
}

const std::vector<std::string>& suite_kinds(const std::string& suite) {
    static const std::vector<std::string> all = [] {
        std::vector<std::string> k;
        for (const auto* part : {&kinds_thm1(), &kinds_thm2(), &kinds_thm3(), &kinds_gruss(),
                                 &kinds_echf(), &kinds_eghf()})
            k.insert(k.end(), part->begin(), part->end());
        return k;
    }();
    if (suite == "all") return all;
    if (suite == "thm1") return kinds_thm1();
    if (suite == "thm2") return kinds_thm2();
    if (suite == "thm3") return kinds_thm3();
    if (suite == "gruss") return kinds_gruss();
    if (suite == "echf") return kinds_echf();
    if (suite == "eghf") return kinds_eghf();
    throw std::invalid_argument("unknown suite: " + suite);
}

SweepResult run_sweep(const SweepOptions& opts) {
    const auto& kinds = suite_kinds(opts.suite);
    if (opts.n < 1) throw std::invalid_argument("sweep requires n >= 1");

    const auto start = std::chrono::steady_clock::now();
    unsigned threads = opts.threads > 0 ? static_cast<unsigned>(opts.threads)
                                        : std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(opts.n));

    std::vector<std::vector<SweepRow>> by_sample(opts.n);
    std::atomic<int> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto worker = [&] {
        for (int i = next.fetch_add(1); i < opts.n; i = next.fetch_add(1)) {
            try {
                SampleRng rng(opts.seed, static_cast<std::uint64_t>(i));
                auto rows = run_kind(kinds[i % kinds.size()], rng, opts.ctx);
                for (auto& r : rows) r.sample_index = i;
                by_sample[i] = std::move(rows);
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                return;
            }
        }
    };

    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);

    SweepResult res;
    res.report.suite_name = opts.suite;
    res.report.seed = opts.seed;
    bool have_worst = false;
    for (auto& rows : by_sample) {
        for (auto& row : rows) {
            if (!row.informational) {
                ++res.report.total;
                switch (row.verdict) {
                    case Verdict::satisfied: ++res.report.passed; break;
                    case Verdict::violated: ++res.report.failed; break;
                    case Verdict::indeterminate: ++res.report.indeterminate; break;
                }
                if (row.verdict != Verdict::indeterminate &&
                    (!have_worst || row.slack < res.report.worst_slack)) {
                    have_worst = true;
                    res.report.worst_slack = row.slack;
                    res.report.worst_check = row.check_name;
                    res.report.worst_inputs = row.inputs;
                }
            }
            res.rows.push_back(std::move(row));
        }
    }
    res.report.wall_time_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return res;
}

std::string sweep_csv(const SweepResult& result) {
    const auto& params = csv_param_columns();
    std::string out = "suite,check_name,sample_index";
    for (const auto& p : params) out += "," + p;
    out += ",lhs,rhs,slack,tolerance,verdict\n";

    for (const auto& row : result.rows) {
        out += result.report.suite_name;
        out += ',';
        out += row.check_name;
        out += ',';
        out += std::to_string(row.sample_index);
        for (const auto& p : params) {
            out += ',';
            for (const auto& [key, value] : row.inputs) {
                if (key == p) {
                    out += format_double(value);
                    break;
                }
            }
        }
        out += ',';
        out += format_double(row.lhs);
        out += ',';
        out += format_double(row.rhs);
        out += ',';
        out += format_double(row.slack);
        out += ',';
        out += format_double(row.tolerance);
        out += ',';
        if (row.informational) out += "info-";
        out += to_string(row.verdict);
        out += '\n';
    }
    return out;
}

std::string sweep_summary_json(const SweepReport& report) {
    nlohmann::ordered_json j;
    j["suite_name"] = report.suite_name;
    j["seed"] = report.seed;
    j["total"] = report.total;
    j["passed"] = report.passed;
    j["failed"] = report.failed;
    j["indeterminate"] = report.indeterminate;
    j["worst_slack"] = report.worst_slack;
    j["worst_check"] = report.worst_check;
    nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
    for (const auto& [key, value] : report.worst_inputs) inputs[key] = value;
    j["worst_inputs"] = inputs;
    j["wall_time_seconds"] = report.wall_time_seconds;
    j["artifact_version"] = kArtifactVersion;
    return j.dump(2) + "\n";
}

std::string render_csv_report(const std::string& csv_text) {
    std::istringstream in(csv_text);
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("empty CSV");

    struct Tally {
        int total = 0, passed = 0, failed = 0, indeterminate = 0, informational = 0;
        double worst_slack = std::numeric_limits<double>::infinity();
    };
    std::map<std::string, Tally> by_name;
    int rows = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        ++rows;
        std::vector<std::string> fields;
        std::size_t pos = 0;
        while (true) {
            const std::size_t comma = line.find(',', pos);
            fields.push_back(line.substr(pos, comma - pos));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        if (fields.size() < 5) throw std::runtime_error("malformed CSV row");
        const std::string& name = fields[1];
        const std::string& verdict = fields.back();
        const double slack = std::stod(fields[fields.size() - 3]);
        Tally& t = by_name[name];
        if (verdict.rfind("info-", 0) == 0) {
            ++t.informational;
            continue;
        }
        ++t.total;
        if (verdict == "satisfied") ++t.passed;
        else if (verdict == "violated") ++t.failed;
        else ++t.indeterminate;
        if (verdict != "indeterminate") t.worst_slack = std::min(t.worst_slack, slack);
    }

    std::ostringstream out;
    out << "check                                 total  passed  failed  indet  info  worst_slack\n";
    for (const auto& [name, t] : by_name) {
        out << name;
        for (std::size_t i = name.size(); i < 38; ++i) out << ' ';
        char buf[128];
        std::snprintf(buf, sizeof(buf), "%5d  %6d  %6d  %5d  %4d  ", t.total, t.passed,
                      t.failed, t.indeterminate, t.informational);
        out << buf;
        if (t.total > 0 && t.worst_slack != std::numeric_limits<double>::infinity())
            out << format_double(t.worst_slack);
        else
            out << "-";
        out << '\n';
    }
    out << "rows: " << rows << '\n';
    return out.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    out << content;
    out.flush();
    if (!out.good()) throw std::runtime_error("cannot write " + path);
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in.good()) throw std::runtime_error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace exbeta
