#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "exbeta/inequalities.hpp"

namespace exbeta {

inline constexpr const char* kArtifactVersion = "0.1.0";

struct SweepOptions {
    std::string suite = "all";
    int n = 100;
    std::uint64_t seed = 0;
    int threads = 0;  // 0 = hardware concurrency
    CheckContext ctx{};
};

// One CSV line. Monotonicity checks are flattened with
// lhs = max_violation, rhs = 0, so slack >= -tolerance keeps its meaning.
struct SweepRow {
    int sample_index = 0;
    std::string check_name;
    ParamRecord inputs;
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;
    double tolerance = 0.0;
    Verdict verdict = Verdict::indeterminate;
    bool informational = false;
};

struct SweepReport {
    std::string suite_name;
    std::uint64_t seed = 0;
    int total = 0;
    int passed = 0;
    int failed = 0;
    int indeterminate = 0;
    double worst_slack = 0.0;
    std::string worst_check;
    ParamRecord worst_inputs;
    double wall_time_seconds = 0.0;
};

struct SweepResult {
    std::vector<SweepRow> rows;
    SweepReport report;
};

SweepRow to_row(const InequalityCheck& check, int sample_index);
SweepRow to_row(const MonotonicityCheck& check, int sample_index);

const std::vector<std::string>& suite_names();

// Check kinds run by a suite, in round-robin order. Throws
// std::invalid_argument for an unknown suite.
const std::vector<std::string>& suite_kinds(const std::string& suite);

// Runs n checks: sample i executes kind i mod |kinds| with an RNG stream
// derived from (seed, i), so output is independent of thread count and
// schedule. Informational rows ride along with their sample but are excluded
// from the report totals.
SweepResult run_sweep(const SweepOptions& opts);

// Byte-stable renderings (shortest round-trip number formatting).
std::string sweep_csv(const SweepResult& result);
std::string sweep_summary_json(const SweepReport& report);

// Re-render of a previously written sweep CSV as a per-check text summary.
std::string render_csv_report(const std::string& csv_text);

// Small file helpers used by the CLI; throw std::runtime_error on failure.
void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

}  // namespace exbeta
