#pragma once

#include <string>
#include <utility>
#include <vector>

namespace hopftube {

// Fixed-width scientific formatting used everywhere a floating-point value is
// serialized.  Keeping a single formatter makes reruns byte-identical.
std::string format_value(double x);

// One named check inside a scenario run.  `applicable == false` marks checks
// that were structurally skipped (e.g. a biduality test on a non-quadric);
// such checks never count as failures.
struct CheckResult {
    std::string name;
    bool passed = false;
    bool applicable = true;
    std::vector<std::pair<std::string, double>> metrics;  // emission order preserved
    std::vector<std::string> notes;
};

// A rectangular table attached to a run (rank sweeps, blow-up slopes, ...).
// Cells are pre-formatted strings so integer columns stay integers.
struct ReportTable {
    std::string name;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

struct Report {
    std::string scenario_name;
    std::string version;
    unsigned long long seed = 0;
    // Wall time is printed to the console, never into the report files, so a
    // rerun with identical inputs produces identical bytes.
    std::string runtime = "not-recorded";
    std::vector<std::pair<std::string, std::string>> scenario_echo;
    std::vector<CheckResult> checks;
    std::vector<ReportTable> tables;

    bool overall_pass() const;
};

std::string format_report_text(const Report& rep);
std::string format_report_json(const Report& rep);
std::string format_table_csv(const ReportTable& table);

// Writes <name>.report.txt, <name>.report.json and one <name>.<table>.csv per
// table into out_dir (created if missing).  Returns the paths written.
std::vector<std::string> write_report_files(const Report& rep, const std::string& out_dir);

}  // namespace hopftube
