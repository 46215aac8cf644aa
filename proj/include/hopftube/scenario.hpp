#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hopftube/report.hpp"
#include "hopftube/space_forms.hpp"

namespace hopftube {

// Geometric object a scenario runs its checks against.
struct ScenarioObject {
    std::string kind;  // "sphere" | "tube" | "custom_chart"
    double radius = 0.0;
    std::string orientation;      // "inward" | "outward"; empty = kind default
    std::string base;             // tube base: "cp<k>" | "rp2" | "quadric" | "algebraic"
    int base_k = 1;               // k for a cp<k> base
    std::string polynomial_file;  // algebraic base / custom_chart source
    std::string polynomial_text;  // inline alternative (canned scenarios)
    std::vector<double> center;      // sphere center, re/im pairs; empty = e0
    std::vector<double> seed_point;  // algebraic chart seed, re/im pairs
};

struct Scenario {
    std::string name;
    std::string description;
    int curvature_sign = +1;  // +1 cp, -1 ch
    int n = 2;
    ScenarioObject object;
    std::vector<std::string> checks;
    std::vector<int> grid_counts;
    std::vector<double> grid_lo;
    std::vector<double> grid_hi;
    unsigned long long seed = 1;
    double fd_step = 1e-3;
    bool richardson = true;
    double tol = 1e-6;
    // rank_sweep parameters
    double sweep_lo = 0.06;
    double sweep_hi = 2.2;
    int sweep_steps = 50;
    // blow-up probe parameters
    std::vector<double> blowup_scales;
    std::string blowup_curve;  // "sextic" | "quadric"
};

struct RunOverrides {
    std::optional<unsigned long long> seed;
    std::optional<double> fd_step;
    std::optional<double> tol;
};

// Flat key-value text with [sections]; '#' starts a comment, blank lines are
// skipped.  Unknown sections/keys and malformed values raise ParseError with
// the offending line number.
Scenario parse_scenario(const std::string& text);
// Relative polynomial paths resolve against the config file's directory.
Scenario parse_scenario_file(const std::string& path);

const std::vector<Scenario>& canned_scenarios();
std::string list_scenarios();

// Canned scenario by name, else a config file path.
Scenario resolve_scenario(const std::string& name_or_path);

Report run_scenario(const Scenario& scenario, const RunOverrides& overrides = {});

}  // namespace hopftube
