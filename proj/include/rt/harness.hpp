#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rt/graph.hpp"
#include "rt/thresholds.hpp"
#include "rt/tiling.hpp"

namespace rt {

struct ProbeInstance {
    int id = 0;
    std::uint64_t seed = 0;
    int min_colour_degree = 0;
    bool at_or_above_bound = false;
    std::string outcome;  // tiled | untiled | unknown
};

struct ProbeReport {
    int r = 0;
    int n = 0;
    int bound = 0;  // conjectured colour-degree bound, rounded up
    std::vector<ProbeInstance> instances;
    /// Instances with delta^c at or above the bound and no tiling found,
    /// re-verified at 10x budget before being listed.
    std::vector<ProbeInstance> potential_counterexamples;
    /// Known extremal constructions sitting below the bound without a
    /// perfect tiling: description + confirmation flag.
    std::vector<std::pair<std::string, bool>> construction_checks;
};

/// Samples edge-coloured graphs around the conjectured colour-degree bound
/// for perfect rainbow-K_r-tilings and records solver outcomes. No assertion
/// is made about random instances; only the constructions are required to
/// behave as expected.
ProbeReport probe_conjecture(int r, int n, int trials, std::uint64_t seed, long budget);

struct ExperimentResult {
    std::string csv;
    std::vector<std::string> artifacts;  // files written under out_dir
};

/// Runs the experiment described by a JSON config and renders one CSV row
/// per instance (schema version in the header comment; wall-time last so a
/// rerun differs only there). Kinds: lp_sweep, probe_conjecture, thm13.
/// Config parse errors carry line numbers. Artifacts (certificates) are
/// written under out_dir when it is non-empty.
ExperimentResult run_experiment(const std::string& config_text, const std::string& out_dir);

ExperimentResult run_experiment_file(const std::string& config_path, const std::string& out_dir);

}  // namespace rt
