#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vtsim/config.hpp"
#include "vtsim/stats.hpp"

namespace vtsim {

struct SweepSpec {
    std::vector<int> m_values;
    std::vector<int> n_values;
    std::vector<PredictionMethod> methods;
    int n_mc = 1;
    std::uint64_t base_seed = 0;
    EngagementConfig base_config;

    void validate() const;
};

/// Seed for run r of cell (m, n). Deliberately independent of the prediction
/// method: both methods replay the same target maneuvers for a given
/// (m, n, r), which pairs the comparison.
std::uint64_t run_seed_for(std::uint64_t base_seed, int m, int n, int run_index);

struct CellResult {
    int m = 0;
    int n = 0;
    PredictionMethod method = PredictionMethod::StraightLine;
    int runs = 0;                ///< Monte Carlo runs executed
    int hits = 0;                ///< total interceptions across runs
    int possible = 0;            ///< m * runs
    double fraction = 0.0;       ///< hits / possible
    Interval ci;                 ///< 95% Wilson interval on the fraction
    double mean_hit_time = 0.0;  ///< seconds, NaN when the cell has no hits
    double mean_miss_closest = 0.0;  ///< mean closest approach of non-hitting
                                     ///< interceptors (m), NaN when none
    std::string error;               ///< nonempty when the cell aborted
};

struct AggregateResult {
    SweepSpec spec;
    std::vector<CellResult> cells;  ///< ordered by (m, n, method) as listed in spec
};

/// Executes every cell's runs on a pool of `parallelism` threads. Run seeds
/// are derived, and per-run outputs reduced in index order, so the result is
/// identical for any parallelism degree. A run that throws aborts its cell:
/// the cell keeps the first error (by run index) as its diagnostic and
/// contributes no statistics, while all other cells complete normally.
AggregateResult run_sweep(const SweepSpec& spec, int parallelism);

}  // namespace vtsim
