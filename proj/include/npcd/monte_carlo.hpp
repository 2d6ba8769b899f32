#pragma once

#include "npcd/detect.hpp"
#include "npcd/metrics.hpp"
#include "npcd/scenarios.hpp"

namespace npcd {

struct ReplicateResult {
    int rep = 0;
    std::uint64_t seed = 0;
    std::int64_t k_true = 0;
    std::int64_t k_est = 0;
    double d_est_given_true = 0.0;  // d(estimate | truth)
    double d_true_given_est = 0.0;  // d(truth | estimate)
    std::vector<int> estimate;
    bool failed = false;
    double wall_ms = 0.0;  // timing only; excluded from determinism contracts
};

struct RunReport {
    ScenarioSpec spec;
    DetectorConfig config;
    int reps = 0;
    std::uint64_t seed = 0;
    std::vector<ReplicateResult> replicates;
    double mean_abs_k_error = 0.0;
    double median_d_est_given_true = 0.0;
    double median_d_true_given_est = 0.0;
    double total_wall_ms = 0.0;
};

// reps independent generate -> detect -> score cycles, each on its own
// derived seed, run in parallel and reduced in replicate order. A detector
// failure inside one replicate is recorded as an empty estimate, not raised.
RunReport run_monte_carlo(const ScenarioSpec& spec, const DetectorConfig& config, int reps,
                          std::uint64_t seed);

}  // namespace npcd
