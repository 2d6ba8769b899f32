#pragma once

#include "npcd/selection.hpp"

namespace npcd {

enum class Method { Nbs, Nwbs, NwbsAuto };

Method method_from_string(const std::string& s);
std::string to_string(Method m);

struct DetectorConfig {
    Method method = Method::NwbsAuto;
    double tau = 0.0;          // nbs / nwbs threshold
    int num_intervals = 120;   // S, for the randomised methods
    int max_interval_len = 0;  // 0 = uncapped
    PenaltyConfig penalty;     // nwbs-auto; empty grid means "derive defaults"
    SplitMode split = SplitMode::Auto;
};

// Runs the configured detector over the whole series and reports change
// points on the original time scale. nbs/nwbs run on the data directly;
// nwbs-auto splits it into detection and evaluation halves first and maps
// the result back. The rng drives interval sampling only.
Segmentation run_detector(const Dataset& data, const DetectorConfig& config, Rng& rng);

}  // namespace npcd
