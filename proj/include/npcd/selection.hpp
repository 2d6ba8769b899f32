#pragma once

#include <vector>

#include "npcd/segmentation.hpp"

namespace npcd {

// Threshold-selection knobs: the SSE-gain penalty and the candidate
// threshold grid, strictly increasing and positive.
struct PenaltyConfig {
    double lambda = 0.0;
    std::vector<double> tau_grid;
    // When one grid step drops several points at once, the single-candidate
    // test is not conclusive; this switches to the interval-based squared
    // statistic bound instead.
    bool strict_multi = false;
};

// lambda = 2 log(n_total) / 3 and a 20-point geometric grid spanning
// 0.1 sqrt(log n_total) .. sqrt(n_total).
PenaltyConfig default_penalty_config(std::int64_t n_total);

enum class SplitMode { Auto, TimeParity, WithinTime };

// Detection half W and evaluation half Y with a map back to original times.
// TimeParity keeps odd times in W and even times in Y, both re-indexed
// 1..floor(T/2) (an odd trailing time is dropped so every detection index is
// valid on the evaluation half). WithinTime alternates each time point's
// observations between the halves, keeping T unchanged.
struct SplitPair {
    Dataset detect;
    Dataset evaluate;
    SplitMode mode = SplitMode::TimeParity;
    int original_horizon = 0;

    int to_original(int t) const { return mode == SplitMode::TimeParity ? 2 * t - 1 : t; }
};

SplitPair split_even_odd(const Dataset& data, SplitMode mode = SplitMode::Auto);

struct SseGainResult {
    bool accepted = false;  // pooled > split + lambda: the candidate survives
    double pooled_sse = 0.0;
    double split_sse = 0.0;
    double d_value = 0.0;  // |D^eta(z_hat)| on the bracketing window
    double z_hat = 0.0;
};

// Tests a candidate split eta of the segment (left, right]: picks the
// evaluation point z_hat maximising |D| (smallest on ties), then compares
// the pooled sum of squared indicator residuals against the split sum plus
// lambda. The sums are accumulated literally, observation by observation;
// pooled - split equals the squared statistic up to rounding, which the
// tests assert as an identity.
SseGainResult sse_gain_test(const Dataset& dataY, int eta, int left, int right, double lambda);

// Merge of two candidate sets: the intersection is kept untested; each point
// of the symmetric difference is bracketed by its neighbours in the other
// set (with sentinels 0 and T) and kept iff the SSE gain at that bracket
// exceeds lambda.
Segmentation update_merge(const Dataset& dataY, const Segmentation& b1, const Segmentation& b2,
                          double lambda);

// Full tuning pipeline: NWBS on the detection half at every grid threshold
// (the outputs are nested along the grid), then a walk from the richest set
// upward drops the smallest vanishing candidate while the evaluation half
// fails to justify it, and stops at the first justified one. The result is
// always one of the per-threshold outputs, on the detection half's time
// scale. Both halves must share the same horizon.
Segmentation nwbs_auto(const Dataset& dataY, const Dataset& dataW,
                       const std::vector<Interval>& intervals, const PenaltyConfig& config);

}  // namespace npcd
