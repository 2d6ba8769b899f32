#include "npcd/detect.hpp"

#include <stdexcept>

namespace npcd {

Method method_from_string(const std::string& s) {
    if (s == "nbs") return Method::Nbs;
    if (s == "nwbs") return Method::Nwbs;
    if (s == "nwbs-auto") return Method::NwbsAuto;
    throw std::invalid_argument("unknown method '" + s + "' (expected nbs, nwbs or nwbs-auto)");
}

std::string to_string(Method m) {
    switch (m) {
        case Method::Nbs: return "nbs";
        case Method::Nwbs: return "nwbs";
        case Method::NwbsAuto: return "nwbs-auto";
    }
    throw std::logic_error("unreachable method");
}

Segmentation run_detector(const Dataset& data, const DetectorConfig& config, Rng& rng) {
    const int T = data.horizon();
    switch (config.method) {
        case Method::Nbs:
            if (!(config.tau > 0.0)) {
                throw std::invalid_argument("nbs needs a positive tau");
            }
            return nbs(data, 1, T, config.tau);

        case Method::Nwbs: {
            if (!(config.tau > 0.0)) {
                throw std::invalid_argument("nwbs needs a positive tau");
            }
            const auto intervals = sample_intervals(T, config.num_intervals, config.max_interval_len, rng);
            return nwbs(data, 1, T, intervals, config.tau);
        }

        case Method::NwbsAuto: {
            const SplitPair split = split_even_odd(data, config.split);
            const int half_T = split.detect.horizon();
            const auto intervals =
                sample_intervals(half_T, config.num_intervals,
                                 std::min(config.max_interval_len, half_T), rng);
            PenaltyConfig penalty = config.penalty;
            if (penalty.tau_grid.empty()) {
                const double lambda_override = penalty.lambda;
                penalty = default_penalty_config(split.detect.total() + split.evaluate.total());
                if (lambda_override > 0.0) {
                    penalty.lambda = lambda_override;
                }
                penalty.strict_multi = config.penalty.strict_multi;
            }
            Segmentation half = nwbs_auto(split.evaluate, split.detect, intervals, penalty);
            for (auto& p : half.points) {
                p.time = split.to_original(p.time);
                p.window_s = split.to_original(p.window_s);
                p.window_e = split.to_original(p.window_e);
            }
            return half;
        }
    }
    throw std::logic_error("unreachable method");
}

}  // namespace npcd
