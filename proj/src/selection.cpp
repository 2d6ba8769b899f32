#include "npcd/selection.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace npcd {

namespace {

void validate_config(const PenaltyConfig& config) {
    if (config.tau_grid.empty()) {
        throw std::invalid_argument("tau grid must not be empty");
    }
    double prev = 0.0;
    for (double tau : config.tau_grid) {
        if (!(tau > prev)) {
            throw std::invalid_argument("tau grid must be strictly increasing and positive");
        }
        prev = tau;
    }
    if (!(config.lambda > 0.0)) {
        throw std::invalid_argument("lambda must be positive");
    }
}

// residual sum of squares of the <=z indicators over times [a, b]
double indicator_sse(const Dataset& data, int a, int b, double z) {
    std::int64_t le = 0;
    for (int t = a; t <= b; ++t) {
        for (double y : data.at(t)) {
            le += (y <= z) ? 1 : 0;
        }
    }
    const double mean = static_cast<double>(le) / static_cast<double>(data.count(a, b));
    double sse = 0.0;
    for (int t = a; t <= b; ++t) {
        for (double y : data.at(t)) {
            const double r = ((y <= z) ? 1.0 : 0.0) - mean;
            sse += r * r;
        }
    }
    return sse;
}

// neighbours of eta in `times` extended by the sentinels 0 and T
std::pair<int, int> bracket(const std::vector<int>& times, int eta, int T) {
    int left = 0;
    int right = T;
    for (int t : times) {
        if (t < eta) {
            left = std::max(left, t);
        } else if (t > eta) {
            right = std::min(right, t);
        }
    }
    return {left, right};
}

std::vector<int> set_difference_times(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

}  // namespace

PenaltyConfig default_penalty_config(std::int64_t n_total) {
    if (n_total < 2) {
        throw std::invalid_argument("default_penalty_config: need at least two observations");
    }
    PenaltyConfig config;
    const double log_n = std::log(static_cast<double>(n_total));
    config.lambda = 2.0 * log_n / 3.0;
    const double lo = 0.1 * std::sqrt(log_n);
    const double hi = std::sqrt(static_cast<double>(n_total));
    const int points = 20;
    config.tau_grid.reserve(points);
    for (int i = 0; i < points; ++i) {
        const double frac = static_cast<double>(i) / (points - 1);
        config.tau_grid.push_back(lo * std::pow(hi / lo, frac));
    }
    return config;
}

SplitPair split_even_odd(const Dataset& data, SplitMode mode) {
    const int T = data.horizon();
    if (mode == SplitMode::Auto) {
        bool all_multi = true;
        for (const auto& row : data.rows()) {
            if (row.size() < 2) {
                all_multi = false;
                break;
            }
        }
        mode = all_multi ? SplitMode::WithinTime : SplitMode::TimeParity;
    }

    if (mode == SplitMode::TimeParity) {
        if (T < 4) {
            throw std::invalid_argument("time-parity split needs T >= 4");
        }
        const int half = T / 2;
        std::vector<std::vector<double>> w;
        std::vector<std::vector<double>> y;
        w.reserve(static_cast<std::size_t>(half));
        y.reserve(static_cast<std::size_t>(half));
        for (int k = 1; k <= half; ++k) {
            w.push_back(data.rows()[static_cast<std::size_t>(2 * k - 2)]);  // original t = 2k-1
            y.push_back(data.rows()[static_cast<std::size_t>(2 * k - 1)]);  // original t = 2k
        }
        return SplitPair{Dataset(std::move(w)), Dataset(std::move(y)), SplitMode::TimeParity, T};
    }

    // within-time: alternate each row's observations between the halves
    std::vector<std::vector<double>> w(static_cast<std::size_t>(T));
    std::vector<std::vector<double>> y(static_cast<std::size_t>(T));
    for (int t = 0; t < T; ++t) {
        const auto& row = data.rows()[static_cast<std::size_t>(t)];
        if (row.size() < 2) {
            throw std::invalid_argument("within-time split needs n_t >= 2 at every t (violated at t=" +
                                        std::to_string(t + 1) + ")");
        }
        for (std::size_t i = 0; i < row.size(); ++i) {
            ((i % 2 == 0) ? w : y)[static_cast<std::size_t>(t)].push_back(row[i]);
        }
    }
    return SplitPair{Dataset(std::move(w)), Dataset(std::move(y)), SplitMode::WithinTime, T};
}

SseGainResult sse_gain_test(const Dataset& dataY, int eta, int left, int right, double lambda) {
    const int T = dataY.horizon();
    if (left < 0 || right > T || !(left < eta && eta < right)) {
        throw std::domain_error("sse_gain_test: need 0 <= left < eta < right <= T");
    }
    // the segment between bracketing points covers times (left, right]
    const CusumResult scan = max_cusum_at(dataY, left + 1, right, eta);

    SseGainResult res;
    res.z_hat = scan.argmax_z;
    res.d_value = scan.value;
    res.pooled_sse = indicator_sse(dataY, left + 1, right, res.z_hat);
    res.split_sse = indicator_sse(dataY, left + 1, eta, res.z_hat) +
                    indicator_sse(dataY, eta + 1, right, res.z_hat);
    res.accepted = res.pooled_sse > res.split_sse + lambda;
    return res;
}

Segmentation update_merge(const Dataset& dataY, const Segmentation& b1, const Segmentation& b2,
                          double lambda) {
    const std::vector<int> t1 = b1.times();
    const std::vector<int> t2 = b2.times();
    if (t1 == t2) {
        throw std::invalid_argument("update_merge: the candidate sets must differ");
    }
    const int T = dataY.horizon();

    Segmentation out;
    for (const auto& p : b1.points) {  // intersection kept untested
        if (std::binary_search(t2.begin(), t2.end(), p.time)) {
            out.points.push_back(p);
        }
    }

    std::vector<int> sym_diff = set_difference_times(t1, t2);
    const std::vector<int> only2 = set_difference_times(t2, t1);
    sym_diff.insert(sym_diff.end(), only2.begin(), only2.end());
    std::sort(sym_diff.begin(), sym_diff.end());

    for (int eta : sym_diff) {
        const bool from_b2 = std::binary_search(t2.begin(), t2.end(), eta);
        const std::vector<int>& other = from_b2 ? t1 : t2;
        const auto [left, right] = bracket(other, eta, T);
        if (eta <= left || eta >= right) {
            continue;  // not strictly bracketable; nothing to test it against
        }
        const SseGainResult res = sse_gain_test(dataY, eta, left, right, lambda);
        if (res.accepted) {
            out.points.push_back(ChangePoint{eta, res.d_value, left, right});
        }
    }
    std::sort(out.points.begin(), out.points.end(),
              [](const ChangePoint& a, const ChangePoint& b) { return a.time < b.time; });
    return out;
}

Segmentation nwbs_auto(const Dataset& dataY, const Dataset& dataW,
                       const std::vector<Interval>& intervals, const PenaltyConfig& config) {
    validate_config(config);
    if (dataY.horizon() != dataW.horizon()) {
        throw std::invalid_argument("nwbs_auto: halves must share the same horizon");
    }
    const int T = dataW.horizon();
    if (T < 2) {
        throw std::invalid_argument("nwbs_auto: horizon too short");
    }
    const int M = static_cast<int>(config.tau_grid.size());

    std::vector<Segmentation> runs(static_cast<std::size_t>(M));
    ScanCache cache;
#pragma omp parallel for schedule(dynamic, 1)
    for (int m = 0; m < M; ++m) {
        runs[static_cast<std::size_t>(m)] =
            nwbs_cached(dataW, 1, T, intervals, config.tau_grid[static_cast<std::size_t>(m)], cache);
    }

    int current = 0;  // start from the richest set, the smallest threshold
    for (int m = 0; m + 1 < M; ++m) {
        const std::vector<int> cur_times = runs[static_cast<std::size_t>(current)].times();
        const std::vector<int> next_times = runs[static_cast<std::size_t>(m + 1)].times();
        if (next_times == cur_times) {
            current = m + 1;
            continue;
        }
        const std::vector<int> dropped = set_difference_times(cur_times, next_times);
        if (dropped.empty()) {
            current = m + 1;
            continue;
        }
        const int eta = dropped.front();
        const auto [left, right] = bracket(next_times, eta, T);

        bool discard;
        if (config.strict_multi && dropped.size() > 1) {
            // interval-based bound: the candidate is discardable when no
            // intersected sampler interval shows a squared statistic >= lambda
            double worst = -std::numeric_limits<double>::infinity();
            for (const Interval& iv : intervals) {
                const int a = std::max(left, iv.alpha);
                const int b = std::min(right, iv.beta);
                if (a < eta && eta < b) {
                    const CusumResult r = max_cusum_at(dataY, a + 1, b, eta);
                    worst = std::max(worst, r.value * r.value);
                }
            }
            discard = config.lambda > worst;
        } else {
            const SseGainResult res = sse_gain_test(dataY, eta, left, right, config.lambda);
            discard = res.split_sse + config.lambda > res.pooled_sse;
        }

        if (discard) {
            current = m + 1;
        } else {
            break;
        }
    }
    return runs[static_cast<std::size_t>(current)];
}

}  // namespace npcd
