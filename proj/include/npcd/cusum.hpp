#pragma once

#include <cmath>
#include <cstdint>
#include <optional>

#include "npcd/dataset.hpp"

namespace npcd {

// Maximised CUSUM Kolmogorov-Smirnov statistic for a window (s, e):
// value = sup_z |D^t_{s,e}(z)| attained at split argmax_t and evaluation
// point argmax_z. Ties resolve to the smallest t, then the smallest z.
struct CusumResult {
    double value = 0.0;
    int argmax_t = 0;
    double argmax_z = 0.0;
    int window_s = 0;
    int window_e = 0;
};

// Statistic value from integer counts, with a single division at the end.
// left_le / right_le count observations <= z on each side of the split;
// n_left / n_right are the side totals. Both the production scan and the
// brute-force test oracle must convert through this expression so that
// their results compare bit-exactly.
inline double cusum_value_from_absdiff(std::int64_t abs_diff, std::int64_t n_left,
                                       std::int64_t n_right) {
    const double denom = std::sqrt(static_cast<double>(n_left) * static_cast<double>(n_right) *
                                   static_cast<double>(n_left + n_right));
    return static_cast<double>(abs_diff) / denom;
}

inline double cusum_signed_from_counts(std::int64_t left_le, std::int64_t right_le,
                                       std::int64_t n_left, std::int64_t n_right) {
    const std::int64_t diff = left_le * n_right - right_le * n_left;
    const double denom = std::sqrt(static_cast<double>(n_left) * static_cast<double>(n_right) *
                                   static_cast<double>(n_left + n_right));
    return static_cast<double>(diff) / denom;
}

// F-hat_{s:e}(z): fraction of the observations at times s..e that are <= z.
double empirical_cdf(const Dataset& data, int s, int e, double z);

// Signed D^t_{s,e}(z) = sqrt(n_{s:t} n_{(t+1):e} / n_{s:e}) (F_{s:t}(z) - F_{(t+1):e}(z)),
// defined for s <= t < e.
double cusum_ks_at(const Dataset& data, int s, int e, int t, double z);

// sup_z |D^t_{s,e}(z)| for one fixed split t; z is searched over the window's
// observed values only, which is sufficient because D is constant between
// them. Smallest maximising z wins ties.
CusumResult max_cusum_at(const Dataset& data, int s, int e, int t);

// max over s < t < e of sup_z |D^t_{s,e}(z)|. Sorts the window once and
// sweeps per-split counters over it: O((e-s) n_{s:e}) after the
// O(n_{s:e} log n_{s:e}) sort. Windows with e - s < 2 have no candidate
// split and yield nullopt. OpenMP-parallel over splits; the reduction is a
// total order on (value, t), so results do not depend on scheduling.
std::optional<CusumResult> max_cusum(const Dataset& data, int s, int e);

// Serial reference implementation, kept for tests and the benchmark.
std::optional<CusumResult> max_cusum_serial(const Dataset& data, int s, int e);

}  // namespace npcd
