#pragma once

#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

#include "npcd/cusum.hpp"
#include "npcd/rng.hpp"

namespace npcd {

// Candidate search window [alpha, beta], both endpoints inclusive times.
struct Interval {
    int alpha = 0;
    int beta = 0;
};

// Draw S intervals with endpoints independent and uniform on {1..T}, stored
// ordered. With max_len > 0, draws longer than max_len are rejected and
// redrawn. Deterministic under the rng's seed.
std::vector<Interval> sample_intervals(int T, int S, int max_len, Rng& rng);

// A detected change point: the last time index of the left segment, with the
// statistic value and the window that produced it.
struct ChangePoint {
    int time = 0;
    double value = 0.0;
    int window_s = 0;
    int window_e = 0;
};

struct Segmentation {
    std::vector<ChangePoint> points;  // sorted by time, unique

    static Segmentation from_times(const std::vector<int>& times);

    std::vector<int> times() const;
    std::size_t size() const { return points.size(); }
    bool empty() const { return points.empty(); }
};

// Greedy recursion: split at the maximising CUSUM while it exceeds tau,
// recursing on (s, b-1) and (b, e). Windows with e - s <= 2 stop silently.
Segmentation nbs(const Dataset& data, int s, int e, double tau);

// Randomised variant: each step intersects every interval with the current
// window, scans the intersections that still hold a candidate split, takes
// the best result over all of them (smallest interval index on ties), and
// recurses on (s, b) and (b+1, e) while the best value exceeds tau.
Segmentation nwbs(const Dataset& data, int s, int e, const std::vector<Interval>& intervals,
                  double tau);

// Memoises per-window scans. NWBS runs at different thresholds over the same
// interval set revisit the same windows, so the grid walk in nwbs_auto
// shares one cache across its runs. Safe for concurrent use; entries are
// deterministic functions of the window, so racing duplicate computations is
// harmless.
class ScanCache {
public:
    std::optional<CusumResult> get_or_compute(const Dataset& data, int s, int e);

private:
    std::unordered_map<std::uint64_t, std::optional<CusumResult>> map_;
    std::mutex mutex_;
};

Segmentation nwbs_cached(const Dataset& data, int s, int e, const std::vector<Interval>& intervals,
                         double tau, ScanCache& cache);

}  // namespace npcd
