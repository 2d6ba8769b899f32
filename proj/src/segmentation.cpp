#include "npcd/segmentation.hpp"

#include <algorithm>
#include <stdexcept>

namespace npcd {

namespace {

void sort_points(Segmentation& seg) {
    std::sort(seg.points.begin(), seg.points.end(),
              [](const ChangePoint& a, const ChangePoint& b) { return a.time < b.time; });
    for (std::size_t i = 1; i < seg.points.size(); ++i) {
        if (seg.points[i].time == seg.points[i - 1].time) {
            throw std::logic_error("duplicate change point produced by recursion");
        }
    }
}

void nbs_rec(const Dataset& data, int s, int e, double tau, Segmentation& out) {
    if (e - s <= 2) {
        return;
    }
    const auto scan = max_cusum(data, s, e);
    if (!scan || scan->value <= tau) {
        return;
    }
    out.points.push_back(ChangePoint{scan->argmax_t, scan->value, s, e});
    nbs_rec(data, s, scan->argmax_t - 1, tau, out);
    nbs_rec(data, scan->argmax_t, e, tau, out);
}

void nwbs_rec(const Dataset& data, int s, int e, const std::vector<Interval>& intervals, double tau,
              ScanCache* cache, Segmentation& out) {
    if (e - s < 2) {
        return;
    }
    const int M = static_cast<int>(intervals.size());
    std::vector<std::optional<CusumResult>> scans(static_cast<std::size_t>(M));
#pragma omp parallel for schedule(dynamic)
    for (int m = 0; m < M; ++m) {
        const int sm = std::max(s, intervals[static_cast<std::size_t>(m)].alpha);
        const int em = std::min(e, intervals[static_cast<std::size_t>(m)].beta);
        if (em - sm >= 2) {
            scans[static_cast<std::size_t>(m)] =
                cache ? cache->get_or_compute(data, sm, em) : max_cusum(data, sm, em);
        }
    }
    // smallest m wins ties, independent of the parallel schedule above
    int best = -1;
    for (int m = 0; m < M; ++m) {
        const auto& r = scans[static_cast<std::size_t>(m)];
        if (r && (best < 0 || r->value > scans[static_cast<std::size_t>(best)]->value)) {
            best = m;
        }
    }
    if (best < 0) {
        return;
    }
    const CusumResult& winner = *scans[static_cast<std::size_t>(best)];
    if (winner.value > tau) {
        out.points.push_back(
            ChangePoint{winner.argmax_t, winner.value, winner.window_s, winner.window_e});
        nwbs_rec(data, s, winner.argmax_t, intervals, tau, cache, out);
        nwbs_rec(data, winner.argmax_t + 1, e, intervals, tau, cache, out);
    }
}

void check_entry(const Dataset& data, int s, int e, double tau) {
    data.check_window(s, e);
    if (s >= e) {
        throw std::invalid_argument("detection window needs s < e");
    }
    if (!(tau > 0.0)) {
        throw std::invalid_argument("threshold tau must be positive");
    }
}

}  // namespace

std::vector<Interval> sample_intervals(int T, int S, int max_len, Rng& rng) {
    if (T < 1) {
        throw std::invalid_argument("sample_intervals: T must be >= 1");
    }
    if (S < 1) {
        throw std::invalid_argument("sample_intervals: S must be >= 1");
    }
    if (max_len != 0 && (max_len < 2 || max_len > T)) {
        throw std::invalid_argument("sample_intervals: max_len must lie in [2, T]");
    }
    std::vector<Interval> out;
    out.reserve(static_cast<std::size_t>(S));
    while (static_cast<int>(out.size()) < S) {
        const int a = static_cast<int>(rng.uniform_int(1, T));
        const int b = static_cast<int>(rng.uniform_int(1, T));
        const Interval iv{std::min(a, b), std::max(a, b)};
        if (max_len != 0 && iv.beta - iv.alpha > max_len) {
            continue;
        }
        out.push_back(iv);
    }
    return out;
}

Segmentation Segmentation::from_times(const std::vector<int>& times) {
    Segmentation seg;
    seg.points.reserve(times.size());
    for (int t : times) {
        seg.points.push_back(ChangePoint{t, 0.0, 0, 0});
    }
    sort_points(seg);
    return seg;
}

std::vector<int> Segmentation::times() const {
    std::vector<int> out;
    out.reserve(points.size());
    for (const auto& p : points) {
        out.push_back(p.time);
    }
    return out;
}

Segmentation nbs(const Dataset& data, int s, int e, double tau) {
    check_entry(data, s, e, tau);
    Segmentation out;
    nbs_rec(data, s, e, tau, out);
    sort_points(out);
    return out;
}

Segmentation nwbs(const Dataset& data, int s, int e, const std::vector<Interval>& intervals,
                  double tau) {
    check_entry(data, s, e, tau);
    Segmentation out;
    nwbs_rec(data, s, e, intervals, tau, nullptr, out);
    sort_points(out);
    return out;
}

Segmentation nwbs_cached(const Dataset& data, int s, int e, const std::vector<Interval>& intervals,
                         double tau, ScanCache& cache) {
    check_entry(data, s, e, tau);
    Segmentation out;
    nwbs_rec(data, s, e, intervals, tau, &cache, out);
    sort_points(out);
    return out;
}

std::optional<CusumResult> ScanCache::get_or_compute(const Dataset& data, int s, int e) {
    const std::uint64_t key =
        (static_cast<std::uint64_t>(static_cast<std::uint32_t>(s)) << 32) |
        static_cast<std::uint64_t>(static_cast<std::uint32_t>(e));
    {
        std::lock_guard<std::mutex> lock(mutex_);
        const auto it = map_.find(key);
        if (it != map_.end()) {
            return it->second;
        }
    }
    auto result = max_cusum(data, s, e);
    {
        std::lock_guard<std::mutex> lock(mutex_);
        map_.emplace(key, result);
    }
    return result;
}

}  // namespace npcd
