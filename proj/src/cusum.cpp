#include "npcd/cusum.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace npcd {

namespace {

void check_split(const Dataset& data, int s, int e, int t) {
    data.check_window(s, e);
    if (t < s || t >= e) {
        throw std::domain_error("split t=" + std::to_string(t) + " outside [" + std::to_string(s) +
                                ", " + std::to_string(e) + ")");
    }
}

// Window flattened as value-sorted parallel arrays; split sweeps scan it.
struct SortedWindow {
    std::vector<double> values;
    std::vector<int> times;
};

SortedWindow gather_sorted(const Dataset& data, int s, int e) {
    SortedWindow w;
    const std::size_t n = static_cast<std::size_t>(data.count(s, e));
    std::vector<std::pair<double, int>> obs;
    obs.reserve(n);
    for (int t = s; t <= e; ++t) {
        for (double y : data.at(t)) {
            obs.emplace_back(y, t);
        }
    }
    std::sort(obs.begin(), obs.end());
    w.values.reserve(n);
    w.times.reserve(n);
    for (const auto& [v, t] : obs) {
        w.values.push_back(v);
        w.times.push_back(t);
    }
    return w;
}

struct SweepBest {
    std::int64_t abs_diff = -1;
    double z = 0.0;
};

// One pass over the sorted window for a fixed split t. Equal values are
// absorbed as one group before evaluating, so ties across the split are
// counted the way a CDF at that point counts them. Tracks the exact integer
// |left_le * n_right - right_le * n_left|; the float value is formed once,
// by the caller.
SweepBest sweep_split(const SortedWindow& w, int t, std::int64_t n_left, std::int64_t n) {
    SweepBest best;
    const std::size_t total = w.values.size();
    std::int64_t left_le = 0;
    std::size_t i = 0;
    while (i < total) {
        const double v = w.values[i];
        do {
            left_le += (w.times[i] <= t) ? 1 : 0;
            ++i;
        } while (i < total && w.values[i] == v);
        // left_le * n - count_le * n_left == left_le * n_right - right_le * n_left
        const std::int64_t diff = left_le * n - static_cast<std::int64_t>(i) * n_left;
        const std::int64_t abs_diff = diff < 0 ? -diff : diff;
        if (abs_diff > best.abs_diff) {
            best.abs_diff = abs_diff;
            best.z = v;
        }
    }
    return best;
}

struct Candidate {
    double value = -1.0;
    int t = 0;
    double z = 0.0;
};

// total order: larger value wins, then smaller split index
bool better(const Candidate& a, const Candidate& b) {
    if (a.value != b.value) {
        return a.value > b.value;
    }
    return a.t < b.t;
}

Candidate scan_one(const SortedWindow& w, const Dataset& data, int s, int e, int t) {
    const std::int64_t n_left = data.count(s, t);
    const std::int64_t n_right = data.count(t + 1, e);
    const SweepBest b = sweep_split(w, t, n_left, n_left + n_right);
    return Candidate{cusum_value_from_absdiff(b.abs_diff, n_left, n_right), t, b.z};
}

}  // namespace

double empirical_cdf(const Dataset& data, int s, int e, double z) {
    const std::int64_t n = data.count(s, e);
    std::int64_t le = 0;
    for (int t = s; t <= e; ++t) {
        for (double y : data.at(t)) {
            le += (y <= z) ? 1 : 0;
        }
    }
    return static_cast<double>(le) / static_cast<double>(n);
}

double cusum_ks_at(const Dataset& data, int s, int e, int t, double z) {
    check_split(data, s, e, t);
    std::int64_t left_le = 0;
    std::int64_t right_le = 0;
    for (int u = s; u <= t; ++u) {
        for (double y : data.at(u)) {
            left_le += (y <= z) ? 1 : 0;
        }
    }
    for (int u = t + 1; u <= e; ++u) {
        for (double y : data.at(u)) {
            right_le += (y <= z) ? 1 : 0;
        }
    }
    return cusum_signed_from_counts(left_le, right_le, data.count(s, t), data.count(t + 1, e));
}

CusumResult max_cusum_at(const Dataset& data, int s, int e, int t) {
    check_split(data, s, e, t);
    const SortedWindow w = gather_sorted(data, s, e);
    const Candidate c = scan_one(w, data, s, e, t);
    return CusumResult{c.value, c.t, c.z, s, e};
}

std::optional<CusumResult> max_cusum(const Dataset& data, int s, int e) {
    data.check_window(s, e);
    if (e - s < 2) {
        return std::nullopt;
    }
    const SortedWindow w = gather_sorted(data, s, e);
    Candidate best;
#pragma omp parallel
    {
        Candidate local;
#pragma omp for nowait
        for (int t = s + 1; t <= e - 1; ++t) {
            const Candidate c = scan_one(w, data, s, e, t);
            if (local.value < 0.0 || better(c, local)) {
                local = c;
            }
        }
#pragma omp critical(npcd_max_cusum_reduce)
        {
            if (local.value >= 0.0 && (best.value < 0.0 || better(local, best))) {
                best = local;
            }
        }
    }
    return CusumResult{best.value, best.t, best.z, s, e};
}

std::optional<CusumResult> max_cusum_serial(const Dataset& data, int s, int e) {
    data.check_window(s, e);
    if (e - s < 2) {
        return std::nullopt;
    }
    const SortedWindow w = gather_sorted(data, s, e);
    Candidate best;
    for (int t = s + 1; t <= e - 1; ++t) {
        const Candidate c = scan_one(w, data, s, e, t);
        if (best.value < 0.0 || better(c, best)) {
            best = c;
        }
    }
    return CusumResult{best.value, best.t, best.z, s, e};
}

}  // namespace npcd
