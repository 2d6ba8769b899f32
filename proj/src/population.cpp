#include "npcd/population.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace npcd {

namespace {

void check_indices(const std::vector<WeightedCdf>& cdfs, int s, int e) {
    const int T = static_cast<int>(cdfs.size());
    if (T < 1) {
        throw std::invalid_argument("population model needs at least one time point");
    }
    if (s < 1 || e > T || s > e) {
        throw std::out_of_range("window (" + std::to_string(s) + ", " + std::to_string(e) +
                                ") outside 1.." + std::to_string(T));
    }
    for (const auto& wc : cdfs) {
        if (wc.weight < 1 || !wc.cdf) {
            throw std::invalid_argument("each time point needs weight >= 1 and an evaluable CDF");
        }
    }
}

std::int64_t weight_sum(const std::vector<WeightedCdf>& cdfs, int s, int e) {
    std::int64_t n = 0;
    for (int t = s; t <= e; ++t) {
        n += cdfs[static_cast<std::size_t>(t) - 1].weight;
    }
    return n;
}

double mixture_cdf(const std::vector<WeightedCdf>& cdfs, int s, int e, double z) {
    double acc = 0.0;
    for (int t = s; t <= e; ++t) {
        const auto& wc = cdfs[static_cast<std::size_t>(t) - 1];
        acc += static_cast<double>(wc.weight) * wc.cdf(z);
    }
    return acc / static_cast<double>(weight_sum(cdfs, s, e));
}

}  // namespace

double population_cusum(const std::vector<WeightedCdf>& cdfs, int s, int e, int t, double z) {
    check_indices(cdfs, s, e);
    if (t < s || t >= e) {
        throw std::domain_error("split t=" + std::to_string(t) + " outside [" + std::to_string(s) +
                                ", " + std::to_string(e) + ")");
    }
    const double n_left = static_cast<double>(weight_sum(cdfs, s, t));
    const double n_right = static_cast<double>(weight_sum(cdfs, t + 1, e));
    const double w = std::sqrt(n_left * n_right / (n_left + n_right));
    return w * (mixture_cdf(cdfs, s, t, z) - mixture_cdf(cdfs, t + 1, e, z));
}

std::optional<CusumResult> population_max(const std::vector<WeightedCdf>& cdfs, int s, int e,
                                          std::vector<double> grid) {
    check_indices(cdfs, s, e);
    if (grid.empty()) {
        throw std::invalid_argument("population_max: empty evaluation grid");
    }
    if (e - s < 2) {
        return std::nullopt;
    }
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

    CusumResult best{-1.0, 0, 0.0, s, e};
    for (int t = s + 1; t <= e - 1; ++t) {
        for (double z : grid) {
            const double v = std::abs(population_cusum(cdfs, s, e, t, z));
            if (v > best.value) {
                best = CusumResult{v, t, z, s, e};
            }
        }
    }
    return best;
}

}  // namespace npcd
