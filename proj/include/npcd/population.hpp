#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "npcd/cusum.hpp"

namespace npcd {

// One time point of a population model: n_t observations following CDF F_t.
struct WeightedCdf {
    std::int64_t weight = 1;
    std::function<double(double)> cdf;
};

// Population counterpart of D^t_{s,e}(z), built from the weight-mixed CDFs
// F_{s:e}(z) = sum_t n_t F_t(z) / n_{s:e}.
double population_cusum(const std::vector<WeightedCdf>& cdfs, int s, int e, int t, double z);

// sup over the supplied evaluation grid and s < t < e, same tie-breaking as
// the sample version. The caller owns the grid; for piecewise-constant CDFs
// it must contain every knot for the supremum to be exact. Windows with
// e - s < 2 yield nullopt; an empty grid is an error.
std::optional<CusumResult> population_max(const std::vector<WeightedCdf>& cdfs, int s, int e,
                                          std::vector<double> grid);

}  // namespace npcd
