#pragma once

#include <cstdint>
#include <vector>

namespace npcd {

std::int64_t abs_k_error(std::int64_t k_true, std::int64_t k_est);

// d(inner | outer) = max over outer points of the distance to the nearest
// inner point. Empty inner set gives +inf (nothing is close to anything);
// empty outer set gives -inf (the max runs over nothing).
double hausdorff_one_sided(const std::vector<int>& inner, const std::vector<int>& outer);

// Median under the ordering -inf < finite < +inf. With an even count the two
// middle values are averaged when both are finite; if at least half the
// values are +inf the median is +inf, and symmetrically for -inf.
double median_extended(std::vector<double> values);

}  // namespace npcd
