#include "npcd/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace npcd {

std::int64_t abs_k_error(std::int64_t k_true, std::int64_t k_est) {
    return k_true >= k_est ? k_true - k_est : k_est - k_true;
}

double hausdorff_one_sided(const std::vector<int>& inner, const std::vector<int>& outer) {
    if (outer.empty()) {
        return -std::numeric_limits<double>::infinity();
    }
    if (inner.empty()) {
        return std::numeric_limits<double>::infinity();
    }
    std::int64_t worst = 0;
    for (int b : outer) {
        std::int64_t nearest = std::numeric_limits<std::int64_t>::max();
        for (int a : inner) {
            nearest = std::min<std::int64_t>(nearest, std::llabs(static_cast<std::int64_t>(a) - b));
        }
        worst = std::max(worst, nearest);
    }
    return static_cast<double>(worst);
}

double median_extended(std::vector<double> values) {
    if (values.empty()) {
        throw std::invalid_argument("median of an empty list");
    }
    std::sort(values.begin(), values.end());  // IEEE order puts -inf first, +inf last
    const std::size_t n = values.size();
    if (n % 2 == 1) {
        return values[n / 2];
    }
    const double lo = values[n / 2 - 1];
    const double hi = values[n / 2];
    if (std::isinf(hi) && hi > 0) {
        return hi;  // at least half the values are +inf
    }
    if (std::isinf(lo) && lo < 0) {
        return lo;
    }
    return 0.5 * (lo + hi);
}

}  // namespace npcd
