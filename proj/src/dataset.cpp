#include "npcd/dataset.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace npcd {

Dataset::Dataset(std::vector<std::vector<double>> samples) : samples_(std::move(samples)) {
    if (samples_.empty()) {
        throw std::invalid_argument("dataset needs at least one time point");
    }
    prefix_.reserve(samples_.size() + 1);
    prefix_.push_back(0);
    for (std::size_t t = 0; t < samples_.size(); ++t) {
        const auto& row = samples_[t];
        if (row.empty()) {
            throw std::invalid_argument("empty time point at t=" + std::to_string(t + 1));
        }
        for (double y : row) {
            if (!std::isfinite(y)) {
                throw std::invalid_argument("non-finite observation at t=" + std::to_string(t + 1));
            }
        }
        prefix_.push_back(prefix_.back() + static_cast<std::int64_t>(row.size()));
    }
}

void Dataset::check_window(int s, int e) const {
    if (s < 1 || e > horizon() || s > e) {
        throw std::out_of_range("window (" + std::to_string(s) + ", " + std::to_string(e) +
                                ") outside 1.." + std::to_string(horizon()));
    }
}

std::int64_t Dataset::count(int s, int e) const {
    check_window(s, e);
    return prefix_[static_cast<std::size_t>(e)] - prefix_[static_cast<std::size_t>(s) - 1];
}

std::span<const double> Dataset::at(int t) const {
    check_window(t, t);
    return samples_[static_cast<std::size_t>(t) - 1];
}

}  // namespace npcd
