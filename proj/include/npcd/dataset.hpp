#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace npcd {

// Ragged univariate series: for each time t = 1..T a nonempty list of real
// observations. Prefix counts are cached so segment totals n_{s:e} are O(1).
class Dataset {
public:
    explicit Dataset(std::vector<std::vector<double>> samples);

    // T, the number of time points
    int horizon() const { return static_cast<int>(samples_.size()); }

    // n_{1:T}
    std::int64_t total() const { return prefix_.back(); }

    // n_{s:e} for 1 <= s <= e <= T
    std::int64_t count(int s, int e) const;

    std::int64_t count_at(int t) const { return count(t, t); }

    // observations at time t, in insertion order
    std::span<const double> at(int t) const;

    const std::vector<std::vector<double>>& rows() const { return samples_; }

    bool operator==(const Dataset& other) const { return samples_ == other.samples_; }

    // throws std::out_of_range unless 1 <= s <= e <= T
    void check_window(int s, int e) const;

private:
    std::vector<std::vector<double>> samples_;
    std::vector<std::int64_t> prefix_;  // prefix_[t] = n_{1:t}, prefix_[0] = 0
};

}  // namespace npcd
