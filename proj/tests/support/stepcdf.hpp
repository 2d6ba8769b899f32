#pragma once

// Piecewise-constant CDFs for the population-statistic tests.

#include <algorithm>
#include <vector>

#include "npcd/population.hpp"
#include "npcd/rng.hpp"

namespace npcd::testing {

// right-continuous step CDF: F(z) = level[i] for knot[i] <= z < knot[i+1],
// 0 below the first knot, 1 at and above the last
struct StepCdf {
    std::vector<double> knots;   // strictly increasing
    std::vector<double> levels;  // nondecreasing, ends at 1

    double operator()(double z) const {
        double f = 0.0;
        for (std::size_t i = 0; i < knots.size(); ++i) {
            if (z >= knots[i]) {
                f = levels[i];
            } else {
                break;
            }
        }
        return f;
    }

    bool operator==(const StepCdf&) const = default;

    // mass distributed over a subset of the pooled knot grid
    static StepCdf random(Rng& rng, const std::vector<double>& grid) {
        StepCdf cdf;
        cdf.knots = grid;
        std::vector<double> mass(grid.size());
        double total = 0.0;
        for (double& m : mass) {
            m = rng.uniform();
            total += m;
        }
        double acc = 0.0;
        for (std::size_t i = 0; i < grid.size(); ++i) {
            acc += mass[i] / total;
            cdf.levels.push_back(std::min(acc, 1.0));
        }
        cdf.levels.back() = 1.0;
        return cdf;
    }
};

// piecewise-constant CDF sequence with the given change points; consecutive
// segments get distinct CDFs
struct PopulationModel {
    std::vector<WeightedCdf> cdfs;
    std::vector<int> truth;
    std::vector<double> grid;
};

inline PopulationModel random_population(Rng& rng, int T, int K) {
    PopulationModel model;
    model.grid = {-2.0, -1.0, 0.0, 1.0, 2.0};

    // change points strictly inside the scan's candidate range {2..T-1}: a
    // change at t=1 has no corresponding candidate split and the argmax
    // property does not cover it
    std::vector<int> points;
    while (static_cast<int>(points.size()) < K) {
        const int eta = static_cast<int>(rng.uniform_int(2, T - 1));
        if (std::find(points.begin(), points.end(), eta) == points.end()) {
            points.push_back(eta);
        }
    }
    std::sort(points.begin(), points.end());
    model.truth = points;

    std::vector<StepCdf> segment_cdfs;
    for (int seg = 0; seg <= K; ++seg) {
        StepCdf cdf = StepCdf::random(rng, model.grid);
        while (seg > 0 && cdf == segment_cdfs.back()) {
            cdf = StepCdf::random(rng, model.grid);
        }
        segment_cdfs.push_back(cdf);
    }

    for (int t = 1; t <= T; ++t) {
        int seg = 0;
        for (int eta : points) {
            if (t > eta) {
                ++seg;
            }
        }
        model.cdfs.push_back(WeightedCdf{rng.uniform_int(1, 3), segment_cdfs[static_cast<std::size_t>(seg)]});
    }
    return model;
}

}  // namespace npcd::testing
