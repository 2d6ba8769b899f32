#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "npcd/dataset.hpp"
#include "npcd/rng.hpp"

namespace npcd {

// Generative models for the benchmark harness. The numeric ids are the
// external names used by the CLI.
//   2: unit mean shifts with scaled t(3) noise, K = floor(sqrt(T / (2 log T)))
//   3: unit mean shifts with standard normal noise, K = 5
//   4: variance-only shifts, scale alternating 0.2 / 1, K = 5
//   5: shape-only shifts, standard normal vs variance-matched t(2.5), K = 2
//   custom: stand-in pair of equal-mean densities (normal vs bimodal mixture)
enum class ScenarioId { Custom = 0, HeavyTailMean = 2, GaussianMean = 3, VarianceShift = 4, ShapeShift = 5 };

ScenarioId scenario_from_string(const std::string& s);
std::string to_string(ScenarioId id);

// Observations per time point: a constant, or Poisson draws clamped to >= 1.
struct NPolicy {
    enum class Kind { Constant, Poisson };
    Kind kind = Kind::Constant;
    std::int64_t c = 1;
};

struct ScenarioSpec {
    ScenarioId id = ScenarioId::GaussianMean;
    int T = 0;
    int K = 0;  // derived from the scenario; overridable only for custom
    NPolicy n_policy;
    std::uint64_t seed = 0;

    // evenly spaced: eta_j = floor(j T / (K+1)), strictly inside (0, T)
    std::vector<int> change_points() const;

    static ScenarioSpec make(ScenarioId id, int T, NPolicy n_policy = {}, std::uint64_t seed = 0,
                             int custom_K = 0);
};

struct GeneratedSeries {
    Dataset data;
    std::vector<int> truth;
};

// Draws a series from the spec's law. Per time point the observation count
// is drawn first (Poisson policy only), then the observations, so the stream
// layout is reproducible from the seed alone.
GeneratedSeries generate(const ScenarioSpec& spec, Rng& rng);

}  // namespace npcd
