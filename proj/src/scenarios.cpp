#include "npcd/scenarios.hpp"

#include <cmath>
#include <stdexcept>

namespace npcd {

namespace {

// segment index j = 1..K+1 such that t falls in [eta_{j-1}+1, eta_j]
int segment_of(const std::vector<int>& etas, int t) {
    int j = 1;
    for (int eta : etas) {
        if (t > eta) {
            ++j;
        } else {
            break;
        }
    }
    return j;
}

double draw_observation(ScenarioId id, bool odd_segment, Rng& rng) {
    switch (id) {
        case ScenarioId::HeavyTailMean: {
            const double theta = odd_segment ? 1.0 : 0.0;
            return theta + rng.student_t(3.0) / std::sqrt(3.0);
        }
        case ScenarioId::GaussianMean: {
            const double theta = odd_segment ? 1.0 : 0.0;
            return theta + rng.normal();
        }
        case ScenarioId::VarianceShift: {
            const double theta = odd_segment ? 0.2 : 1.0;
            return theta * rng.normal();
        }
        case ScenarioId::ShapeShift: {
            if (odd_segment) {
                return rng.normal();
            }
            return rng.student_t(2.5) / std::sqrt(2.5 / (2.5 - 2.0));
        }
        case ScenarioId::Custom: {
            // stand-in pair: N(0,1) against an equal-mean bimodal mixture
            if (odd_segment) {
                return rng.normal();
            }
            const double sign = rng.uniform() < 0.5 ? -1.0 : 1.0;
            return sign * 1.0 + 0.5 * rng.normal();
        }
    }
    throw std::logic_error("unreachable scenario id");
}

}  // namespace

ScenarioId scenario_from_string(const std::string& s) {
    if (s == "2") return ScenarioId::HeavyTailMean;
    if (s == "3") return ScenarioId::GaussianMean;
    if (s == "4") return ScenarioId::VarianceShift;
    if (s == "5") return ScenarioId::ShapeShift;
    if (s == "custom") return ScenarioId::Custom;
    throw std::invalid_argument("unknown scenario '" + s + "' (expected 2, 3, 4, 5 or custom)");
}

std::string to_string(ScenarioId id) {
    switch (id) {
        case ScenarioId::HeavyTailMean: return "2";
        case ScenarioId::GaussianMean: return "3";
        case ScenarioId::VarianceShift: return "4";
        case ScenarioId::ShapeShift: return "5";
        case ScenarioId::Custom: return "custom";
    }
    throw std::logic_error("unreachable scenario id");
}

std::vector<int> ScenarioSpec::change_points() const {
    std::vector<int> etas;
    etas.reserve(static_cast<std::size_t>(K));
    for (int j = 1; j <= K; ++j) {
        etas.push_back(static_cast<int>(static_cast<std::int64_t>(j) * T / (K + 1)));
    }
    return etas;
}

ScenarioSpec ScenarioSpec::make(ScenarioId id, int T, NPolicy n_policy, std::uint64_t seed,
                                int custom_K) {
    if (T < 2) {
        throw std::invalid_argument("scenario horizon T must be >= 2");
    }
    if (n_policy.c < 1) {
        throw std::invalid_argument("observation-count parameter must be >= 1");
    }
    ScenarioSpec spec;
    spec.id = id;
    spec.T = T;
    spec.n_policy = n_policy;
    spec.seed = seed;
    switch (id) {
        case ScenarioId::HeavyTailMean:
            spec.K = static_cast<int>(
                std::floor(std::sqrt(static_cast<double>(T) / (2.0 * std::log(static_cast<double>(T))))));
            break;
        case ScenarioId::GaussianMean:
        case ScenarioId::VarianceShift:
            spec.K = 5;
            break;
        case ScenarioId::ShapeShift:
            spec.K = 2;
            break;
        case ScenarioId::Custom:
            spec.K = custom_K > 0 ? custom_K : 7;
            break;
    }
    if (custom_K > 0 && id != ScenarioId::Custom) {
        throw std::invalid_argument("K is fixed by scenarios 2-5; override it only for custom");
    }
    if (spec.K < 1) {
        throw std::invalid_argument("scenario would have no change points at T=" + std::to_string(T));
    }
    const std::vector<int> etas = spec.change_points();
    int prev = 0;
    for (int eta : etas) {
        if (eta <= prev || eta >= T) {
            throw std::invalid_argument("change points not strictly increasing inside (0, T); T too small for K=" +
                                        std::to_string(spec.K));
        }
        prev = eta;
    }
    return spec;
}

GeneratedSeries generate(const ScenarioSpec& spec, Rng& rng) {
    const std::vector<int> etas = spec.change_points();
    std::vector<std::vector<double>> rows;
    rows.reserve(static_cast<std::size_t>(spec.T));
    for (int t = 1; t <= spec.T; ++t) {
        std::int64_t n_t = spec.n_policy.c;
        if (spec.n_policy.kind == NPolicy::Kind::Poisson) {
            n_t = std::max<std::int64_t>(1, rng.poisson(static_cast<double>(spec.n_policy.c)));
        }
        const bool odd_segment = segment_of(etas, t) % 2 == 1;
        std::vector<double> row;
        row.reserve(static_cast<std::size_t>(n_t));
        for (std::int64_t i = 0; i < n_t; ++i) {
            row.push_back(draw_observation(spec.id, odd_segment, rng));
        }
        rows.push_back(std::move(row));
    }
    return GeneratedSeries{Dataset(std::move(rows)), etas};
}

}  // namespace npcd
