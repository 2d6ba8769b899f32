#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <omp.h>

#include <limits>

#include "npcd/monte_carlo.hpp"
#include "npcd/report.hpp"

using npcd::DetectorConfig;
using npcd::Method;
using npcd::NPolicy;
using npcd::Rng;
using npcd::RunReport;
using npcd::ScenarioId;
using npcd::ScenarioSpec;

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

TEST_CASE("absolute count error") {
    CHECK(npcd::abs_k_error(5, 3) == 2);
    CHECK(npcd::abs_k_error(3, 5) == 2);
    CHECK(npcd::abs_k_error(0, 0) == 0);
}

TEST_CASE("one-sided distances") {
    CHECK(npcd::hausdorff_one_sided({90, 200}, {100}) == 10.0);
    CHECK(npcd::hausdorff_one_sided({100}, {90, 200}) == 100.0);

    std::vector<int> everything;
    for (int t = 1; t <= 50; ++t) {
        everything.push_back(t);
    }
    CHECK(npcd::hausdorff_one_sided(everything, {7, 31}) == 0.0);

    CHECK(npcd::hausdorff_one_sided({}, {10}) == kInf);
    CHECK(npcd::hausdorff_one_sided({10}, {}) == -kInf);
    CHECK(npcd::hausdorff_one_sided({}, {}) == -kInf);
}

TEST_CASE("distance properties") {
    Rng rng(14);
    for (int it = 0; it < 50; ++it) {
        const int T = 100;
        std::vector<int> truth;
        std::vector<int> extra;
        for (int t = 2; t < T; ++t) {
            if (rng.uniform() < 0.08) {
                truth.push_back(t);
            }
            if (rng.uniform() < 0.05) {
                extra.push_back(t);
            }
        }
        if (truth.empty()) {
            continue;
        }
        // superset of the reference points has zero distance to them
        std::vector<int> super = truth;
        super.insert(super.end(), extra.begin(), extra.end());
        std::sort(super.begin(), super.end());
        CHECK(npcd::hausdorff_one_sided(super, truth) == 0.0);
        CHECK(npcd::hausdorff_one_sided(super, truth) <= T);
        CHECK(npcd::hausdorff_one_sided(truth, super) <= T);
    }
}

TEST_CASE("median with infinities") {
    CHECK(npcd::median_extended({3.0}) == 3.0);
    CHECK(npcd::median_extended({1.0, 2.0, 6.0}) == 2.0);
    CHECK(npcd::median_extended({1.0, 2.0, 3.0, 10.0}) == 2.5);
    CHECK(npcd::median_extended({1.0, kInf, kInf}) == kInf);
    CHECK(npcd::median_extended({1.0, 2.0, kInf, kInf}) == kInf);  // half at +inf
    CHECK(npcd::median_extended({1.0, 2.0, 3.0, kInf}) == 2.5);
    CHECK(npcd::median_extended({-kInf, -kInf, 5.0, 7.0}) == -kInf);
    CHECK(npcd::median_extended({-kInf, 2.0, 4.0}) == 2.0);
    CHECK_THROWS_AS(npcd::median_extended({}), std::invalid_argument);
}

TEST_CASE("single-replicate aggregates echo the replicate") {
    const auto spec = ScenarioSpec::make(ScenarioId::GaussianMean, 120);
    DetectorConfig config;
    config.method = Method::Nbs;
    config.tau = 2.0;
    const RunReport report = npcd::run_monte_carlo(spec, config, 1, 99);
    REQUIRE(report.replicates.size() == 1);
    const auto& r = report.replicates[0];
    CHECK(report.mean_abs_k_error == static_cast<double>(npcd::abs_k_error(r.k_true, r.k_est)));
    CHECK(report.median_d_est_given_true == r.d_est_given_true);
    CHECK(report.median_d_true_given_est == r.d_true_given_est);
}

TEST_CASE("fixed seeds reproduce the full report across thread counts") {
    const auto spec =
        ScenarioSpec::make(ScenarioId::VarianceShift, 150, NPolicy{NPolicy::Kind::Poisson, 2});
    DetectorConfig config;
    config.method = Method::NwbsAuto;
    config.num_intervals = 30;

    const int saved = omp_get_max_threads();
    omp_set_num_threads(1);
    const RunReport a = npcd::run_monte_carlo(spec, config, 6, 2024);
    omp_set_num_threads(4);
    const RunReport b = npcd::run_monte_carlo(spec, config, 6, 2024);
    omp_set_num_threads(saved);

    nlohmann::json ja = npcd::bench_report_json(a);
    nlohmann::json jb = npcd::bench_report_json(b);
    npcd::strip_timing(ja);
    npcd::strip_timing(jb);
    CHECK(ja.dump() == jb.dump());
}

TEST_CASE("detector failures score as empty estimates") {
    // horizon 3 is too short to split into halves, so every replicate throws
    const auto spec = ScenarioSpec::make(ScenarioId::ShapeShift, 3);
    DetectorConfig config;
    config.method = Method::NwbsAuto;
    const RunReport report = npcd::run_monte_carlo(spec, config, 3, 7);
    for (const auto& r : report.replicates) {
        CHECK(r.failed);
        CHECK(r.k_est == 0);
        CHECK(r.d_est_given_true == kInf);
    }
}
