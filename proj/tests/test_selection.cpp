#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "npcd/selection.hpp"
#include "support/oracle.hpp"

using npcd::Dataset;
using npcd::PenaltyConfig;
using npcd::Rng;
using npcd::Segmentation;
using npcd::SplitMode;
using npcd::SseGainResult;

namespace {

Dataset step_series(int left, int right, double lo = 0.0, double hi = 1.0) {
    std::vector<std::vector<double>> rows;
    for (int i = 0; i < left; ++i) {
        rows.push_back({lo});
    }
    for (int i = 0; i < right; ++i) {
        rows.push_back({hi});
    }
    return Dataset(std::move(rows));
}

Dataset constant_series(int T, double v = 0.0, int n_t = 1) {
    std::vector<std::vector<double>> rows(static_cast<std::size_t>(T),
                                          std::vector<double>(static_cast<std::size_t>(n_t), v));
    return Dataset(std::move(rows));
}

}  // namespace

TEST_CASE("sample split by time parity") {
    const Dataset data({{1}, {2}, {3}, {4}, {5}, {6}});
    const auto split = npcd::split_even_odd(data, SplitMode::TimeParity);
    CHECK(split.detect.horizon() == 3);
    CHECK(split.evaluate.horizon() == 3);
    CHECK(split.detect.at(1)[0] == 1.0);
    CHECK(split.detect.at(2)[0] == 3.0);
    CHECK(split.detect.at(3)[0] == 5.0);
    CHECK(split.evaluate.at(1)[0] == 2.0);
    CHECK(split.evaluate.at(3)[0] == 6.0);
    CHECK(split.to_original(3) == 5);

    // odd horizon: trailing odd time dropped so both halves line up
    const Dataset odd({{1}, {2}, {3}, {4}, {5}, {6}, {7}});
    const auto s2 = npcd::split_even_odd(odd, SplitMode::TimeParity);
    CHECK(s2.detect.horizon() == 3);
    CHECK(s2.evaluate.horizon() == 3);

    CHECK_THROWS_AS(npcd::split_even_odd(Dataset({{1}, {2}, {3}}), SplitMode::TimeParity),
                    std::invalid_argument);
}

TEST_CASE("sample split within time points") {
    const Dataset data({{1, 2, 3, 4}, {5, 6, 7, 8}});
    const auto split = npcd::split_even_odd(data, SplitMode::WithinTime);
    CHECK(split.detect.horizon() == 2);
    CHECK(split.evaluate.horizon() == 2);
    CHECK(split.detect.count_at(1) == 2);
    CHECK(split.evaluate.count_at(1) == 2);
    CHECK(split.detect.at(1)[0] == 1.0);
    CHECK(split.detect.at(1)[1] == 3.0);
    CHECK(split.evaluate.at(1)[0] == 2.0);
    CHECK(split.to_original(2) == 2);

    CHECK_THROWS_AS(npcd::split_even_odd(Dataset({{1, 2}, {3}}), SplitMode::WithinTime),
                    std::invalid_argument);
}

TEST_CASE("auto split picks a mode from the data") {
    const auto a = npcd::split_even_odd(constant_series(8), SplitMode::Auto);
    CHECK(a.mode == SplitMode::TimeParity);
    const auto b = npcd::split_even_odd(constant_series(8, 0.0, 2), SplitMode::Auto);
    CHECK(b.mode == SplitMode::WithinTime);
}

TEST_CASE("gain test accepts a real split and rejects noise-free flats") {
    const Dataset data = step_series(20, 20);
    const SseGainResult hit = npcd::sse_gain_test(data, 20, 0, 40, 1.0);
    CHECK(hit.accepted);
    CHECK(hit.pooled_sse == doctest::Approx(10.0));  // 40 * 0.5 * 0.5
    CHECK(hit.split_sse == doctest::Approx(0.0));
    CHECK(hit.d_value == doctest::Approx(std::sqrt(10.0)));

    const Dataset flat = constant_series(30);
    const SseGainResult miss = npcd::sse_gain_test(flat, 10, 0, 30, 0.5);
    CHECK_FALSE(miss.accepted);
    CHECK(miss.d_value == doctest::Approx(0.0));

    // zero penalty keeps any candidate with a nonzero statistic
    const SseGainResult zerop = npcd::sse_gain_test(data, 13, 0, 40, 0.0);
    CHECK(zerop.accepted);

    CHECK_THROWS_AS(npcd::sse_gain_test(data, 0, 0, 40, 1.0), std::domain_error);
    CHECK_THROWS_AS(npcd::sse_gain_test(data, 40, 0, 40, 1.0), std::domain_error);
}

TEST_CASE("pooled minus split equals the squared statistic") {
    Rng rng(1234);
    for (int it = 0; it < 60; ++it) {
        const Dataset data = npcd::testing::random_dataset(rng, 12, 4);
        const int T = data.horizon();
        if (T < 3) {
            continue;
        }
        const int left = static_cast<int>(rng.uniform_int(0, T - 2));
        const int right = static_cast<int>(rng.uniform_int(left + 2, T));
        const int eta = static_cast<int>(rng.uniform_int(left + 1, right - 1));
        const SseGainResult res = npcd::sse_gain_test(data, eta, left, right, 1.0);
        CHECK(res.pooled_sse - res.split_sse ==
              doctest::Approx(res.d_value * res.d_value).epsilon(1e-9));
    }
}

TEST_CASE("merge drops a spurious extra point on flat data") {
    const Dataset flat = constant_series(60);
    const Segmentation b2 = Segmentation::from_times({30});
    const Segmentation b1 = Segmentation::from_times({30, 45});
    const Segmentation merged = npcd::update_merge(flat, b1, b2, 0.5);
    CHECK(merged.times() == std::vector<int>{30});
}

TEST_CASE("merge keeps a justified point missing from the other set") {
    const Dataset data = step_series(25, 25);
    const Segmentation b1 = Segmentation::from_times({25});
    const Segmentation b2 = Segmentation::from_times({});
    const Segmentation merged = npcd::update_merge(data, b1, b2, 1.0);
    CHECK(merged.times() == std::vector<int>{25});

    CHECK_THROWS_AS(npcd::update_merge(data, b1, b1, 1.0), std::invalid_argument);
}

TEST_CASE("merge output brackets the intersection and the union") {
    Rng rng(4321);
    for (int it = 0; it < 30; ++it) {
        const Dataset data = npcd::testing::random_dataset(rng, 12, 3);
        const int T = data.horizon();
        if (T < 6) {
            continue;
        }
        std::vector<int> t1;
        std::vector<int> t2;
        for (int t = 2; t <= T - 1; ++t) {
            const double u = rng.uniform();
            if (u < 0.25) {
                t1.push_back(t);
            } else if (u < 0.5) {
                t2.push_back(t);
            } else if (u < 0.65) {
                t1.push_back(t);
                t2.push_back(t);
            }
        }
        if (t1 == t2) {
            continue;
        }
        const auto merged =
            npcd::update_merge(data, Segmentation::from_times(t1), Segmentation::from_times(t2), 0.7)
                .times();
        std::vector<int> inter;
        std::set_intersection(t1.begin(), t1.end(), t2.begin(), t2.end(), std::back_inserter(inter));
        std::vector<int> uni;
        std::set_union(t1.begin(), t1.end(), t2.begin(), t2.end(), std::back_inserter(uni));
        CHECK(std::includes(merged.begin(), merged.end(), inter.begin(), inter.end()));
        CHECK(std::includes(uni.begin(), uni.end(), merged.begin(), merged.end()));
    }
}

TEST_CASE("default knobs derive from the observation count") {
    const PenaltyConfig config = npcd::default_penalty_config(1000);
    CHECK(config.lambda == doctest::Approx(2.0 * std::log(1000.0) / 3.0));
    CHECK(config.tau_grid.size() == 20);
    CHECK(config.tau_grid.front() == doctest::Approx(0.1 * std::sqrt(std::log(1000.0))));
    CHECK(config.tau_grid.back() == doctest::Approx(std::sqrt(1000.0)));
    for (std::size_t i = 1; i < config.tau_grid.size(); ++i) {
        CHECK(config.tau_grid[i] > config.tau_grid[i - 1]);
    }
}

TEST_CASE("auto selection returns nothing on flat data") {
    const Dataset w = constant_series(40);
    const Dataset y = constant_series(40);
    PenaltyConfig config;
    config.lambda = 1.0;
    config.tau_grid = {0.1, 0.5, 1.0, 2.0};
    Rng rng(5);
    const auto ivs = sample_intervals(40, 20, 0, rng);
    CHECK(npcd::nwbs_auto(y, w, ivs, config).empty());
}

TEST_CASE("auto selection with a single threshold is plain detection") {
    Rng rng(6);
    const Dataset data = npcd::testing::random_dataset(rng, 12, 3);
    const int T = data.horizon();
    const auto ivs = sample_intervals(T, 10, 0, rng);
    PenaltyConfig config;
    config.lambda = 1.0;
    config.tau_grid = {0.4};
    CHECK(npcd::nwbs_auto(data, data, ivs, config).times() ==
          npcd::nwbs(data, 1, T, ivs, 0.4).times());
}

TEST_CASE("auto selection recovers a clean split end to end") {
    // halves of an alternating step series: both carry the jump at index 25
    const Dataset w = step_series(25, 25);
    const Dataset y = step_series(25, 25);
    Rng rng(7);
    const auto ivs = sample_intervals(50, 40, 0, rng);
    const PenaltyConfig config = npcd::default_penalty_config(100);
    const Segmentation seg = npcd::nwbs_auto(y, w, ivs, config);
    REQUIRE(seg.size() == 1);
    CHECK(std::abs(seg.points[0].time - 25) <= 1);

    // the brute-force greedy replica on the same detection half agrees
    const auto brute = npcd::testing::brute_nbs(w, 1, 50, config.tau_grid.front());
    REQUIRE(!brute.empty());
    CHECK(std::abs(brute.front() - seg.points[0].time) <= 1);
}

TEST_CASE("auto selection output is one of the per-threshold runs") {
    Rng rng(8);
    for (int it = 0; it < 15; ++it) {
        const Dataset w = npcd::testing::random_dataset(rng, 12, 3);
        const Dataset y = npcd::testing::random_dataset(rng, 12, 3);
        if (w.horizon() != y.horizon()) {
            continue;
        }
        const int T = w.horizon();
        const auto ivs = sample_intervals(T, 8, 0, rng);
        PenaltyConfig config;
        config.lambda = 0.8;
        config.tau_grid = {0.2, 0.45, 0.9, 1.8};
        const auto out = npcd::nwbs_auto(y, w, ivs, config).times();
        bool matches_one = false;
        std::vector<std::vector<int>> runs;
        for (double tau : config.tau_grid) {
            runs.push_back(npcd::nwbs(w, 1, T, ivs, tau).times());
            matches_one = matches_one || runs.back() == out;
        }
        CHECK(matches_one);
        // grid runs are nested as the threshold grows
        for (std::size_t i = 1; i < runs.size(); ++i) {
            CHECK(std::includes(runs[i - 1].begin(), runs[i - 1].end(), runs[i].begin(),
                                runs[i].end()));
        }
    }
}

TEST_CASE("strict mode also terminates on a justified candidate") {
    const Dataset w = step_series(25, 25);
    const Dataset y = step_series(25, 25);
    Rng rng(9);
    const auto ivs = sample_intervals(50, 40, 0, rng);
    PenaltyConfig config = npcd::default_penalty_config(100);
    config.strict_multi = true;
    const Segmentation seg = npcd::nwbs_auto(y, w, ivs, config);
    REQUIRE(seg.size() >= 1);
    bool near = false;
    for (int t : seg.times()) {
        near = near || std::abs(t - 25) <= 1;
    }
    CHECK(near);
}

TEST_CASE("auto selection validates its configuration") {
    const Dataset data = constant_series(10);
    Rng rng(10);
    const auto ivs = sample_intervals(10, 3, 0, rng);
    PenaltyConfig bad;
    bad.lambda = 1.0;
    CHECK_THROWS_AS(npcd::nwbs_auto(data, data, ivs, bad), std::invalid_argument);
    bad.tau_grid = {0.5, 0.5};
    CHECK_THROWS_AS(npcd::nwbs_auto(data, data, ivs, bad), std::invalid_argument);
    bad.tau_grid = {0.5, 1.0};
    bad.lambda = 0.0;
    CHECK_THROWS_AS(npcd::nwbs_auto(data, data, ivs, bad), std::invalid_argument);
}
