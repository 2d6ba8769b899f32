#include "npcd/monte_carlo.hpp"

#include <omp.h>

#include <stdexcept>

namespace npcd {

RunReport run_monte_carlo(const ScenarioSpec& spec, const DetectorConfig& config, int reps,
                          std::uint64_t seed) {
    if (reps < 1) {
        throw std::invalid_argument("run_monte_carlo: reps must be >= 1");
    }
    RunReport report;
    report.spec = spec;
    report.config = config;
    report.reps = reps;
    report.seed = seed;
    report.replicates.resize(static_cast<std::size_t>(reps));

    const double t0 = omp_get_wtime();
#pragma omp parallel for schedule(dynamic, 1)
    for (int rep = 0; rep < reps; ++rep) {
        ReplicateResult& out = report.replicates[static_cast<std::size_t>(rep)];
        out.rep = rep;
        out.seed = Rng::derive(seed, static_cast<std::uint64_t>(rep));
        Rng rng(out.seed);
        const double r0 = omp_get_wtime();
        const GeneratedSeries series = generate(spec, rng);
        out.k_true = static_cast<std::int64_t>(series.truth.size());
        std::vector<int> est;
        try {
            est = run_detector(series.data, config, rng).times();
        } catch (const std::exception&) {
            out.failed = true;  // scored as an empty estimate
            est.clear();
        }
        out.estimate = est;
        out.k_est = static_cast<std::int64_t>(est.size());
        out.d_est_given_true = hausdorff_one_sided(est, series.truth);
        out.d_true_given_est = hausdorff_one_sided(series.truth, est);
        out.wall_ms = (omp_get_wtime() - r0) * 1e3;
    }
    report.total_wall_ms = (omp_get_wtime() - t0) * 1e3;

    double k_sum = 0.0;
    std::vector<double> d1;
    std::vector<double> d2;
    d1.reserve(report.replicates.size());
    d2.reserve(report.replicates.size());
    for (const auto& r : report.replicates) {
        k_sum += static_cast<double>(abs_k_error(r.k_true, r.k_est));
        d1.push_back(r.d_est_given_true);
        d2.push_back(r.d_true_given_est);
    }
    report.mean_abs_k_error = k_sum / static_cast<double>(reps);
    report.median_d_est_given_true = median_extended(std::move(d1));
    report.median_d_true_given_est = median_extended(std::move(d2));
    return report;
}

}  // namespace npcd
