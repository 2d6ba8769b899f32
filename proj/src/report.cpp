#include "npcd/report.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

namespace npcd {

namespace {

std::string fmt_metric(double v) {
    if (std::isinf(v)) {
        return v > 0 ? "inf" : "-inf";
    }
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

}  // namespace

nlohmann::json json_extended(double v) {
    if (std::isinf(v)) {
        return v > 0 ? "inf" : "-inf";
    }
    return v;
}

nlohmann::json scenario_to_json(const ScenarioSpec& spec) {
    return nlohmann::json{
        {"scenario", to_string(spec.id)},
        {"T", spec.T},
        {"K", spec.K},
        {"n_policy",
         {{"kind", spec.n_policy.kind == NPolicy::Kind::Constant ? "constant" : "poisson"},
          {"c", spec.n_policy.c}}},
        {"seed", spec.seed},
        {"change_points", spec.change_points()},
    };
}

ScenarioSpec scenario_from_json(const nlohmann::json& j) {
    NPolicy policy;
    if (j.contains("n_policy")) {
        const auto& p = j.at("n_policy");
        const std::string kind = p.value("kind", "constant");
        if (kind == "constant") {
            policy.kind = NPolicy::Kind::Constant;
        } else if (kind == "poisson") {
            policy.kind = NPolicy::Kind::Poisson;
        } else {
            throw std::invalid_argument("n_policy.kind must be constant or poisson");
        }
        policy.c = p.value("c", std::int64_t{1});
    }
    const std::uint64_t seed = j.value("seed", std::uint64_t{0});
    const int custom_K = j.value("K_override", j.value("custom_K", 0));
    return ScenarioSpec::make(scenario_from_string(j.at("scenario").get<std::string>()),
                              j.at("T").get<int>(), policy, seed, custom_K);
}

nlohmann::json detector_config_to_json(const DetectorConfig& config) {
    nlohmann::json j{
        {"method", to_string(config.method)},
        {"S", config.num_intervals},
        {"max_interval_len", config.max_interval_len},
    };
    if (config.method == Method::NwbsAuto) {
        j["lambda"] = config.penalty.lambda;
        j["tau_grid"] = config.penalty.tau_grid;
        j["strict_multi"] = config.penalty.strict_multi;
        switch (config.split) {
            case SplitMode::Auto: j["split"] = "auto"; break;
            case SplitMode::TimeParity: j["split"] = "time"; break;
            case SplitMode::WithinTime: j["split"] = "within"; break;
        }
    } else {
        j["tau"] = config.tau;
    }
    return j;
}

nlohmann::json detect_report_json(const DetectorConfig& config, const Segmentation& result,
                                  std::uint64_t seed, double wall_ms) {
    nlohmann::json points = nlohmann::json::array();
    for (const auto& p : result.points) {
        points.push_back(nlohmann::json{
            {"time", p.time},
            {"value", p.value},
            {"window", {p.window_s, p.window_e}},
        });
    }
    return nlohmann::json{
        {"schema_version", 1},
        {"command", "detect"},
        {"method", to_string(config.method)},
        {"parameters", detector_config_to_json(config)},
        {"change_points", result.times()},
        {"points", points},
        {"seed", seed},
        {"wall_ms", wall_ms},
    };
}

nlohmann::json bench_report_json(const RunReport& report) {
    nlohmann::json reps = nlohmann::json::array();
    for (const auto& r : report.replicates) {
        reps.push_back(nlohmann::json{
            {"rep", r.rep},
            {"seed", r.seed},
            {"k_true", r.k_true},
            {"k_est", r.k_est},
            {"abs_k_error", abs_k_error(r.k_true, r.k_est)},
            {"d_est_given_true", json_extended(r.d_est_given_true)},
            {"d_true_given_est", json_extended(r.d_true_given_est)},
            {"estimate", r.estimate},
            {"failed", r.failed},
            {"wall_ms", r.wall_ms},
        });
    }
    return nlohmann::json{
        {"schema_version", 1},
        {"command", "bench"},
        {"scenario", scenario_to_json(report.spec)},
        {"parameters", detector_config_to_json(report.config)},
        {"reps", report.reps},
        {"seed", report.seed},
        {"replicates", reps},
        {"aggregates",
         {{"mean_abs_k_error", report.mean_abs_k_error},
          {"median_d_est_given_true", json_extended(report.median_d_est_given_true)},
          {"median_d_true_given_est", json_extended(report.median_d_true_given_est)}}},
        {"total_wall_ms", report.total_wall_ms},
    };
}

void write_bench_csv(const RunReport& report, std::ostream& out) {
    out << "rep,seed,k_true,k_est,abs_k_error,d_est_given_true,d_true_given_est,failed,wall_ms\n";
    for (const auto& r : report.replicates) {
        out << r.rep << ',' << r.seed << ',' << r.k_true << ',' << r.k_est << ','
            << abs_k_error(r.k_true, r.k_est) << ',' << fmt_metric(r.d_est_given_true) << ','
            << fmt_metric(r.d_true_given_est) << ',' << (r.failed ? 1 : 0) << ','
            << fmt_metric(r.wall_ms) << '\n';
    }
}

void strip_timing(nlohmann::json& j) {
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end();) {
            if (it.key().size() >= 3 && it.key().ends_with("_ms")) {
                it = j.erase(it);
            } else {
                strip_timing(it.value());
                ++it;
            }
        }
    } else if (j.is_array()) {
        for (auto& el : j) {
            strip_timing(el);
        }
    }
}

}  // namespace npcd
