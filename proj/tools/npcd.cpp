// npcd: offline nonparametric change point detection on the command line.
//
// Change points are reported as the last time index of the left segment, so
// a change at time b means the distribution differs between t <= b and
// t > b. All randomness flows from --seed; the thread count (NPCD_THREADS or
// --threads) never affects any output except the *_ms timing fields.

#include <CLI11.hpp>
#include <json.hpp>

#include <omp.h>

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "npcd/io.hpp"
#include "npcd/report.hpp"

namespace {

using nlohmann::json;

void apply_thread_count(int threads) {
    if (threads > 0) {
        omp_set_num_threads(threads);
    } else if (const char* env = std::getenv("NPCD_THREADS")) {
        const int n = std::atoi(env);
        if (n > 0) {
            omp_set_num_threads(n);
        }
    }
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write '" + path + "'");
    }
    out << text;
}

npcd::Dataset load_data(const std::string& path, const std::string& format) {
    const npcd::DataFormat fmt = format.empty() ? npcd::infer_format(path)
                                                : npcd::format_from_string(format);
    return npcd::ingest(path, fmt);
}

std::vector<int> load_point_set(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open '" + path + "'");
    }
    json doc = json::parse(in);
    if (doc.is_object()) {  // a detect report also works as a point-set file
        doc = doc.at("change_points");
    }
    if (!doc.is_array()) {
        throw std::runtime_error("point-set file must be an array or a report with change_points");
    }
    std::vector<int> times;
    for (const auto& v : doc) {
        times.push_back(v.get<int>());
    }
    return times;
}

struct DetectorCli {
    std::string method = "nwbs-auto";
    double tau = 0.0;
    std::vector<double> tau_grid;
    double lambda = 0.0;
    int num_intervals = 120;
    int max_interval_len = 0;
    std::string split = "auto";
    bool strict_multi = false;

    void attach(CLI::App* cmd, bool with_split) {
        cmd->add_option("--method", method, "nbs, nwbs or nwbs-auto")
            ->check(CLI::IsMember({"nbs", "nwbs", "nwbs-auto"}))
            ->capture_default_str();
        cmd->add_option("--tau", tau, "detection threshold (nbs and nwbs)");
        cmd->add_option("--tau-grid", tau_grid,
                        "ascending threshold grid for nwbs-auto (default: derived from the data)");
        cmd->add_option("--lambda", lambda,
                        "selection penalty for nwbs-auto (default: 2 log(n)/3)");
        cmd->add_option("-S,--intervals", num_intervals, "random interval count")
            ->capture_default_str();
        cmd->add_option("--max-interval-len", max_interval_len,
                        "reject sampled intervals longer than this (0 = uncapped)");
        if (with_split) {
            cmd->add_option("--split", split,
                            "nwbs-auto sample split: auto, time (odd/even t) or within "
                            "(alternating observations, needs n_t >= 2)")
                ->check(CLI::IsMember({"auto", "time", "within"}))
                ->capture_default_str();
        }
        cmd->add_flag("--strict-multi", strict_multi,
                      "use the interval-based test when a grid step drops several points");
    }

    npcd::DetectorConfig build() const {
        npcd::DetectorConfig config;
        config.method = npcd::method_from_string(method);
        config.tau = tau;
        config.num_intervals = num_intervals;
        config.max_interval_len = max_interval_len;
        config.penalty.lambda = lambda;
        config.penalty.tau_grid = tau_grid;
        config.penalty.strict_multi = strict_multi;
        if (split == "time") {
            config.split = npcd::SplitMode::TimeParity;
        } else if (split == "within") {
            config.split = npcd::SplitMode::WithinTime;
        } else {
            config.split = npcd::SplitMode::Auto;
        }
        return config;
    }
};

npcd::ScenarioSpec scenario_from_cli(const std::string& scenario, int T, const std::string& n_policy,
                                     std::uint64_t seed, int custom_K, const std::string& spec_file) {
    if (!spec_file.empty()) {
        std::ifstream in(spec_file);
        if (!in) {
            throw std::runtime_error("cannot open '" + spec_file + "'");
        }
        return npcd::scenario_from_json(json::parse(in));
    }
    npcd::NPolicy policy;
    if (!n_policy.empty()) {
        const auto colon = n_policy.find(':');
        const std::string kind = n_policy.substr(0, colon);
        if (colon == std::string::npos) {
            throw std::runtime_error("--n-policy expects const:<c> or pois:<c>");
        }
        if (kind == "const") {
            policy.kind = npcd::NPolicy::Kind::Constant;
        } else if (kind == "pois") {
            policy.kind = npcd::NPolicy::Kind::Poisson;
        } else {
            throw std::runtime_error("--n-policy expects const:<c> or pois:<c>");
        }
        policy.c = std::stoll(n_policy.substr(colon + 1));
    }
    return npcd::ScenarioSpec::make(npcd::scenario_from_string(scenario), T, policy, seed, custom_K);
}

int run(int argc, char** argv) {
    CLI::App app{"offline nonparametric change point detection"};
    app.require_subcommand(1);
    int threads = 0;
    app.add_option("--threads", threads, "worker threads (default: NPCD_THREADS or OpenMP's choice)");

    // detect
    auto* detect = app.add_subcommand("detect", "detect change points in a data file");
    std::string in_path;
    std::string in_format;
    std::string out_path;
    std::uint64_t seed = 0;
    DetectorCli detector;
    detect->add_option("-i,--input", in_path, "long-csv or ragged-json data file")->required();
    detect->add_option("--format", in_format, "long-csv or ragged-json (default: by extension)");
    detect->add_option("-o,--output", out_path, "report path (default: stdout)");
    detect->add_option("--seed", seed, "rng seed for interval sampling")->capture_default_str();
    detector.attach(detect, true);

    // generate
    auto* generate = app.add_subcommand("generate", "draw a series from a benchmark scenario");
    std::string gen_scenario = "3";
    int gen_T = 1000;
    std::string gen_npolicy;
    std::uint64_t gen_seed = 0;
    int gen_K = 0;
    std::string gen_spec_file;
    std::string gen_out;
    std::string gen_format;
    std::string gen_truth;
    generate->add_option("--scenario", gen_scenario, "2, 3, 4, 5 or custom")->capture_default_str();
    generate->add_option("--T", gen_T, "horizon")->capture_default_str();
    generate->add_option("--n-policy", gen_npolicy, "const:<c> or pois:<c> observations per time");
    generate->add_option("--seed", gen_seed, "rng seed")->capture_default_str();
    generate->add_option("--K", gen_K, "change point count (custom scenario only)");
    generate->add_option("--spec", gen_spec_file, "scenario spec json (overrides the flags above)");
    generate->add_option("-o,--output", gen_out, "data file (default: stdout as ragged-json)");
    generate->add_option("--format", gen_format, "long-csv or ragged-json (default: by extension)");
    generate->add_option("--truth", gen_truth, "also write the true change points as json");

    // bench
    auto* bench = app.add_subcommand("bench", "monte carlo benchmark of a detector on a scenario");
    std::string bench_scenario = "3";
    int bench_T = 1000;
    std::string bench_npolicy;
    int bench_reps = 100;
    std::uint64_t bench_seed = 0;
    int bench_K = 0;
    std::string bench_spec_file;
    std::string bench_prefix;
    DetectorCli bench_detector;
    bench->add_option("--scenario", bench_scenario, "2, 3, 4, 5 or custom")->capture_default_str();
    bench->add_option("--T", bench_T, "horizon")->capture_default_str();
    bench->add_option("--n-policy", bench_npolicy, "const:<c> or pois:<c> observations per time");
    bench->add_option("--reps", bench_reps, "replicates")->capture_default_str();
    bench->add_option("--seed", bench_seed, "base seed; replicate seeds derive from it")
        ->capture_default_str();
    bench->add_option("--K", bench_K, "change point count (custom scenario only)");
    bench->add_option("--spec", bench_spec_file, "scenario spec json (overrides the flags above)");
    bench->add_option("-o,--output-prefix", bench_prefix,
                      "writes <prefix>.json and <prefix>.csv (default: json to stdout)");
    bench_detector.attach(bench, true);

    // merge
    auto* merge = app.add_subcommand("merge", "re-test and merge two change point sets");
    std::string merge_data;
    std::string merge_format;
    std::string merge_b1;
    std::string merge_b2;
    double merge_lambda = 0.0;
    std::string merge_out;
    merge->add_option("-i,--input", merge_data, "evaluation data file")->required();
    merge->add_option("--format", merge_format, "long-csv or ragged-json (default: by extension)");
    merge->add_option("--b1", merge_b1, "first point-set file (json array or report)")->required();
    merge->add_option("--b2", merge_b2, "second point-set file")->required();
    merge->add_option("--lambda", merge_lambda, "gain penalty (default: 2 log(n)/3)");
    merge->add_option("-o,--output", merge_out, "report path (default: stdout)");

    CLI11_PARSE(app, argc, argv);
    apply_thread_count(threads);

    if (detect->parsed()) {
        const npcd::Dataset data = load_data(in_path, in_format);
        const npcd::DetectorConfig config = detector.build();
        npcd::Rng rng(seed);
        const double t0 = omp_get_wtime();
        const npcd::Segmentation result = npcd::run_detector(data, config, rng);
        const double wall_ms = (omp_get_wtime() - t0) * 1e3;
        write_text(out_path, npcd::detect_report_json(config, result, seed, wall_ms).dump(2) + "\n");
        return 0;
    }

    if (generate->parsed()) {
        const npcd::ScenarioSpec spec =
            scenario_from_cli(gen_scenario, gen_T, gen_npolicy, gen_seed, gen_K, gen_spec_file);
        npcd::Rng rng(spec.seed);
        const npcd::GeneratedSeries series = npcd::generate(spec, rng);
        if (gen_out.empty()) {
            std::ostringstream buf;
            npcd::emit_ragged_json(series.data, buf);
            std::cout << buf.str();
        } else {
            const npcd::DataFormat fmt = gen_format.empty() ? npcd::infer_format(gen_out)
                                                            : npcd::format_from_string(gen_format);
            npcd::emit(series.data, gen_out, fmt);
        }
        if (!gen_truth.empty()) {
            json truth{{"schema_version", 1},
                       {"command", "generate"},
                       {"scenario", npcd::scenario_to_json(spec)},
                       {"change_points", series.truth}};
            write_text(gen_truth, truth.dump(2) + "\n");
        }
        return 0;
    }

    if (bench->parsed()) {
        const npcd::ScenarioSpec spec = scenario_from_cli(bench_scenario, bench_T, bench_npolicy,
                                                          bench_seed, bench_K, bench_spec_file);
        const npcd::RunReport report =
            npcd::run_monte_carlo(spec, bench_detector.build(), bench_reps, bench_seed);
        const json doc = npcd::bench_report_json(report);
        if (bench_prefix.empty()) {
            std::cout << doc.dump(2) << "\n";
        } else {
            write_text(bench_prefix + ".json", doc.dump(2) + "\n");
            std::ofstream csv(bench_prefix + ".csv");
            if (!csv) {
                throw std::runtime_error("cannot write '" + bench_prefix + ".csv'");
            }
            npcd::write_bench_csv(report, csv);
        }
        return 0;
    }

    // merge
    const npcd::Dataset data = load_data(merge_data, merge_format);
    const auto b1 = npcd::Segmentation::from_times(load_point_set(merge_b1));
    const auto b2 = npcd::Segmentation::from_times(load_point_set(merge_b2));
    const double lambda = merge_lambda > 0.0
                              ? merge_lambda
                              : 2.0 * std::log(static_cast<double>(data.total())) / 3.0;
    const double t0 = omp_get_wtime();
    const npcd::Segmentation merged = npcd::update_merge(data, b1, b2, lambda);
    const double wall_ms = (omp_get_wtime() - t0) * 1e3;
    json points = json::array();
    for (const auto& p : merged.points) {
        points.push_back(json{{"time", p.time}, {"value", p.value}, {"window", {p.window_s, p.window_e}}});
    }
    const json doc{{"schema_version", 1}, {"command", "merge"},  {"lambda", lambda},
                   {"change_points", merged.times()},            {"points", points},
                   {"wall_ms", wall_ms}};
    write_text(merge_out, doc.dump(2) + "\n");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& err) {
        const json failure{{"error", {{"message", err.what()}}}};
        std::cout << failure.dump(2) << "\n";
        return 1;
    }
}
