// Command-line front end: generate synthetic datasets, run detection, print
// explanations, benchmark algorithms, aggregate ranks, and time the scoring
// path over an (n, d) grid.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "spinex/baselines.hpp"
#include "spinex/bench.hpp"
#include "spinex/detector.hpp"
#include "spinex/error.hpp"
#include "spinex/io.hpp"
#include "spinex/synthgen.hpp"

namespace {

struct GenerateOptions {
    int scenario = 0;  // 1-based catalog entry; 0 = use --spec
    std::vector<double> spec_values;
    std::uint64_t seed = 0;
    bool seed_given = false;
    std::string out;
};

void run_generate(const GenerateOptions& opt) {
    spinex::ScenarioSpec spec;
    if (opt.scenario > 0) {
        const auto catalog = spinex::scenario_catalog();
        if (opt.scenario > static_cast<int>(catalog.size())) {
            throw spinex::ArgumentError("scenario must lie in [1, " +
                                        std::to_string(catalog.size()) + "]");
        }
        spec = catalog[static_cast<std::size_t>(opt.scenario - 1)];
    } else {
        if (opt.spec_values.size() != 6) {
            throw spinex::ArgumentError(
                "--spec needs 6 comma-separated values: "
                "mean_shift,cov_scale,outlier_fraction,num_features,complexity_level,size");
        }
        spec.mean_shift = opt.spec_values[0];
        spec.cov_scale = opt.spec_values[1];
        spec.outlier_fraction = opt.spec_values[2];
        spec.num_features = static_cast<std::size_t>(opt.spec_values[3]);
        spec.complexity_level = static_cast<std::size_t>(opt.spec_values[4]);
        spec.size = static_cast<std::size_t>(opt.spec_values[5]);
    }
    if (opt.seed_given) {
        spec.seed = opt.seed;
    }
    const spinex::LabeledDataset ds = spinex::generate_scenario(spec);
    spinex::write_csv_dataset(opt.out, ds.matrix, ds.labels);
    std::cout << "wrote " << opt.out << " (" << ds.matrix.n_rows << " rows, "
              << ds.matrix.n_cols << " features + label)\n";
}

struct DetectOptions {
    std::string in;
    std::string out;
    std::string scale;
    std::string metric = "euclidean";
    std::string threshold_method = "fixed";
    bool weights = false;
    bool interactions = false;
    bool nonlinear = false;
    double tau = 98.0;
    double multiplier = 2.0;
    std::size_t window = 50;
    double quantile = 0.95;
    std::size_t workers = 1;
};

spinex::DetectorConfig build_config(const DetectOptions& opt) {
    spinex::DetectorConfig cfg;
    cfg.use_weights = opt.weights;
    cfg.include_interactions = opt.interactions;
    cfg.use_nonlinear = opt.nonlinear;
    const spinex::ParsedMetric parsed = spinex::parse_distance_metric(opt.metric);
    cfg.distance_metric = parsed.metric;
    cfg.minkowski_p = parsed.minkowski_p;
    if (!opt.scale.empty()) {
        cfg.scaling_method = spinex::parse_scaling_method(opt.scale);
    }
    cfg.anomaly_threshold = opt.tau;
    cfg.threshold_method = spinex::parse_threshold_method(opt.threshold_method);
    cfg.multiplier = opt.multiplier;
    cfg.window_size = opt.window;
    cfg.quantile = opt.quantile;
    cfg.worker_count = opt.workers;
    cfg.validate();
    return cfg;
}

void run_detect(const DetectOptions& opt) {
    const spinex::Dataset ds = spinex::load_csv_dataset(opt.in);
    const spinex::DetectorConfig cfg = build_config(opt);
    const spinex::DetectionResult result = spinex::detect(ds.matrix, cfg);
    spinex::write_detection_report(opt.out, ds.matrix, cfg, result, ds.labels);
    std::cout << "flagged " << result.flagged.size() << " of " << ds.matrix.n_rows
              << " rows (threshold " << spinex::format_double(result.threshold)
              << "); report written to " << opt.out << "\n";
}

void run_explain(const std::string& in, const std::string& report_path) {
    const spinex::Dataset ds = spinex::load_csv_dataset(in);
    const spinex::ReportSummary report = spinex::read_detection_report(report_path);
    if (report.flagged.empty()) {
        std::cout << "no rows were flagged in " << report_path << "\n";
        return;
    }
    for (const spinex::Explanation& e : spinex::explain(ds.matrix, report.flagged)) {
        std::cout << spinex::format_explanation(e, spinex::ExplainabilityLevel::Advanced);
    }
}

void run_bench(const std::string& dir, std::vector<std::string> algorithms,
               const std::string& out) {
    namespace fs = std::filesystem;
    if (!fs::is_directory(dir)) {
        throw spinex::ArgumentError("not a directory: " + dir);
    }
    std::vector<std::string> paths;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".csv") {
            paths.push_back(entry.path().string());
        }
    }
    std::sort(paths.begin(), paths.end());
    if (paths.empty()) {
        throw spinex::ArgumentError("no .csv datasets found in " + dir);
    }
    std::vector<spinex::Dataset> datasets;
    datasets.reserve(paths.size());
    for (const std::string& p : paths) {
        datasets.push_back(spinex::load_csv_dataset(p));
    }
    if (algorithms.empty()) {
        algorithms = spinex::known_algorithm_names();
    }
    const spinex::MetricTable table =
        spinex::run_benchmark(datasets, spinex::algorithm_registry(algorithms));
    spinex::write_metric_csv(out, table);
    std::cout << "wrote " << table.cells.size() << " metric rows to " << out << "\n";
}

void run_rank(const std::string& metrics_path, const std::string& out, const std::string& mode) {
    spinex::RankMode rank_mode;
    if (mode == "avg-then-rank") {
        rank_mode = spinex::RankMode::AverageThenRank;
    } else if (mode == "rank-then-avg") {
        rank_mode = spinex::RankMode::RankThenAverage;
    } else {
        throw spinex::ArgumentError("Invalid rank mode: " + mode +
                                    ". Valid options are: avg-then-rank, rank-then-avg");
    }
    const spinex::MetricTable table = spinex::read_metric_csv(metrics_path);
    const std::vector<spinex::RankRow> rows = spinex::rank_algorithms(table, rank_mode);
    spinex::write_rank_csv(out, rows);
    std::cout << "wrote " << rows.size() << " rank rows to " << out << "\n";
}

void run_complexity(const std::vector<std::size_t>& ns, const std::vector<std::size_t>& ds,
                    std::size_t repeats, const std::string& out) {
    const spinex::TimingGrid grid = spinex::measure_complexity(ns, ds, "spinex", repeats);
    spinex::write_timing_csv(out, grid);
    for (const spinex::TimingCell& cell : grid.cells) {
        std::cout << "n=" << cell.n << " d=" << cell.d << " -> "
                  << (cell.skipped ? "skipped" : spinex::format_double(cell.seconds) + " s")
                  << "\n";
    }
    if (grid.alpha) {
        std::cout << "log-log fit: time ~ n^" << spinex::format_double(*grid.alpha) << " * d^"
                  << spinex::format_double(*grid.beta)
                  << " (residual rms " << spinex::format_double(grid.residual_rms) << ")\n";
    } else {
        std::cout << "log-log fit: underdetermined (need >= 2 distinct n and d values)\n";
    }
    std::cout << "wrote " << out << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"SPINEX similarity-based anomaly detection toolkit"};
    app.require_subcommand(1);

    GenerateOptions gen;
    CLI::App* generate = app.add_subcommand("generate", "Write a synthetic labeled dataset CSV");
    CLI::Option* scenario_opt =
        generate->add_option("--scenario", gen.scenario, "Catalog scenario number (1..21)")
            ->check(CLI::Range(1, 21));
    generate
        ->add_option("--spec", gen.spec_values,
                     "mean_shift,cov_scale,outlier_fraction,num_features,complexity_level,size")
        ->delimiter(',')
        ->excludes(scenario_opt);
    CLI::Option* seed_opt = generate->add_option("--seed", gen.seed, "Generator seed");
    generate->add_option("--out", gen.out, "Output CSV path")->required();

    DetectOptions det;
    CLI::App* detect = app.add_subcommand("detect", "Run the detector and write a JSON report");
    detect->add_option("--in", det.in, "Input dataset CSV")->required();
    detect->add_option("--scale", det.scale, "Scaling method: standard, minmax, robust");
    detect->add_flag("--weights", det.weights, "Weight features by variance");
    detect->add_flag("--interactions", det.interactions, "Append pairwise interaction columns");
    detect->add_flag("--nonlinear", det.nonlinear, "Also append transformed interactions");
    detect->add_option("--metric", det.metric,
                       "Distance metric: euclidean, manhattan, minkowski[:p]");
    detect->add_option("--threshold-method", det.threshold_method,
                       "fixed, statistical, or adaptive_quantile");
    detect->add_option("--tau", det.tau, "Fixed-threshold percentile");
    detect->add_option("--multiplier", det.multiplier, "Statistical-threshold multiplier");
    detect->add_option("--window", det.window, "Adaptive-threshold window size");
    detect->add_option("--quantile", det.quantile, "Adaptive-threshold quantile");
    detect->add_option("--workers", det.workers, "Scoring worker threads");
    detect->add_option("--out", det.out, "Output report path")->required();

    std::string explain_in;
    std::string explain_report;
    CLI::App* explain = app.add_subcommand("explain", "Print feature contributions for a report");
    explain->add_option("--in", explain_in, "Dataset CSV the report was produced from")->required();
    explain->add_option("--report", explain_report, "Detection report JSON")->required();

    std::string bench_dir;
    std::vector<std::string> bench_algorithms;
    std::string bench_out;
    CLI::App* bench = app.add_subcommand("bench", "Run algorithms over datasets, write metric CSV");
    bench->add_option("--datasets", bench_dir, "Directory of labeled dataset CSVs")->required();
    bench->add_option("--algorithms", bench_algorithms, "Comma-separated names (default: all)")
        ->delimiter(',');
    bench->add_option("--out", bench_out, "Output metric CSV path")->required();

    std::string rank_metrics;
    std::string rank_out = "ranks.csv";
    std::string rank_mode = "avg-then-rank";
    CLI::App* rank = app.add_subcommand("rank", "Aggregate a metric CSV into sum-of-ranks order");
    rank->add_option("--metrics", rank_metrics, "Metric CSV from bench")->required();
    rank->add_option("--out", rank_out, "Output rank CSV path");
    rank->add_option("--mode", rank_mode, "avg-then-rank (default) or rank-then-avg");

    std::vector<std::size_t> complexity_ns;
    std::vector<std::size_t> complexity_ds;
    std::size_t complexity_repeats = 3;
    std::string complexity_out;
    CLI::App* complexity = app.add_subcommand("complexity", "Time the scoring path over a grid");
    complexity->add_option("--ns", complexity_ns, "Comma-separated row counts")
        ->delimiter(',')
        ->required();
    complexity->add_option("--ds", complexity_ds, "Comma-separated feature counts")
        ->delimiter(',')
        ->required();
    complexity->add_option("--repeats", complexity_repeats, "Timing repeats per cell (median)");
    complexity->add_option("--out", complexity_out, "Output timing CSV path")->required();

    generate->callback([&] {
        gen.seed_given = seed_opt->count() > 0;
        if (scenario_opt->count() == 0 && gen.spec_values.empty()) {
            throw spinex::ArgumentError("generate needs either --scenario or --spec");
        }
        run_generate(gen);
    });
    detect->callback([&] { run_detect(det); });
    explain->callback([&] { run_explain(explain_in, explain_report); });
    bench->callback([&] { run_bench(bench_dir, bench_algorithms, bench_out); });
    rank->callback([&] { run_rank(rank_metrics, rank_out, rank_mode); });
    complexity->callback(
        [&] { run_complexity(complexity_ns, complexity_ds, complexity_repeats, complexity_out); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e);
        return 0;
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const spinex::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
