#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "spinex/detector.hpp"
#include "spinex/io.hpp"
#include "spinex/matrix.hpp"

namespace spinex {

/// A named detector the benchmark can run end to end on a dataset.
struct AlgorithmSpec {
    std::string name;
    std::function<DetectionResult(const FeatureMatrix&)> run;
};

/// The built-in algorithm names, in registry order: the detector under its
/// default and variant configurations, plus the two baselines.
std::vector<std::string> known_algorithm_names();

/// Resolves names to runnable algorithms; unknown names raise ArgumentError
/// listing the valid ones.
std::vector<AlgorithmSpec> algorithm_registry(const std::vector<std::string>& names);

/// One (algorithm, dataset) outcome. Metrics are NaN when unavailable; status
/// is "ok" or a reason (commas replaced so the CSV stays rectangular).
struct MetricCell {
    std::string algorithm;
    std::string dataset;
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
    double auc = 0.0;
    std::string status;
};

struct MetricTable {
    std::vector<MetricCell> cells;
};

/// Runs every algorithm on every dataset. Unlabeled datasets and per-cell
/// failures are recorded in the table, never fatal.
MetricTable run_benchmark(const std::vector<Dataset>& datasets,
                          const std::vector<AlgorithmSpec>& algorithms);

enum class RankMode {
    AverageThenRank,  // average each metric across datasets, then rank the averages
    RankThenAverage,  // rank per dataset, then average the ranks
};

struct RankRow {
    std::string algorithm;
    double avg_precision = 0.0;
    double avg_recall = 0.0;
    double avg_f1 = 0.0;
    double avg_auc = 0.0;
    double rank_p = 0.0;
    double rank_r = 0.0;
    double rank_f1 = 0.0;
    double rank_auc = 0.0;
    double rank_sum = 0.0;
    std::size_t overall = 0;  // 1 = best
};

/// Sum-of-ranks aggregation. Higher metric values rank better; tied values
/// share the mean of their positions; missing averages rank last. Rows come
/// back ordered by ascending rank_sum (ties: precision rank, then name).
std::vector<RankRow> rank_algorithms(const MetricTable& table,
                                     RankMode mode = RankMode::AverageThenRank);

struct TimingCell {
    std::size_t n = 0;
    std::size_t d = 0;
    double seconds = 0.0;
    bool skipped = false;  // resource exhaustion on this cell
};

struct TimingGrid {
    std::vector<TimingCell> cells;
    std::optional<double> alpha;      // fitted exponent of n
    std::optional<double> beta;       // fitted exponent of d
    std::optional<double> intercept;  // fitted constant of the log-log model
    double residual_rms = 0.0;        // rms of log-space residuals
};

/// Times the scoring path of one algorithm over the (n, d) grid using seeded
/// gaussian matrices, one cell at a time (median of repeats), then fits
/// log t = alpha log n + beta log d + c by least squares. Grids too small to
/// determine the fit leave the exponents unset.
TimingGrid measure_complexity(const std::vector<std::size_t>& grid_n,
                              const std::vector<std::size_t>& grid_d,
                              const std::string& algorithm, std::size_t repeats);

// CSV surfaces of the two report tables and the timing grid.
void write_metric_csv(const std::string& path, const MetricTable& table);
MetricTable read_metric_csv(const std::string& path);
void write_rank_csv(const std::string& path, const std::vector<RankRow>& rows);
void write_timing_csv(const std::string& path, const TimingGrid& grid);

}  // namespace spinex
