#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spinex/config.hpp"
#include "spinex/detector.hpp"
#include "spinex/matrix.hpp"

namespace spinex {

/// Shortest decimal form that round-trips the exact double (via to_chars), so
/// written files are byte-stable and reloadable without drift.
std::string format_double(double x);

/// Full-cell numeric parse (via from_chars); trailing garbage is an error.
double parse_double(const std::string& cell);

/// A feature table plus optional 0/1 ground-truth labels, as carried by the
/// dataset CSV format (header row, numeric columns, optional "label" column).
struct Dataset {
    std::string name;  // file stem, used as the dataset key in benchmarks
    FeatureMatrix matrix;
    std::optional<std::vector<int>> labels;
};

/// Reads a dataset CSV. The label column (by the given name, or "label" when
/// absent) is split off into Dataset::labels; every other column must be
/// numeric. No quoting: cells must not contain commas.
Dataset load_csv_dataset(const std::string& path,
                         const std::optional<std::string>& label_column = std::nullopt);

void write_csv_dataset(const std::string& path, const FeatureMatrix& m,
                       const std::optional<std::vector<int>>& labels);

/// Writes the detection report JSON: {config, threshold, scores, flagged,
/// explanations} plus labels when given. The config block captures every
/// result-affecting knob; worker_count is omitted because it only schedules
/// work, and reports must be byte-identical across worker counts.
void write_detection_report(const std::string& path, const FeatureMatrix& features,
                            const DetectorConfig& config, const DetectionResult& result,
                            const std::optional<std::vector<int>>& labels);

/// The slice of a report the explain command needs back.
struct ReportSummary {
    double threshold = 0.0;
    std::vector<double> scores;
    std::vector<std::size_t> flagged;
};

ReportSummary read_detection_report(const std::string& path);

/// Writes the pc1,pc2,label,flagged projection CSV for external plotting.
/// labels may be empty (written as 0); flagged rows are marked 1.
void write_pca_csv(const std::string& path, const std::vector<double>& pc1,
                   const std::vector<double>& pc2, const std::vector<int>& labels,
                   const std::vector<std::size_t>& flagged);

}  // namespace spinex
