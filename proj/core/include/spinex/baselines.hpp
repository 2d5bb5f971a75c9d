#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "spinex/detector.hpp"
#include "spinex/matrix.hpp"

namespace spinex {

enum class BaselineKind { Knn, Hbos };

struct BaselineSpec {
    BaselineKind kind = BaselineKind::Knn;
    std::size_t k = 5;                     // knn: neighbors averaged, must be < n_rows
    std::optional<std::size_t> bin_count;  // hbos: absent means max(1, round(sqrt(n)))
};

/// score[i] = mean euclidean distance from row i to its k nearest other rows;
/// distance ties resolve toward the lower row index.
std::vector<double> knn_scores(const FeatureMatrix& m, std::size_t k);

/// Histogram-based outlier score: per feature, equal-width bins across
/// [min, max] with heights normalized by the fullest bin; score[i] sums
/// log(1/(height + 1e-12)) over features. A constant feature contributes a
/// single bin of height 1.
std::vector<double> hbos_scores(const FeatureMatrix& m, std::size_t bin_count);

std::size_t auto_bin_count(std::size_t n_rows);

/// Scores with the requested algorithm, then applies the same percentile
/// flagging rule the main detector uses (strict score > threshold at tau).
DetectionResult run_baseline(const FeatureMatrix& m, const BaselineSpec& spec, double tau = 98.0);

}  // namespace spinex
