#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "spinex/config.hpp"
#include "spinex/matrix.hpp"

namespace spinex {

/// Per-feature distance weights: population variance of each working-matrix
/// column plus a 1e-8 floor.
struct WeightVector {
    std::vector<double> weights;
};

/// Output of detect(): per-row anomaly scores, the decision threshold, the
/// rows whose score strictly exceeds it, and the +-1 predictions.
struct DetectionResult {
    std::vector<double> scores;
    double threshold = 0.0;
    std::vector<std::size_t> flagged;  // ascending row indices with score > threshold
    std::vector<int> predictions;      // +1 normal, -1 anomaly
};

struct ExplanationEntry {
    std::string feature_name;
    double value = 0.0;
    double baseline = 0.0;     // column mean of the original matrix
    double contribution = 0.0; // |value - baseline|
};

/// Why one row stood out: every original feature, most deviant first.
struct Explanation {
    std::size_t row_index = 0;
    std::vector<ExplanationEntry> entries; // sorted by contribution descending
};

// ---- pipeline stages --------------------------------------------------------

/// Per-column rescale. standard: (x-mu)/sigma with population sigma; minmax:
/// (x-min)/(max-min); robust: (x-Q1)/(Q3-Q1). A column whose denominator is
/// zero maps to all zeros instead of propagating NaN.
FeatureMatrix apply_scaling(const FeatureMatrix& m, ScalingMethod method);

/// sqrt(|x|) when any element is <= 0, otherwise ln(1+x). The branch is taken
/// once for the whole column, not per element.
std::vector<double> select_transformation(const std::vector<double>& col);

/// Pairwise product columns: for each i<j a column x_i*x_j named
/// Interaction_{i+1}_{j+1}_linear, immediately followed by its transformed
/// twin ..._nonlinear when use_nonlinear is set. Only the derived columns are
/// returned; callers append them to the source matrix.
FeatureMatrix precompute_interactions(const FeatureMatrix& m, bool use_nonlinear);

WeightVector compute_weights(const FeatureMatrix& work);

/// Distances from one row to every row (self maps to 0). When weights are
/// present both rows are multiplied by sqrt(w) before the metric is applied,
/// for every metric.
std::vector<double> row_distances(const FeatureMatrix& work, std::size_t row_index,
                                  const std::optional<WeightVector>& weights,
                                  DistanceMetric metric, double minkowski_p = 2.0);

/// Anomaly score per row: with D the pairwise distance matrix and b its
/// column mean, score[i] = sum_k |D[i][k] - b[k]|. Honors config.use_weights,
/// the distance metric, and worker_count; the result is bit-identical for
/// every worker count and permutation-equivariant in the rows.
std::vector<double> compute_scores(const FeatureMatrix& work, const DetectorConfig& config);

// ---- thresholds -------------------------------------------------------------

/// Linear-interpolation percentile: sort ascending to s[0..m-1], set
/// p = (tau/100)*(m-1), return s[floor p] + (p - floor p)*(s[ceil p] - s[floor p]).
double linear_percentile(std::vector<double> values, double tau);

/// Percentile of the non-NaN scores at tau.
double fixed_threshold(const std::vector<double>& scores, double tau);

/// mean + multiplier * sample standard deviation (divisor m-1); a single
/// score yields its own value (sigma taken as 0).
double statistical_threshold(const std::vector<double>& scores, double multiplier);

/// Percentile at quantile*100 of the trailing window_size scores (all scores
/// when there are no more than window_size of them).
double adaptive_quantile_threshold(const std::vector<double>& scores, std::size_t window_size,
                                   double quantile);

// ---- end-to-end -------------------------------------------------------------

/// The matrix distances actually see: original features after optional
/// scaling, plus optional interaction columns.
FeatureMatrix working_matrix(const FeatureMatrix& m, const DetectorConfig& config);

/// Full pipeline: working matrix, scores, threshold per config, flags via
/// strict score > threshold, +-1 predictions.
DetectionResult detect(const FeatureMatrix& m, const DetectorConfig& config);

/// Feature contributions for each flagged row against the ORIGINAL
/// (pre-scaling, pre-interaction) values; baseline is the column mean.
std::vector<Explanation> explain(const FeatureMatrix& original,
                                 const std::vector<std::size_t>& flagged);

/// Renders one explanation as indented "- Name: v (baseline: b, contribution:
/// c)" lines with two decimals. Basic keeps the top three entries, advanced
/// keeps them all.
std::string format_explanation(const Explanation& e,
                               ExplainabilityLevel level = ExplainabilityLevel::Basic);

namespace detail {

// Reductions evaluated in a canonical (sorted) element order, making each
// result a pure function of the multiset of inputs. Scores built from these
// are bitwise permutation-equivariant and independent of worker scheduling.
double sorted_sum(std::vector<double> v);
double sorted_mean(std::vector<double> v);
double sorted_population_variance(const std::vector<double>& v);

}  // namespace detail

}  // namespace spinex
