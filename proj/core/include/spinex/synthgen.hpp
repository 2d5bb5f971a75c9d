#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "spinex/matrix.hpp"

namespace spinex {

/// Parameters of one synthetic scenario: two gaussian populations (normal
/// points at mean 0, outliers at mean_shift on every axis, both with
/// covariance cov_scale * I), optional complexity columns, seeded shuffle.
struct ScenarioSpec {
    double mean_shift = 0.0;
    double cov_scale = 1.0;
    double outlier_fraction = 0.0;
    std::size_t num_features = 1;
    std::size_t complexity_level = 0;  // 0, 1, or 2
    std::size_t size = 2;
    std::uint64_t seed = 0;

    /// Throws ArgumentError when a field is out of range or the outlier
    /// budget would leave no normal points.
    void validate() const;
};

struct LabeledDataset {
    FeatureMatrix matrix;
    std::vector<int> labels;  // 0 normal, 1 outlier; aligned with matrix rows
};

/// Number of outliers a spec plants: the ceiling of fraction * size,
/// evaluated so that products meant to be whole numbers stay whole despite
/// binary rounding (0.03 * 100 must give 3, not 4).
std::size_t planted_outlier_count(double outlier_fraction, std::size_t size);

/// Appends complexity columns. Level 0: none. Level 1: the product of the
/// first two features. Level 2: additionally the square and the sine of every
/// base feature. Appended names continue the FeatureN sequence.
FeatureMatrix augment_complexity(const FeatureMatrix& m, std::size_t level);

/// Draws the two populations, augments, then shuffles rows and labels with
/// the seeded generator. Equal specs produce bit-identical datasets.
LabeledDataset generate_scenario(const ScenarioSpec& spec);

/// The 21 bundled scenarios, seeded by catalog position (entry k gets seed k).
std::vector<ScenarioSpec> scenario_catalog();

}  // namespace spinex
