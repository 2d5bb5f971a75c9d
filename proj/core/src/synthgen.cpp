#include "spinex/synthgen.hpp"

#include <cmath>
#include <string>

#include "spinex/error.hpp"
#include "spinex/rng.hpp"

namespace spinex {

void ScenarioSpec::validate() const {
    if (!(cov_scale > 0.0)) {
        throw ArgumentError("cov_scale must be positive");
    }
    if (!(outlier_fraction >= 0.0 && outlier_fraction <= 1.0)) {
        throw ArgumentError("outlier_fraction must lie in [0, 1]");
    }
    if (num_features < 1) {
        throw ArgumentError("num_features must be at least 1");
    }
    if (complexity_level > 2) {
        throw ArgumentError("complexity_level must be 0, 1, or 2");
    }
    if (size < 2) {
        throw ArgumentError("size must be at least 2");
    }
    if (complexity_level >= 1 && num_features < 2) {
        throw ArgumentError("complexity_level >= 1 needs at least 2 features");
    }
    if (planted_outlier_count(outlier_fraction, size) >= size) {
        throw ArgumentError("outlier fraction leaves no normal points");
    }
}

std::size_t planted_outlier_count(double outlier_fraction, std::size_t size) {
    const double raw = outlier_fraction * static_cast<double>(size);
    const double nearest = std::round(raw);
    // fraction * size often lands a few ulps above a whole number (0.03 * 100
    // evaluates to 3.0000000000000004); take the whole number in that case so
    // the ceiling reflects the intended product, not the rounding noise.
    if (std::fabs(raw - nearest) < 1e-9 * static_cast<double>(size)) {
        return static_cast<std::size_t>(nearest);
    }
    return static_cast<std::size_t>(std::ceil(raw));
}

FeatureMatrix augment_complexity(const FeatureMatrix& m, std::size_t level) {
    m.validate();
    if (level > 2) {
        throw ArgumentError("complexity_level must be 0, 1, or 2");
    }
    if (level == 0) {
        return m;
    }
    if (m.n_cols < 2) {
        throw ArgumentError("complexity_level >= 1 needs at least 2 features");
    }
    const std::size_t d = m.n_cols;
    const std::size_t extra_cols = level == 1 ? 1 : 1 + 2 * d;
    FeatureMatrix extra;
    extra.n_rows = m.n_rows;
    extra.n_cols = extra_cols;
    extra.values.assign(m.n_rows * extra_cols, 0.0);
    for (std::size_t r = 0; r < m.n_rows; ++r) {
        std::size_t c = 0;
        extra.values[r * extra_cols + c++] = m.at(r, 0) * m.at(r, 1);
        if (level == 2) {
            for (std::size_t j = 0; j < d; ++j) {
                extra.values[r * extra_cols + c++] = m.at(r, j) * m.at(r, j);
            }
            for (std::size_t j = 0; j < d; ++j) {
                extra.values[r * extra_cols + c++] = std::sin(m.at(r, j));
            }
        }
    }
    extra.column_names.reserve(extra_cols);
    for (std::size_t c = 0; c < extra_cols; ++c) {
        extra.column_names.push_back("Feature" + std::to_string(d + c + 1));
    }
    return append_columns(m, extra);
}

LabeledDataset generate_scenario(const ScenarioSpec& spec) {
    spec.validate();
    const std::size_t n_out = planted_outlier_count(spec.outlier_fraction, spec.size);
    const std::size_t n_norm = spec.size - n_out;
    const std::size_t d = spec.num_features;
    const double sigma = std::sqrt(spec.cov_scale);

    SeededRng rng(spec.seed);
    FeatureMatrix base;
    base.n_rows = spec.size;
    base.n_cols = d;
    base.values.resize(spec.size * d);
    base.column_names = default_column_names(d);
    // Normal block first, outlier block second, both row-major, so a seed
    // pins every draw before the shuffle rearranges rows.
    for (std::size_t r = 0; r < spec.size; ++r) {
        const double mean = r < n_norm ? 0.0 : spec.mean_shift;
        for (std::size_t j = 0; j < d; ++j) {
            base.values[r * d + j] = mean + sigma * rng.next_normal();
        }
    }
    std::vector<int> labels(spec.size, 0);
    for (std::size_t r = n_norm; r < spec.size; ++r) {
        labels[r] = 1;
    }

    FeatureMatrix augmented = augment_complexity(base, spec.complexity_level);

    const std::vector<std::size_t> perm = random_permutation(spec.size, rng);
    LabeledDataset out;
    out.matrix.n_rows = augmented.n_rows;
    out.matrix.n_cols = augmented.n_cols;
    out.matrix.column_names = augmented.column_names;
    out.matrix.values.resize(augmented.values.size());
    out.labels.resize(spec.size);
    for (std::size_t r = 0; r < spec.size; ++r) {
        const std::size_t src = perm[r];
        for (std::size_t j = 0; j < augmented.n_cols; ++j) {
            out.matrix.values[r * augmented.n_cols + j] = augmented.at(src, j);
        }
        out.labels[r] = labels[src];
    }
    return out;
}

std::vector<ScenarioSpec> scenario_catalog() {
    struct Row {
        double shift, cov, frac;
        std::size_t features, level, size;
    };
    static const Row rows[] = {
        {4.0, 1.2, 0.03, 3, 0, 100},    {-1.0, 0.7, 0.04, 9, 1, 350},
        {5.0, 1.1, 0.12, 5, 2, 8000},   {-4.0, 0.6, 0.08, 3, 0, 550},
        {2.0, 2.5, 0.07, 11, 0, 120},   {-3.0, 0.3, 0.18, 19, 1, 300},
        {1.5, 0.9, 0.11, 16, 1, 400},   {-2.0, 1.3, 0.16, 10, 2, 100},
        {-1.0, 0.4, 0.19, 4, 2, 320},   {4.5, 0.9, 0.06, 25, 1, 4200},
        {-4.5, 0.7, 0.09, 11, 0, 520},  {2.5, 1.6, 0.13, 14, 0, 130},
        {-3.5, 0.5, 0.11, 10, 2, 590},  {1.2, 1.7, 0.17, 18, 1, 1400},
        {3.5, 1.2, 0.15, 13, 1, 440},   {-1.5, 0.8, 0.22, 150, 0, 5040},
        {2.0, 1.0, 0.03, 3, 0, 200},    {-2.0, 0.5, 0.04, 13, 1, 3000},
        {-1.0, 0.7, 0.05, 9, 2, 150},   {3.0, 0.6, 0.02, 7, 1, 250},
        {-3.0, 1.1, 0.06, 30, 0, 1000},
    };
    std::vector<ScenarioSpec> catalog;
    catalog.reserve(std::size(rows));
    for (std::size_t i = 0; i < std::size(rows); ++i) {
        ScenarioSpec s;
        s.mean_shift = rows[i].shift;
        s.cov_scale = rows[i].cov;
        s.outlier_fraction = rows[i].frac;
        s.num_features = rows[i].features;
        s.complexity_level = rows[i].level;
        s.size = rows[i].size;
        s.seed = i;
        catalog.push_back(s);
    }
    return catalog;
}

}  // namespace spinex
