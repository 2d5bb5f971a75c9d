#include "spinex/detector.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <thread>

#include "spinex/error.hpp"

namespace spinex {

namespace detail {

double sorted_sum(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    double acc = 0.0;
    for (double x : v) {
        acc += x;
    }
    return acc;
}

double sorted_mean(std::vector<double> v) {
    const double n = static_cast<double>(v.size());
    return sorted_sum(std::move(v)) / n;
}

double sorted_population_variance(const std::vector<double>& v) {
    const double mean = sorted_mean(v);
    std::vector<double> sq(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        const double d = v[i] - mean;
        sq[i] = d * d;
    }
    return sorted_sum(std::move(sq)) / static_cast<double>(v.size());
}

namespace {

/// Runs fn(lo, hi) over contiguous row chunks, one per worker. Chunk bodies
/// only write rows they own, so the assembled output never depends on
/// scheduling. Exceptions are collected and rethrown on the caller's thread.
template <typename Fn>
void parallel_chunks(std::size_t n, std::size_t workers, Fn&& fn) {
    workers = std::max<std::size_t>(1, std::min(workers, n));
    if (workers == 1) {
        fn(std::size_t{0}, n);
        return;
    }
    const std::size_t chunk = (n + workers - 1) / workers;
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t lo = w * chunk;
        const std::size_t hi = std::min(n, lo + chunk);
        if (lo >= hi) {
            break;
        }
        pool.emplace_back([&fn, &errors, w, lo, hi] {
            try {
                fn(lo, hi);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) {
        t.join();
    }
    for (const auto& e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
}

double distance_between(std::span<const double> a, std::span<const double> b,
                        DistanceMetric metric, double p) {
    const std::size_t d = a.size();
    switch (metric) {
        case DistanceMetric::Euclidean: {
            double acc = 0.0;
            for (std::size_t j = 0; j < d; ++j) {
                const double diff = a[j] - b[j];
                acc += diff * diff;
            }
            return std::sqrt(acc);
        }
        case DistanceMetric::Manhattan: {
            double acc = 0.0;
            for (std::size_t j = 0; j < d; ++j) {
                acc += std::fabs(a[j] - b[j]);
            }
            return acc;
        }
        case DistanceMetric::Minkowski: {
            double acc = 0.0;
            for (std::size_t j = 0; j < d; ++j) {
                acc += std::pow(std::fabs(a[j] - b[j]), p);
            }
            return std::pow(acc, 1.0 / p);
        }
    }
    return 0.0;  // unreachable
}

/// Copy of work with every row multiplied elementwise by sqrt(weights).
FeatureMatrix apply_sqrt_weights(const FeatureMatrix& work, const WeightVector& w) {
    FeatureMatrix out = work;
    std::vector<double> root(w.weights.size());
    for (std::size_t j = 0; j < root.size(); ++j) {
        root[j] = std::sqrt(w.weights[j]);
    }
    for (std::size_t r = 0; r < out.n_rows; ++r) {
        for (std::size_t j = 0; j < out.n_cols; ++j) {
            out.at(r, j) = root[j] * out.at(r, j);
        }
    }
    return out;
}

}  // namespace

}  // namespace detail

FeatureMatrix apply_scaling(const FeatureMatrix& m, ScalingMethod method) {
    m.validate();
    FeatureMatrix out = m;
    for (std::size_t j = 0; j < m.n_cols; ++j) {
        std::vector<double> col = m.column(j);
        double offset = 0.0;
        double denom = 0.0;
        switch (method) {
            case ScalingMethod::Standard:
                offset = detail::sorted_mean(col);
                denom = std::sqrt(detail::sorted_population_variance(col));
                break;
            case ScalingMethod::MinMax: {
                const auto [lo, hi] = std::minmax_element(col.begin(), col.end());
                offset = *lo;
                denom = *hi - *lo;
                break;
            }
            case ScalingMethod::Robust: {
                const double q1 = linear_percentile(col, 25.0);
                const double q3 = linear_percentile(col, 75.0);
                offset = q1;
                denom = q3 - q1;
                break;
            }
        }
        for (std::size_t r = 0; r < m.n_rows; ++r) {
            // A degenerate column has no spread to normalize; define it as 0
            // rather than letting 0/0 poison the matrix.
            out.at(r, j) = denom == 0.0 ? 0.0 : (m.at(r, j) - offset) / denom;
        }
    }
    return out;
}

std::vector<double> select_transformation(const std::vector<double>& col) {
    const bool any_nonpositive = std::any_of(col.begin(), col.end(), [](double x) { return x <= 0.0; });
    std::vector<double> out(col.size());
    for (std::size_t i = 0; i < col.size(); ++i) {
        out[i] = any_nonpositive ? std::sqrt(std::fabs(col[i])) : std::log1p(col[i]);
    }
    return out;
}

FeatureMatrix precompute_interactions(const FeatureMatrix& m, bool use_nonlinear) {
    m.validate();
    const std::size_t d = m.n_cols;
    std::size_t count = d * (d - 1) / 2;
    if (use_nonlinear) {
        count *= 2;
    }
    FeatureMatrix out;
    out.n_rows = m.n_rows;
    out.n_cols = count;
    out.values.assign(m.n_rows * count, 0.0);
    out.column_names.reserve(count);

    std::vector<double> product(m.n_rows);
    std::size_t k = 0;
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = i + 1; j < d; ++j) {
            for (std::size_t r = 0; r < m.n_rows; ++r) {
                product[r] = m.at(r, i) * m.at(r, j);
                out.values[r * count + k] = product[r];
            }
            out.column_names.push_back("Interaction_" + std::to_string(i + 1) + "_" +
                                       std::to_string(j + 1) + "_linear");
            ++k;
            if (use_nonlinear) {
                const std::vector<double> transformed = select_transformation(product);
                for (std::size_t r = 0; r < m.n_rows; ++r) {
                    out.values[r * count + k] = transformed[r];
                }
                out.column_names.push_back("Interaction_" + std::to_string(i + 1) + "_" +
                                           std::to_string(j + 1) + "_nonlinear");
                ++k;
            }
        }
    }
    return out;
}

WeightVector compute_weights(const FeatureMatrix& work) {
    work.validate();
    WeightVector w;
    w.weights.resize(work.n_cols);
    for (std::size_t j = 0; j < work.n_cols; ++j) {
        w.weights[j] = detail::sorted_population_variance(work.column(j)) + 1e-8;
    }
    return w;
}

std::vector<double> row_distances(const FeatureMatrix& work, std::size_t row_index,
                                  const std::optional<WeightVector>& weights,
                                  DistanceMetric metric, double minkowski_p) {
    work.validate();
    if (row_index >= work.n_rows) {
        throw ArgumentError("row index " + std::to_string(row_index) +
                            " out of range for matrix with " + std::to_string(work.n_rows) +
                            " rows");
    }
    if (metric == DistanceMetric::Minkowski && !(minkowski_p > 0.0)) {
        throw ArgumentError("minkowski exponent must be positive");
    }
    if (weights) {
        if (weights->weights.size() != work.n_cols) {
            throw ArgumentError("weight vector length " + std::to_string(weights->weights.size()) +
                                " does not match column count " + std::to_string(work.n_cols));
        }
        const FeatureMatrix scaled = detail::apply_sqrt_weights(work, *weights);
        return row_distances(scaled, row_index, std::nullopt, metric, minkowski_p);
    }
    std::vector<double> out(work.n_rows);
    const auto ref = work.row(row_index);
    for (std::size_t k = 0; k < work.n_rows; ++k) {
        out[k] = k == row_index ? 0.0 : detail::distance_between(ref, work.row(k), metric, minkowski_p);
    }
    return out;
}

std::vector<double> compute_scores(const FeatureMatrix& work, const DetectorConfig& config) {
    work.validate();
    config.validate();
    const std::size_t n = work.n_rows;
    if (n < 2) {
        throw ArgumentError("anomaly scoring needs at least 2 rows; got " + std::to_string(n));
    }

    // Weights fold into the matrix once: every later distance sees the same
    // premultiplied values, so the weighted and unweighted paths share one
    // kernel bit for bit.
    FeatureMatrix scaled;
    const FeatureMatrix* mat = &work;
    if (config.use_weights) {
        scaled = detail::apply_sqrt_weights(work, compute_weights(work));
        mat = &scaled;
    }
    const DistanceMetric metric = config.distance_metric;
    const double p = config.minkowski_p;

    // The distance matrix is symmetric, so its column mean equals the mean of
    // the matching row. Two streaming passes (baseline, then deviations) keep
    // memory at O(n) per worker instead of materializing n^2 distances, and
    // the sorted reductions make every entry independent of chunking.
    std::vector<double> baseline(n);
    detail::parallel_chunks(n, config.worker_count, [&](std::size_t lo, std::size_t hi) {
        std::vector<double> dist(n);
        for (std::size_t k = lo; k < hi; ++k) {
            const auto ref = mat->row(k);
            for (std::size_t t = 0; t < n; ++t) {
                dist[t] = t == k ? 0.0 : detail::distance_between(ref, mat->row(t), metric, p);
            }
            baseline[k] = detail::sorted_sum(dist) / static_cast<double>(n);
        }
    });

    std::vector<double> scores(n);
    detail::parallel_chunks(n, config.worker_count, [&](std::size_t lo, std::size_t hi) {
        std::vector<double> dev(n);
        for (std::size_t i = lo; i < hi; ++i) {
            const auto ref = mat->row(i);
            for (std::size_t k = 0; k < n; ++k) {
                const double d = k == i ? 0.0 : detail::distance_between(ref, mat->row(k), metric, p);
                dev[k] = std::fabs(d - baseline[k]);
            }
            scores[i] = detail::sorted_sum(dev);
        }
    });
    return scores;
}

double linear_percentile(std::vector<double> values, double tau) {
    if (values.empty()) {
        throw Error("Scores array is empty.");
    }
    if (!(tau >= 0.0 && tau <= 100.0)) {
        throw ArgumentError("percentile must be between 0 and 100");
    }
    std::sort(values.begin(), values.end());
    const double pos = (tau / 100.0) * static_cast<double>(values.size() - 1);
    const std::size_t lo = static_cast<std::size_t>(std::floor(pos));
    const std::size_t hi = static_cast<std::size_t>(std::ceil(pos));
    const double frac = pos - std::floor(pos);
    return values[lo] + frac * (values[hi] - values[lo]);
}

double fixed_threshold(const std::vector<double>& scores, double tau) {
    if (!(tau >= 0.0 && tau <= 100.0)) {
        throw ArgumentError("Anomaly threshold must be between 0 and 100");
    }
    if (scores.empty()) {
        throw Error("Scores array is empty.");
    }
    std::vector<double> clean;
    clean.reserve(scores.size());
    for (double s : scores) {
        if (!std::isnan(s)) {
            clean.push_back(s);
        }
    }
    if (clean.empty()) {
        throw Error("Scores array contains only NaN values.");
    }
    return linear_percentile(std::move(clean), tau);
}

double statistical_threshold(const std::vector<double>& scores, double multiplier) {
    if (scores.empty()) {
        throw Error("Scores array is empty.");
    }
    const double mean = detail::sorted_mean(scores);
    if (scores.size() == 1) {
        return mean;  // sample deviation is undefined; treat sigma as 0
    }
    std::vector<double> sq(scores.size());
    for (std::size_t i = 0; i < scores.size(); ++i) {
        const double d = scores[i] - mean;
        sq[i] = d * d;
    }
    const double var = detail::sorted_sum(std::move(sq)) / static_cast<double>(scores.size() - 1);
    return mean + multiplier * std::sqrt(var);
}

double adaptive_quantile_threshold(const std::vector<double>& scores, std::size_t window_size,
                                   double quantile) {
    if (scores.empty()) {
        throw Error("Scores array is empty.");
    }
    if (window_size < 1) {
        throw ArgumentError("window_size must be at least 1");
    }
    if (!(quantile > 0.0 && quantile < 1.0)) {
        throw ArgumentError("quantile must lie strictly between 0 and 1");
    }
    std::vector<double> window;
    if (scores.size() <= window_size) {
        window = scores;
    } else {
        window.assign(scores.end() - static_cast<std::ptrdiff_t>(window_size), scores.end());
    }
    return linear_percentile(std::move(window), quantile * 100.0);
}

FeatureMatrix working_matrix(const FeatureMatrix& m, const DetectorConfig& config) {
    m.validate();
    config.validate();
    FeatureMatrix work = m;
    if (config.scaling_method) {
        work = apply_scaling(work, *config.scaling_method);
    }
    if (config.include_interactions) {
        work = append_columns(work, precompute_interactions(work, config.use_nonlinear));
    }
    return work;
}

DetectionResult detect(const FeatureMatrix& m, const DetectorConfig& config) {
    config.validate();
    m.validate();
    if (m.n_rows < 2) {
        throw ArgumentError("anomaly detection needs at least 2 rows; got " +
                            std::to_string(m.n_rows));
    }
    const FeatureMatrix work = working_matrix(m, config);

    DetectionResult result;
    result.scores = compute_scores(work, config);
    switch (config.threshold_method) {
        case ThresholdMethod::Fixed:
            result.threshold = fixed_threshold(result.scores, config.anomaly_threshold);
            break;
        case ThresholdMethod::Statistical:
            result.threshold = statistical_threshold(result.scores, config.multiplier);
            break;
        case ThresholdMethod::AdaptiveQuantile:
            result.threshold =
                adaptive_quantile_threshold(result.scores, config.window_size, config.quantile);
            break;
    }
    result.predictions.assign(m.n_rows, 1);
    for (std::size_t i = 0; i < m.n_rows; ++i) {
        if (result.scores[i] > result.threshold) {
            result.flagged.push_back(i);
            result.predictions[i] = -1;
        }
    }
    return result;
}

std::vector<Explanation> explain(const FeatureMatrix& original,
                                 const std::vector<std::size_t>& flagged) {
    original.validate();
    for (std::size_t idx : flagged) {
        if (idx >= original.n_rows) {
            throw ArgumentError("flagged row index " + std::to_string(idx) +
                                " out of range for matrix with " +
                                std::to_string(original.n_rows) + " rows");
        }
    }
    std::vector<double> baseline(original.n_cols);
    for (std::size_t j = 0; j < original.n_cols; ++j) {
        baseline[j] = detail::sorted_mean(original.column(j));
    }
    std::vector<Explanation> out;
    out.reserve(flagged.size());
    for (std::size_t idx : flagged) {
        Explanation e;
        e.row_index = idx;
        e.entries.reserve(original.n_cols);
        for (std::size_t j = 0; j < original.n_cols; ++j) {
            const double value = original.at(idx, j);
            e.entries.push_back({original.column_names[j], value, baseline[j],
                                 std::fabs(value - baseline[j])});
        }
        std::stable_sort(e.entries.begin(), e.entries.end(),
                         [](const ExplanationEntry& a, const ExplanationEntry& b) {
                             return a.contribution > b.contribution;
                         });
        out.push_back(std::move(e));
    }
    return out;
}

std::string format_explanation(const Explanation& e, ExplainabilityLevel level) {
    std::string out = "Row " + std::to_string(e.row_index) + ":\n";
    const std::size_t shown =
        level == ExplainabilityLevel::Basic ? std::min<std::size_t>(3, e.entries.size())
                                            : e.entries.size();
    char buf[160];
    for (std::size_t i = 0; i < shown; ++i) {
        const auto& entry = e.entries[i];
        std::snprintf(buf, sizeof(buf), "  - %s: %.2f (baseline: %.2f, contribution: %.2f)\n",
                      entry.feature_name.c_str(), entry.value, entry.baseline, entry.contribution);
        out += buf;
    }
    return out;
}

}  // namespace spinex
