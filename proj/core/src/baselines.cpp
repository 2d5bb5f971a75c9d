#include "spinex/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "spinex/error.hpp"

namespace spinex {

std::vector<double> knn_scores(const FeatureMatrix& m, std::size_t k) {
    m.validate();
    if (k < 1 || k >= m.n_rows) {
        throw ArgumentError("knn neighbor count must lie in [1, " +
                            std::to_string(m.n_rows - 1) + "]; got " + std::to_string(k));
    }
    std::vector<double> scores(m.n_rows);
    std::vector<std::pair<double, std::size_t>> neighbors(m.n_rows - 1);
    for (std::size_t i = 0; i < m.n_rows; ++i) {
        const auto a = m.row(i);
        std::size_t t = 0;
        for (std::size_t j = 0; j < m.n_rows; ++j) {
            if (j == i) {
                continue;
            }
            const auto b = m.row(j);
            double acc = 0.0;
            for (std::size_t c = 0; c < m.n_cols; ++c) {
                const double diff = a[c] - b[c];
                acc += diff * diff;
            }
            neighbors[t++] = {std::sqrt(acc), j};
        }
        // Pair ordering (distance, then row index) pins the k-subset when
        // distances tie.
        std::partial_sort(neighbors.begin(), neighbors.begin() + static_cast<std::ptrdiff_t>(k),
                          neighbors.end());
        double sum = 0.0;
        for (std::size_t c = 0; c < k; ++c) {
            sum += neighbors[c].first;
        }
        scores[i] = sum / static_cast<double>(k);
    }
    return scores;
}

std::size_t auto_bin_count(std::size_t n_rows) {
    const auto bins = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(n_rows))));
    return std::max<std::size_t>(1, bins);
}

std::vector<double> hbos_scores(const FeatureMatrix& m, std::size_t bin_count) {
    m.validate();
    if (bin_count < 1) {
        throw ArgumentError("hbos bin count must be at least 1");
    }
    std::vector<double> scores(m.n_rows, 0.0);
    std::vector<std::size_t> assignment(m.n_rows);
    std::vector<double> freq;
    for (std::size_t j = 0; j < m.n_cols; ++j) {
        const std::vector<double> col = m.column(j);
        const auto [lo_it, hi_it] = std::minmax_element(col.begin(), col.end());
        const double lo = *lo_it;
        const double hi = *hi_it;
        std::size_t bins = bin_count;
        if (hi == lo) {
            bins = 1;  // a constant feature is one full bin, height 1
        }
        const double width = (hi - lo) / static_cast<double>(bins);
        freq.assign(bins, 0.0);
        for (std::size_t r = 0; r < m.n_rows; ++r) {
            std::size_t idx = 0;
            if (bins > 1) {
                idx = std::min(bins - 1,
                               static_cast<std::size_t>(std::floor((col[r] - lo) / width)));
            }
            assignment[r] = idx;
            freq[idx] += 1.0;
        }
        const double max_freq = *std::max_element(freq.begin(), freq.end());
        for (std::size_t r = 0; r < m.n_rows; ++r) {
            const double height = freq[assignment[r]] / max_freq;
            scores[r] += std::log(1.0 / (height + 1e-12));
        }
    }
    return scores;
}

DetectionResult run_baseline(const FeatureMatrix& m, const BaselineSpec& spec, double tau) {
    m.validate();
    DetectionResult result;
    switch (spec.kind) {
        case BaselineKind::Knn:
            result.scores = knn_scores(m, spec.k);
            break;
        case BaselineKind::Hbos:
            result.scores = hbos_scores(m, spec.bin_count.value_or(auto_bin_count(m.n_rows)));
            break;
    }
    result.threshold = fixed_threshold(result.scores, tau);
    result.predictions.assign(m.n_rows, 1);
    for (std::size_t i = 0; i < m.n_rows; ++i) {
        if (result.scores[i] > result.threshold) {
            result.flagged.push_back(i);
            result.predictions[i] = -1;
        }
    }
    return result;
}

}  // namespace spinex
