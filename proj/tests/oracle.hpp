// Test-only reference implementations, written independently of the library
// against the documented formulas: plain double loops, left-to-right sums, no
// shared helpers. Tests compare library output against these within stated
// tolerances.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

#include "spinex/config.hpp"
#include "spinex/matrix.hpp"

namespace oracle {

inline double naive_distance(const std::vector<double>& a, const std::vector<double>& b,
                             spinex::DistanceMetric metric, double p) {
    double acc = 0.0;
    switch (metric) {
        case spinex::DistanceMetric::Euclidean:
            for (std::size_t j = 0; j < a.size(); ++j) {
                acc += (a[j] - b[j]) * (a[j] - b[j]);
            }
            return std::sqrt(acc);
        case spinex::DistanceMetric::Manhattan:
            for (std::size_t j = 0; j < a.size(); ++j) {
                acc += std::fabs(a[j] - b[j]);
            }
            return acc;
        case spinex::DistanceMetric::Minkowski:
            for (std::size_t j = 0; j < a.size(); ++j) {
                acc += std::pow(std::fabs(a[j] - b[j]), p);
            }
            return std::pow(acc, 1.0 / p);
    }
    return 0.0;
}

/// Literal scoring pipeline: optional variance weights folded in by sqrt,
/// full n*n distance matrix D, baseline b[k] = mean_i D[i][k], and
/// score[i] = sum_k |D[i][k] - b[k]|.
inline std::vector<double> scores(const spinex::FeatureMatrix& work,
                                  const spinex::DetectorConfig& cfg) {
    const std::size_t n = work.n_rows;
    const std::size_t d = work.n_cols;
    std::vector<std::vector<double>> rows(n, std::vector<double>(d));
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t j = 0; j < d; ++j) {
            rows[r][j] = work.at(r, j);
        }
    }
    if (cfg.use_weights) {
        for (std::size_t j = 0; j < d; ++j) {
            double mean = 0.0;
            for (std::size_t r = 0; r < n; ++r) {
                mean += rows[r][j];
            }
            mean /= static_cast<double>(n);
            double var = 0.0;
            for (std::size_t r = 0; r < n; ++r) {
                var += (rows[r][j] - mean) * (rows[r][j] - mean);
            }
            var /= static_cast<double>(n);
            const double w = std::sqrt(var + 1e-8);
            for (std::size_t r = 0; r < n; ++r) {
                rows[r][j] *= w;
            }
        }
    }
    std::vector<std::vector<double>> D(n, std::vector<double>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            D[i][k] = i == k ? 0.0
                             : naive_distance(rows[i], rows[k], cfg.distance_metric,
                                              cfg.minkowski_p);
        }
    }
    std::vector<double> b(n, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            b[k] += D[i][k];
        }
        b[k] /= static_cast<double>(n);
    }
    std::vector<double> out(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            out[i] += std::fabs(D[i][k] - b[k]);
        }
    }
    return out;
}

/// Mann-Whitney pair counting: correctly ordered (positive above negative)
/// pairs score 1, ties 0.5, divided by the pair count.
inline double auc(const std::vector<int>& labels, const std::vector<double>& s) {
    double won = 0.0;
    std::size_t pairs = 0;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i] != 1) {
            continue;
        }
        for (std::size_t j = 0; j < labels.size(); ++j) {
            if (labels[j] != 0) {
                continue;
            }
            ++pairs;
            if (s[i] > s[j]) {
                won += 1.0;
            } else if (s[i] == s[j]) {
                won += 0.5;
            }
        }
    }
    return won / static_cast<double>(pairs);
}

/// Full-sort average-of-k-nearest with the same (distance, index) tie rule.
inline std::vector<double> knn(const spinex::FeatureMatrix& m, std::size_t k) {
    std::vector<double> out(m.n_rows);
    for (std::size_t i = 0; i < m.n_rows; ++i) {
        std::vector<std::pair<double, std::size_t>> dists;
        for (std::size_t j = 0; j < m.n_rows; ++j) {
            if (j == i) {
                continue;
            }
            double acc = 0.0;
            for (std::size_t c = 0; c < m.n_cols; ++c) {
                acc += (m.at(i, c) - m.at(j, c)) * (m.at(i, c) - m.at(j, c));
            }
            dists.emplace_back(std::sqrt(acc), j);
        }
        std::sort(dists.begin(), dists.end());
        double sum = 0.0;
        for (std::size_t c = 0; c < k; ++c) {
            sum += dists[c].first;
        }
        out[i] = sum / static_cast<double>(k);
    }
    return out;
}

/// Literal histogram score: explicit bin edges, explicit assignment, explicit
/// normalized heights, summed log-inverse heights.
inline std::vector<double> hbos(const spinex::FeatureMatrix& m, std::size_t bins) {
    std::vector<double> out(m.n_rows, 0.0);
    for (std::size_t f = 0; f < m.n_cols; ++f) {
        double lo = m.at(0, f);
        double hi = m.at(0, f);
        for (std::size_t r = 1; r < m.n_rows; ++r) {
            lo = std::min(lo, m.at(r, f));
            hi = std::max(hi, m.at(r, f));
        }
        std::size_t nb = hi == lo ? 1 : bins;
        std::vector<double> freq(nb, 0.0);
        std::vector<std::size_t> where(m.n_rows, 0);
        for (std::size_t r = 0; r < m.n_rows; ++r) {
            std::size_t idx = 0;
            if (nb > 1) {
                idx = static_cast<std::size_t>((m.at(r, f) - lo) / ((hi - lo) / static_cast<double>(nb)));
                if (idx >= nb) {
                    idx = nb - 1;
                }
            }
            where[r] = idx;
            freq[idx] += 1.0;
        }
        double peak = freq[0];
        for (double x : freq) {
            peak = std::max(peak, x);
        }
        for (std::size_t r = 0; r < m.n_rows; ++r) {
            out[r] += std::log(1.0 / (freq[where[r]] / peak + 1e-12));
        }
    }
    return out;
}

/// Eigenvalues of a symmetric matrix by the cyclic Jacobi method, descending.
inline std::vector<double> jacobi_eigenvalues(std::vector<double> a, std::size_t d) {
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (std::size_t i = 0; i < d; ++i) {
            for (std::size_t j = i + 1; j < d; ++j) {
                off += a[i * d + j] * a[i * d + j];
            }
        }
        if (off < 1e-24) {
            break;
        }
        for (std::size_t p = 0; p < d; ++p) {
            for (std::size_t q = p + 1; q < d; ++q) {
                if (std::fabs(a[p * d + q]) < 1e-30) {
                    continue;
                }
                const double theta = (a[q * d + q] - a[p * d + p]) / (2.0 * a[p * d + q]);
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < d; ++k) {
                    const double akp = a[k * d + p];
                    const double akq = a[k * d + q];
                    a[k * d + p] = c * akp - s * akq;
                    a[k * d + q] = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < d; ++k) {
                    const double apk = a[p * d + k];
                    const double aqk = a[q * d + k];
                    a[p * d + k] = c * apk - s * aqk;
                    a[q * d + k] = s * apk + c * aqk;
                }
            }
        }
    }
    std::vector<double> eig(d);
    for (std::size_t i = 0; i < d; ++i) {
        eig[i] = a[i * d + i];
    }
    std::sort(eig.begin(), eig.end(), std::greater<>());
    return eig;
}

}  // namespace oracle
