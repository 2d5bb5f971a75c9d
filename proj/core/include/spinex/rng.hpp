#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "spinex/matrix.hpp"

namespace spinex {

/// Seeded source of reproducible randomness. The generator is mt19937_64
/// (bit-specified by the standard) and normal variates come from the
/// Box-Muller transform, so a seed pins the whole stream:
///   u in [0,1):   (next_u64() >> 11) * 2^-53
///   z0, z1:       r = sqrt(-2 ln u1), z0 = r cos(2 pi u2), z1 = r sin(2 pi u2)
/// with u1 drawn from (0,1] and the second variate cached across calls.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    /// Uniform in [0, 1).
    double next_unit() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    /// Standard normal variate.
    double next_normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        const double u1 = static_cast<double>((gen_() >> 11) + 1) * 0x1.0p-53;  // (0,1]
        const double u2 = static_cast<double>(gen_() >> 11) * 0x1.0p-53;        // [0,1)
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 2.0 * 3.14159265358979323846 * u2;
        spare_ = r * std::sin(theta);
        has_spare_ = true;
        return r * std::cos(theta);
    }

    /// Uniform index in [0, bound). bound must be positive.
    std::size_t next_index(std::size_t bound) {
        return static_cast<std::size_t>(gen_() % bound);
    }

private:
    std::mt19937_64 gen_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

/// Fisher-Yates permutation of 0..n-1 driven by rng.
inline std::vector<std::size_t> random_permutation(std::size_t n, SeededRng& rng) {
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) {
        perm[i] = i;
    }
    for (std::size_t i = n; i > 1; --i) {
        const std::size_t j = rng.next_index(i);
        std::swap(perm[i - 1], perm[j]);
    }
    return perm;
}

/// n x d matrix of standard normal entries with generated column names.
inline FeatureMatrix random_normal_matrix(std::size_t n_rows, std::size_t n_cols, SeededRng& rng) {
    FeatureMatrix m;
    m.n_rows = n_rows;
    m.n_cols = n_cols;
    m.values.resize(n_rows * n_cols);
    for (auto& v : m.values) {
        v = rng.next_normal();
    }
    m.column_names = default_column_names(n_cols);
    return m;
}

}  // namespace spinex
