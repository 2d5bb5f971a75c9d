#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace spinex {

/// Dense row-major table of finite reals with named columns. This is the
/// universal data carrier: detector input, synthetic datasets, CSV payloads.
struct FeatureMatrix {
    std::size_t n_rows = 0;
    std::size_t n_cols = 0;
    std::vector<double> values;             // row-major, n_rows * n_cols
    std::vector<std::string> column_names;  // n_cols unique entries

    double at(std::size_t row, std::size_t col) const { return values[row * n_cols + col]; }
    double& at(std::size_t row, std::size_t col) { return values[row * n_cols + col]; }

    std::span<const double> row(std::size_t i) const {
        return {values.data() + i * n_cols, n_cols};
    }

    std::vector<double> column(std::size_t j) const;

    /// Checks the type invariants: consistent shape, at least one row and
    /// column, unique column names, every value finite. Throws ValidationError.
    void validate() const;
};

/// "Feature1".."FeatureN".
std::vector<std::string> default_column_names(std::size_t n_cols);

/// Builds a validated matrix from a nested row table. Names are adopted when
/// given (length must match) and generated otherwise.
FeatureMatrix validate_matrix(const std::vector<std::vector<double>>& raw,
                              const std::optional<std::vector<std::string>>& names = std::nullopt);

/// Copy of m with the columns of extra appended on the right. Row counts must
/// match; extra may have zero columns.
FeatureMatrix append_columns(const FeatureMatrix& m, const FeatureMatrix& extra);

}  // namespace spinex
