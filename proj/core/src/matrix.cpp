#include "spinex/matrix.hpp"

#include <cmath>
#include <unordered_set>

#include "spinex/error.hpp"

namespace spinex {

std::vector<double> FeatureMatrix::column(std::size_t j) const {
    std::vector<double> out(n_rows);
    for (std::size_t i = 0; i < n_rows; ++i) {
        out[i] = at(i, j);
    }
    return out;
}

void FeatureMatrix::validate() const {
    if (n_rows < 1 || n_cols < 1) {
        throw ValidationError("matrix must have at least one row and one column");
    }
    if (values.size() != n_rows * n_cols) {
        throw ValidationError("matrix value buffer does not match its declared shape");
    }
    if (column_names.size() != n_cols) {
        throw ValidationError("expected " + std::to_string(n_cols) + " column names, got " +
                              std::to_string(column_names.size()));
    }
    std::unordered_set<std::string> seen;
    for (const auto& name : column_names) {
        if (!seen.insert(name).second) {
            throw ValidationError("duplicate column name: " + name);
        }
    }
    for (std::size_t i = 0; i < n_rows; ++i) {
        for (std::size_t j = 0; j < n_cols; ++j) {
            if (!std::isfinite(at(i, j))) {
                throw ValidationError("non-finite value at row " + std::to_string(i) +
                                      ", column " + std::to_string(j));
            }
        }
    }
}

std::vector<std::string> default_column_names(std::size_t n_cols) {
    std::vector<std::string> names;
    names.reserve(n_cols);
    for (std::size_t j = 0; j < n_cols; ++j) {
        names.push_back("Feature" + std::to_string(j + 1));
    }
    return names;
}

FeatureMatrix validate_matrix(const std::vector<std::vector<double>>& raw,
                              const std::optional<std::vector<std::string>>& names) {
    if (raw.empty() || raw.front().empty()) {
        throw ValidationError("matrix must have at least one row and one column");
    }
    const std::size_t n_cols = raw.front().size();
    for (std::size_t i = 0; i < raw.size(); ++i) {
        if (raw[i].size() != n_cols) {
            throw ValidationError("non-rectangular input: row " + std::to_string(i) + " has " +
                                  std::to_string(raw[i].size()) + " values, expected " +
                                  std::to_string(n_cols));
        }
    }

    FeatureMatrix m;
    m.n_rows = raw.size();
    m.n_cols = n_cols;
    m.values.reserve(m.n_rows * n_cols);
    for (const auto& row : raw) {
        m.values.insert(m.values.end(), row.begin(), row.end());
    }
    if (names) {
        if (names->size() != n_cols) {
            throw ArgumentError("expected " + std::to_string(n_cols) + " column names, got " +
                                std::to_string(names->size()));
        }
        m.column_names = *names;
    } else {
        m.column_names = default_column_names(n_cols);
    }
    m.validate();
    return m;
}

FeatureMatrix append_columns(const FeatureMatrix& m, const FeatureMatrix& extra) {
    if (extra.n_cols == 0) {
        return m;
    }
    if (extra.n_rows != m.n_rows) {
        throw ArgumentError("cannot append columns: row counts differ");
    }
    FeatureMatrix out;
    out.n_rows = m.n_rows;
    out.n_cols = m.n_cols + extra.n_cols;
    out.values.reserve(out.n_rows * out.n_cols);
    for (std::size_t i = 0; i < m.n_rows; ++i) {
        auto base = m.row(i);
        auto more = extra.row(i);
        out.values.insert(out.values.end(), base.begin(), base.end());
        out.values.insert(out.values.end(), more.begin(), more.end());
    }
    out.column_names = m.column_names;
    out.column_names.insert(out.column_names.end(), extra.column_names.begin(),
                            extra.column_names.end());
    return out;
}

}  // namespace spinex
