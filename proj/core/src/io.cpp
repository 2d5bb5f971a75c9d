#include "spinex/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "spinex/error.hpp"

namespace spinex {

namespace {

std::vector<std::string> read_lines(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot open file: " + path);
    }
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        lines.push_back(line);
    }
    return lines;
}

std::vector<std::string> split_cells(const std::string& line) {
    std::vector<std::string> cells;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find(',', start);
        if (pos == std::string::npos) {
            cells.push_back(line.substr(start));
            break;
        }
        cells.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
    return cells;
}

std::string file_stem(const std::string& path) {
    const std::size_t slash = path.find_last_of("/\\");
    std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
    const std::size_t dot = base.find_last_of('.');
    return dot == std::string::npos || dot == 0 ? base : base.substr(0, dot);
}

void require_open(const std::ofstream& out, const std::string& path) {
    if (!out) {
        throw ParseError("cannot open file for writing: " + path);
    }
}

}  // namespace

std::string format_double(double x) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

double parse_double(const std::string& cell) {
    double value = 0.0;
    const char* begin = cell.data();
    const char* end = begin + cell.size();
    const auto res = std::from_chars(begin, end, value);
    if (res.ec != std::errc{} || res.ptr != end || cell.empty()) {
        throw ParseError("not a number: '" + cell + "'");
    }
    return value;
}

Dataset load_csv_dataset(const std::string& path, const std::optional<std::string>& label_column) {
    const std::vector<std::string> lines = read_lines(path);
    if (lines.empty()) {
        throw ParseError(path + ": file is empty; expected a header row");
    }
    const std::vector<std::string> header = split_cells(lines[0]);

    std::optional<std::size_t> label_idx;
    const std::string label_name = label_column.value_or("label");
    for (std::size_t j = 0; j < header.size(); ++j) {
        if (header[j] == label_name) {
            label_idx = j;
            break;
        }
    }
    if (label_column && !label_idx) {
        throw ParseError(path + ": label column '" + *label_column + "' not found");
    }
    const std::size_t n_features = header.size() - (label_idx ? 1 : 0);
    if (n_features == 0) {
        throw ParseError(path + ": no feature columns besides the label");
    }

    Dataset out;
    out.name = file_stem(path);
    out.matrix.n_cols = n_features;
    for (std::size_t j = 0; j < header.size(); ++j) {
        if (!label_idx || j != *label_idx) {
            out.matrix.column_names.push_back(header[j]);
        }
    }
    if (label_idx) {
        out.labels.emplace();
    }

    for (std::size_t li = 1; li < lines.size(); ++li) {
        if (lines[li].empty() && li + 1 == lines.size()) {
            break;  // tolerate one trailing newline
        }
        const std::vector<std::string> cells = split_cells(lines[li]);
        if (cells.size() != header.size()) {
            throw ParseError(path + ": line " + std::to_string(li + 1) + " has " +
                             std::to_string(cells.size()) + " cells; expected " +
                             std::to_string(header.size()));
        }
        for (std::size_t j = 0; j < cells.size(); ++j) {
            double value = 0.0;
            try {
                value = parse_double(cells[j]);
            } catch (const ParseError& e) {
                throw ParseError(path + ": line " + std::to_string(li + 1) + ", column '" +
                                 header[j] + "': " + e.what());
            }
            if (label_idx && j == *label_idx) {
                if (value != 0.0 && value != 1.0) {
                    throw ParseError(path + ": line " + std::to_string(li + 1) +
                                     ": label must be 0 or 1, got '" + cells[j] + "'");
                }
                out.labels->push_back(static_cast<int>(value));
            } else {
                out.matrix.values.push_back(value);
            }
        }
        out.matrix.n_rows += 1;
    }
    out.matrix.validate();
    return out;
}

void write_csv_dataset(const std::string& path, const FeatureMatrix& m,
                       const std::optional<std::vector<int>>& labels) {
    m.validate();
    if (labels && labels->size() != m.n_rows) {
        throw ArgumentError("label count " + std::to_string(labels->size()) +
                            " does not match row count " + std::to_string(m.n_rows));
    }
    std::ofstream out(path, std::ios::binary);
    require_open(out, path);
    for (std::size_t j = 0; j < m.n_cols; ++j) {
        out << (j ? "," : "") << m.column_names[j];
    }
    if (labels) {
        out << ",label";
    }
    out << '\n';
    for (std::size_t r = 0; r < m.n_rows; ++r) {
        for (std::size_t j = 0; j < m.n_cols; ++j) {
            out << (j ? "," : "") << format_double(m.at(r, j));
        }
        if (labels) {
            out << ',' << (*labels)[r];
        }
        out << '\n';
    }
    if (!out) {
        throw ParseError("failed writing file: " + path);
    }
}

void write_detection_report(const std::string& path, const FeatureMatrix& features,
                            const DetectorConfig& config, const DetectionResult& result,
                            const std::optional<std::vector<int>>& labels) {
    nlohmann::ordered_json cfg;
    cfg["use_weights"] = config.use_weights;
    cfg["include_interactions"] = config.include_interactions;
    cfg["use_nonlinear"] = config.use_nonlinear;
    cfg["distance_metric"] = to_string(config.distance_metric);
    if (config.distance_metric == DistanceMetric::Minkowski) {
        cfg["minkowski_p"] = config.minkowski_p;
    }
    if (config.scaling_method) {
        cfg["scaling_method"] = to_string(*config.scaling_method);
    } else {
        cfg["scaling_method"] = nullptr;
    }
    cfg["anomaly_threshold"] = config.anomaly_threshold;
    cfg["threshold_method"] = to_string(config.threshold_method);
    cfg["multiplier"] = config.multiplier;
    cfg["window_size"] = config.window_size;
    cfg["quantile"] = config.quantile;
    cfg["explainability_level"] = to_string(config.explainability_level);

    nlohmann::ordered_json report;
    report["config"] = std::move(cfg);
    report["threshold"] = result.threshold;
    report["scores"] = result.scores;
    report["flagged"] = result.flagged;
    report["explanations"] = nlohmann::ordered_json::array();
    for (const Explanation& e : explain(features, result.flagged)) {
        nlohmann::ordered_json entry;
        entry["row"] = e.row_index;
        entry["entries"] = nlohmann::ordered_json::array();
        for (const ExplanationEntry& item : e.entries) {
            entry["entries"].push_back({{"feature", item.feature_name},
                                        {"value", item.value},
                                        {"baseline", item.baseline},
                                        {"contribution", item.contribution}});
        }
        report["explanations"].push_back(std::move(entry));
    }
    if (labels) {
        report["labels"] = *labels;
    }

    std::ofstream out(path, std::ios::binary);
    require_open(out, path);
    out << report.dump(2) << '\n';
    if (!out) {
        throw ParseError("failed writing file: " + path);
    }
}

ReportSummary read_detection_report(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot open file: " + path);
    }
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path + ": invalid report JSON: " + e.what());
    }
    ReportSummary s;
    try {
        s.threshold = doc.at("threshold").get<double>();
        s.scores = doc.at("scores").get<std::vector<double>>();
        s.flagged = doc.at("flagged").get<std::vector<std::size_t>>();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path + ": report is missing required fields: " + e.what());
    }
    return s;
}

void write_pca_csv(const std::string& path, const std::vector<double>& pc1,
                   const std::vector<double>& pc2, const std::vector<int>& labels,
                   const std::vector<std::size_t>& flagged) {
    if (pc1.size() != pc2.size()) {
        throw ArgumentError("pc1 and pc2 differ in length");
    }
    if (!labels.empty() && labels.size() != pc1.size()) {
        throw ArgumentError("label count does not match projected row count");
    }
    std::vector<char> is_flagged(pc1.size(), 0);
    for (std::size_t idx : flagged) {
        if (idx >= pc1.size()) {
            throw ArgumentError("flagged index " + std::to_string(idx) + " out of range");
        }
        is_flagged[idx] = 1;
    }
    std::ofstream out(path, std::ios::binary);
    require_open(out, path);
    out << "pc1,pc2,label,flagged\n";
    for (std::size_t r = 0; r < pc1.size(); ++r) {
        out << format_double(pc1[r]) << ',' << format_double(pc2[r]) << ','
            << (labels.empty() ? 0 : labels[r]) << ',' << static_cast<int>(is_flagged[r]) << '\n';
    }
    if (!out) {
        throw ParseError("failed writing file: " + path);
    }
}

}  // namespace spinex
