#include "spinex/bench.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <new>
#include <set>

#include "spinex/baselines.hpp"
#include "spinex/error.hpp"
#include "spinex/metrics.hpp"
#include "spinex/rng.hpp"

namespace spinex {

namespace {

std::string sanitize_status(std::string text) {
    for (char& c : text) {
        if (c == ',' || c == '\n' || c == '\r') {
            c = ';';
        }
    }
    return text;
}

DetectorConfig spinex_variant(const std::string& name) {
    DetectorConfig cfg;
    if (name == "spinex-weights") {
        cfg.use_weights = true;
    } else if (name == "spinex-interactions") {
        cfg.include_interactions = true;
    } else if (name == "spinex-nonlinear") {
        cfg.include_interactions = true;
        cfg.use_nonlinear = true;
    } else if (name == "spinex-statistical") {
        cfg.threshold_method = ThresholdMethod::Statistical;
    } else if (name == "spinex-adaptive") {
        cfg.threshold_method = ThresholdMethod::AdaptiveQuantile;
    }
    return cfg;
}

std::function<std::vector<double>(const FeatureMatrix&)> scoring_path(const std::string& name) {
    if (name == "knn") {
        return [](const FeatureMatrix& m) {
            return knn_scores(m, std::min<std::size_t>(5, m.n_rows - 1));
        };
    }
    if (name == "hbos") {
        return [](const FeatureMatrix& m) { return hbos_scores(m, auto_bin_count(m.n_rows)); };
    }
    const DetectorConfig cfg = spinex_variant(name);
    return [cfg](const FeatureMatrix& m) { return compute_scores(working_matrix(m, cfg), cfg); };
}

void require_known(const std::string& name) {
    const std::vector<std::string> known = known_algorithm_names();
    if (std::find(known.begin(), known.end(), name) == known.end()) {
        std::string list;
        for (const auto& k : known) {
            list += list.empty() ? k : ", " + k;
        }
        throw ArgumentError("unknown algorithm: " + name + ". Valid options are: " + list);
    }
}

/// Descending-is-better ranks with mean-of-ties; NaN ranks after every number.
std::vector<double> rank_descending(const std::vector<double>& values) {
    const std::size_t n = values.size();
    std::vector<double> ranks(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t better = 0;
        std::size_t ties = 0;
        if (std::isnan(values[i])) {
            for (std::size_t j = 0; j < n; ++j) {
                if (std::isnan(values[j])) {
                    ++ties;
                } else {
                    ++better;
                }
            }
        } else {
            for (std::size_t j = 0; j < n; ++j) {
                if (std::isnan(values[j])) {
                    continue;
                }
                if (values[j] > values[i]) {
                    ++better;
                } else if (values[j] == values[i]) {
                    ++ties;
                }
            }
        }
        ranks[i] = static_cast<double>(better) + (static_cast<double>(ties) + 1.0) / 2.0;
    }
    return ranks;
}

double mean_of(const std::vector<double>& v) {
    if (v.empty()) {
        return std::numeric_limits<double>::quiet_NaN();
    }
    double acc = 0.0;
    for (double x : v) {
        acc += x;
    }
    return acc / static_cast<double>(v.size());
}

}  // namespace

std::vector<std::string> known_algorithm_names() {
    return {"spinex",           "spinex-weights",     "spinex-interactions",
            "spinex-nonlinear", "spinex-statistical", "spinex-adaptive",
            "knn",              "hbos"};
}

std::vector<AlgorithmSpec> algorithm_registry(const std::vector<std::string>& names) {
    std::vector<AlgorithmSpec> out;
    out.reserve(names.size());
    for (const std::string& name : names) {
        require_known(name);
        AlgorithmSpec spec;
        spec.name = name;
        if (name == "knn") {
            spec.run = [](const FeatureMatrix& m) {
                BaselineSpec b;
                b.kind = BaselineKind::Knn;
                b.k = std::min<std::size_t>(5, m.n_rows - 1);
                return run_baseline(m, b);
            };
        } else if (name == "hbos") {
            spec.run = [](const FeatureMatrix& m) {
                BaselineSpec b;
                b.kind = BaselineKind::Hbos;
                return run_baseline(m, b);
            };
        } else {
            const DetectorConfig cfg = spinex_variant(name);
            spec.run = [cfg](const FeatureMatrix& m) { return detect(m, cfg); };
        }
        out.push_back(std::move(spec));
    }
    return out;
}

MetricTable run_benchmark(const std::vector<Dataset>& datasets,
                          const std::vector<AlgorithmSpec>& algorithms) {
    MetricTable table;
    table.cells.reserve(datasets.size() * algorithms.size());
    for (const AlgorithmSpec& alg : algorithms) {
        for (const Dataset& ds : datasets) {
            MetricCell cell;
            cell.algorithm = alg.name;
            cell.dataset = ds.name;
            cell.precision = cell.recall = cell.f1 = cell.auc =
                std::numeric_limits<double>::quiet_NaN();
            if (!ds.labels) {
                cell.status = "skipped: dataset has no labels";
                table.cells.push_back(std::move(cell));
                continue;
            }
            try {
                const DetectionResult res = alg.run(ds.matrix);
                const PrecisionRecallF1 prf =
                    precision_recall_f1(confusion(*ds.labels, res.predictions));
                cell.precision = prf.precision;
                cell.recall = prf.recall;
                cell.f1 = prf.f1;
                cell.status = "ok";
                try {
                    cell.auc = auc_roc(*ds.labels, res.scores);
                } catch (const Error& e) {
                    cell.status = sanitize_status(std::string("auc failed: ") + e.what());
                }
            } catch (const Error& e) {
                cell.status = sanitize_status(std::string("failed: ") + e.what());
            }
            table.cells.push_back(std::move(cell));
        }
    }
    return table;
}

std::vector<RankRow> rank_algorithms(const MetricTable& table, RankMode mode) {
    // Index cells by algorithm, keeping algorithms in sorted-name order so the
    // result is independent of the table's row order.
    std::map<std::string, std::map<std::string, const MetricCell*>> by_alg;
    for (const MetricCell& cell : table.cells) {
        by_alg[cell.algorithm][cell.dataset] = &cell;
    }
    const std::size_t n_algs = by_alg.size();
    if (n_algs < 2) {
        throw Error("rank aggregation needs at least 2 algorithms; got " +
                    std::to_string(n_algs));
    }
    std::set<std::string> shared;
    bool first = true;
    for (const auto& [alg, cells] : by_alg) {
        std::set<std::string> mine;
        for (const auto& [ds, cell] : cells) {
            mine.insert(ds);
        }
        if (first) {
            shared = std::move(mine);
            first = false;
        } else {
            std::set<std::string> kept;
            std::set_intersection(shared.begin(), shared.end(), mine.begin(), mine.end(),
                                  std::inserter(kept, kept.begin()));
            shared = std::move(kept);
        }
    }
    if (shared.empty()) {
        throw Error("rank aggregation needs at least one dataset shared by all algorithms");
    }

    std::vector<std::string> names;
    names.reserve(n_algs);
    for (const auto& [alg, cells] : by_alg) {
        names.push_back(alg);
    }

    constexpr std::size_t kMetrics = 4;
    const auto metric_of = [](const MetricCell& c, std::size_t m) {
        switch (m) {
            case 0: return c.precision;
            case 1: return c.recall;
            case 2: return c.f1;
            default: return c.auc;
        }
    };

    // Per-algorithm averages over the datasets where each metric succeeded.
    std::vector<std::array<double, kMetrics>> averages(n_algs);
    for (std::size_t a = 0; a < n_algs; ++a) {
        for (std::size_t m = 0; m < kMetrics; ++m) {
            std::vector<double> vals;
            for (const auto& [ds, cell] : by_alg[names[a]]) {
                const double v = metric_of(*cell, m);
                if (!std::isnan(v)) {
                    vals.push_back(v);
                }
            }
            averages[a][m] = mean_of(vals);
        }
    }

    std::vector<std::array<double, kMetrics>> ranks(n_algs);
    if (mode == RankMode::AverageThenRank) {
        for (std::size_t m = 0; m < kMetrics; ++m) {
            std::vector<double> col(n_algs);
            for (std::size_t a = 0; a < n_algs; ++a) {
                col[a] = averages[a][m];
            }
            const std::vector<double> r = rank_descending(col);
            for (std::size_t a = 0; a < n_algs; ++a) {
                ranks[a][m] = r[a];
            }
        }
    } else {
        // Rank within each dataset, then average each algorithm's ranks over
        // the datasets it appears on.
        std::set<std::string> all_datasets;
        for (const auto& [alg, cells] : by_alg) {
            for (const auto& [ds, cell] : cells) {
                all_datasets.insert(ds);
            }
        }
        std::vector<std::array<std::vector<double>, kMetrics>> collected(n_algs);
        for (const std::string& ds : all_datasets) {
            std::vector<std::size_t> present;
            for (std::size_t a = 0; a < n_algs; ++a) {
                if (by_alg[names[a]].count(ds)) {
                    present.push_back(a);
                }
            }
            for (std::size_t m = 0; m < kMetrics; ++m) {
                std::vector<double> col(present.size());
                for (std::size_t i = 0; i < present.size(); ++i) {
                    col[i] = metric_of(*by_alg[names[present[i]]][ds], m);
                }
                const std::vector<double> r = rank_descending(col);
                for (std::size_t i = 0; i < present.size(); ++i) {
                    collected[present[i]][m].push_back(r[i]);
                }
            }
        }
        for (std::size_t a = 0; a < n_algs; ++a) {
            for (std::size_t m = 0; m < kMetrics; ++m) {
                ranks[a][m] = mean_of(collected[a][m]);
            }
        }
    }

    std::vector<RankRow> rows(n_algs);
    for (std::size_t a = 0; a < n_algs; ++a) {
        RankRow& row = rows[a];
        row.algorithm = names[a];
        row.avg_precision = averages[a][0];
        row.avg_recall = averages[a][1];
        row.avg_f1 = averages[a][2];
        row.avg_auc = averages[a][3];
        row.rank_p = ranks[a][0];
        row.rank_r = ranks[a][1];
        row.rank_f1 = ranks[a][2];
        row.rank_auc = ranks[a][3];
        row.rank_sum = row.rank_p + row.rank_r + row.rank_f1 + row.rank_auc;
    }
    std::sort(rows.begin(), rows.end(), [](const RankRow& a, const RankRow& b) {
        if (a.rank_sum != b.rank_sum) {
            return a.rank_sum < b.rank_sum;
        }
        if (a.rank_p != b.rank_p) {
            return a.rank_p < b.rank_p;
        }
        return a.algorithm < b.algorithm;
    });
    for (std::size_t i = 0; i < rows.size(); ++i) {
        rows[i].overall = i + 1;
    }
    return rows;
}

TimingGrid measure_complexity(const std::vector<std::size_t>& grid_n,
                              const std::vector<std::size_t>& grid_d,
                              const std::string& algorithm, std::size_t repeats) {
    if (grid_n.empty() || grid_d.empty()) {
        throw ArgumentError("complexity grids must not be empty");
    }
    if (repeats < 1) {
        throw ArgumentError("repeats must be at least 1");
    }
    require_known(algorithm);
    const auto fn = scoring_path(algorithm);

    TimingGrid grid;
    for (const std::size_t n : grid_n) {
        for (const std::size_t d : grid_d) {
            TimingCell cell;
            cell.n = n;
            cell.d = d;
            try {
                SeededRng rng(static_cast<std::uint64_t>(n) * 1000003u + d);
                const FeatureMatrix m = random_normal_matrix(n, d, rng);
                std::vector<double> times(repeats);
                for (std::size_t r = 0; r < repeats; ++r) {
                    const auto start = std::chrono::steady_clock::now();
                    fn(m);
                    const auto stop = std::chrono::steady_clock::now();
                    times[r] = std::chrono::duration<double>(stop - start).count();
                }
                std::sort(times.begin(), times.end());
                const std::size_t mid = repeats / 2;
                cell.seconds = repeats % 2 == 1 ? times[mid] : (times[mid - 1] + times[mid]) / 2.0;
            } catch (const std::bad_alloc&) {
                cell.skipped = true;
            }
            grid.cells.push_back(cell);
        }
    }

    // Least squares on log t = alpha log n + beta log d + c over usable cells.
    std::set<std::size_t> distinct_n;
    std::set<std::size_t> distinct_d;
    std::vector<std::array<double, 3>> xs;
    std::vector<double> ys;
    for (const TimingCell& cell : grid.cells) {
        if (cell.skipped) {
            continue;
        }
        distinct_n.insert(cell.n);
        distinct_d.insert(cell.d);
        xs.push_back({std::log(static_cast<double>(cell.n)),
                      std::log(static_cast<double>(cell.d)), 1.0});
        ys.push_back(std::log(std::max(cell.seconds, 1e-12)));
    }
    if (distinct_n.size() < 2 || distinct_d.size() < 2 || xs.size() < 3) {
        return grid;  // underdetermined: exponents stay unset
    }

    double ata[3][3] = {};
    double atb[3] = {};
    for (std::size_t r = 0; r < xs.size(); ++r) {
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) {
                ata[i][j] += xs[r][i] * xs[r][j];
            }
            atb[i] += xs[r][i] * ys[r];
        }
    }
    // Gaussian elimination with partial pivoting on the 3x3 system.
    double aug[3][4];
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            aug[i][j] = ata[i][j];
        }
        aug[i][3] = atb[i];
    }
    for (int col = 0; col < 3; ++col) {
        int pivot = col;
        for (int r = col + 1; r < 3; ++r) {
            if (std::fabs(aug[r][col]) > std::fabs(aug[pivot][col])) {
                pivot = r;
            }
        }
        if (std::fabs(aug[pivot][col]) < 1e-12) {
            return grid;  // singular system: exponents stay unset
        }
        std::swap(aug[col], aug[pivot]);
        for (int r = 0; r < 3; ++r) {
            if (r == col) {
                continue;
            }
            const double f = aug[r][col] / aug[col][col];
            for (int j = col; j < 4; ++j) {
                aug[r][j] -= f * aug[col][j];
            }
        }
    }
    const double alpha = aug[0][3] / aug[0][0];
    const double beta = aug[1][3] / aug[1][1];
    const double intercept = aug[2][3] / aug[2][2];
    double sq = 0.0;
    for (std::size_t r = 0; r < xs.size(); ++r) {
        const double pred = alpha * xs[r][0] + beta * xs[r][1] + intercept;
        sq += (pred - ys[r]) * (pred - ys[r]);
    }
    grid.alpha = alpha;
    grid.beta = beta;
    grid.intercept = intercept;
    grid.residual_rms = std::sqrt(sq / static_cast<double>(xs.size()));
    return grid;
}

void write_metric_csv(const std::string& path, const MetricTable& table) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw ParseError("cannot open file for writing: " + path);
    }
    out << "algorithm,dataset,precision,recall,f1,auc,status\n";
    for (const MetricCell& cell : table.cells) {
        out << cell.algorithm << ',' << cell.dataset << ',' << format_double(cell.precision)
            << ',' << format_double(cell.recall) << ',' << format_double(cell.f1) << ','
            << format_double(cell.auc) << ',' << sanitize_status(cell.status) << '\n';
    }
    if (!out) {
        throw ParseError("failed writing file: " + path);
    }
}

MetricTable read_metric_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot open file: " + path);
    }
    MetricTable table;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (lineno == 1) {
            if (line != "algorithm,dataset,precision,recall,f1,auc,status") {
                throw ParseError(path + ": unexpected header: " + line);
            }
            continue;
        }
        if (line.empty()) {
            continue;
        }
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
        if (cells.size() != 7) {
            throw ParseError(path + ": line " + std::to_string(lineno) + " has " +
                             std::to_string(cells.size()) + " cells; expected 7");
        }
        MetricCell cell;
        cell.algorithm = cells[0];
        cell.dataset = cells[1];
        try {
            cell.precision = parse_double(cells[2]);
            cell.recall = parse_double(cells[3]);
            cell.f1 = parse_double(cells[4]);
            cell.auc = parse_double(cells[5]);
        } catch (const ParseError& e) {
            throw ParseError(path + ": line " + std::to_string(lineno) + ": " + e.what());
        }
        cell.status = cells[6];
        table.cells.push_back(std::move(cell));
    }
    return table;
}

void write_rank_csv(const std::string& path, const std::vector<RankRow>& rows) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw ParseError("cannot open file for writing: " + path);
    }
    out << "algorithm,avg_precision,avg_recall,avg_f1,avg_auc,"
           "rank_p,rank_r,rank_f1,rank_auc,rank_sum,overall\n";
    for (const RankRow& row : rows) {
        out << row.algorithm << ',' << format_double(row.avg_precision) << ','
            << format_double(row.avg_recall) << ',' << format_double(row.avg_f1) << ','
            << format_double(row.avg_auc) << ',' << format_double(row.rank_p) << ','
            << format_double(row.rank_r) << ',' << format_double(row.rank_f1) << ','
            << format_double(row.rank_auc) << ',' << format_double(row.rank_sum) << ','
            << row.overall << '\n';
    }
    if (!out) {
        throw ParseError("failed writing file: " + path);
    }
}

void write_timing_csv(const std::string& path, const TimingGrid& grid) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw ParseError("cannot open file for writing: " + path);
    }
    out << "n,d,seconds,status\n";
    for (const TimingCell& cell : grid.cells) {
        out << cell.n << ',' << cell.d << ','
            << (cell.skipped ? "nan" : format_double(cell.seconds)) << ','
            << (cell.skipped ? "skipped" : "ok") << '\n';
    }
    if (!out) {
        throw ParseError("failed writing file: " + path);
    }
}

}  // namespace spinex
