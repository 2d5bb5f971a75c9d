#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "spinex/error.hpp"
#include "spinex/synthgen.hpp"

using spinex::LabeledDataset;
using spinex::ScenarioSpec;

TEST_CASE("the scenario catalog holds 21 entries with ascending seeds") {
    const auto& catalog = spinex::scenario_catalog();
    REQUIRE(catalog.size() == 21);
    for (std::size_t i = 0; i < catalog.size(); ++i) {
        CHECK(catalog[i].seed == i);
        CHECK(catalog[i].size >= 2);
        CHECK(catalog[i].num_features >= 1);
    }

    const ScenarioSpec& first = catalog[0];
    CHECK(first.mean_shift == 4.0);
    CHECK(first.cov_scale == 1.2);
    CHECK(first.outlier_fraction == 0.03);
    CHECK(first.num_features == 3);
    CHECK(first.complexity_level == 0);
    CHECK(first.size == 100);

    const ScenarioSpec& sixteenth = catalog[15];
    CHECK(sixteenth.outlier_fraction == 0.22);
    CHECK(sixteenth.size == 5040);
}

TEST_CASE("planted outlier counts use ceil with a rounding guard") {
    CHECK(spinex::planted_outlier_count(0.03, 100) == 3);
    CHECK(spinex::planted_outlier_count(0.12, 8000) == 960);
    CHECK(spinex::planted_outlier_count(0.19, 320) == 61);
    CHECK(spinex::planted_outlier_count(0.22, 5040) == 1109);
    CHECK(spinex::planted_outlier_count(0.02, 250) == 5);
    CHECK(spinex::planted_outlier_count(0.0, 1000) == 0);
    CHECK(spinex::planted_outlier_count(0.001, 100) == 1);  // 0.1 rounds up
}

TEST_CASE("the label budget matches the planted count for every catalog row") {
    for (const ScenarioSpec& spec : spinex::scenario_catalog()) {
        if (spec.size > 2000) {
            continue;  // keep the unit suite fast; big rows are covered by the count checks
        }
        const LabeledDataset data = spinex::generate_scenario(spec);
        const std::size_t planted =
            spinex::planted_outlier_count(spec.outlier_fraction, spec.size);
        const auto ones =
            static_cast<std::size_t>(std::count(data.labels.begin(), data.labels.end(), 1));
        CHECK(ones == planted);
        CHECK(data.labels.size() == spec.size);
        CHECK(data.matrix.n_rows == spec.size);
    }
}

TEST_CASE("generation is a pure function of the scenario parameters") {
    const ScenarioSpec spec = spinex::scenario_catalog()[2];
    const LabeledDataset a = spinex::generate_scenario(spec);
    const LabeledDataset b = spinex::generate_scenario(spec);
    CHECK(a.matrix.values == b.matrix.values);  // bitwise reproducibility
    CHECK(a.labels == b.labels);

    ScenarioSpec reseeded = spec;
    reseeded.seed = spec.seed + 1;
    const LabeledDataset c = spinex::generate_scenario(reseeded);
    CHECK(a.matrix.values != c.matrix.values);
}

TEST_CASE("complexity levels add the documented columns and names") {
    ScenarioSpec spec;
    spec.mean_shift = 4.0;
    spec.cov_scale = 1.0;
    spec.outlier_fraction = 0.1;
    spec.num_features = 3;
    spec.size = 20;
    spec.seed = 9;

    spec.complexity_level = 0;
    CHECK(spinex::generate_scenario(spec).matrix.n_cols == 3);

    spec.complexity_level = 1;
    const LabeledDataset lvl1 = spinex::generate_scenario(spec);
    REQUIRE(lvl1.matrix.n_cols == 4);
    CHECK(lvl1.matrix.column_names[3] == "Feature4");

    spec.complexity_level = 2;
    const LabeledDataset lvl2 = spinex::generate_scenario(spec);
    REQUIRE(lvl2.matrix.n_cols == 10);  // 3d + 1 for d = 3
    for (std::size_t c = 0; c < 10; ++c) {
        CHECK(lvl2.matrix.column_names[c] == "Feature" + std::to_string(c + 1));
    }
}

TEST_CASE("augmentation appends product, squares, then sines") {
    const spinex::FeatureMatrix base = spinex::validate_matrix({{1.0, 2.0, 3.0}});
    const spinex::FeatureMatrix lvl1 = spinex::augment_complexity(base, 1);
    REQUIRE(lvl1.n_cols == 4);
    CHECK(lvl1.at(0, 3) == 2.0);  // f1 * f2

    const spinex::FeatureMatrix lvl2 = spinex::augment_complexity(base, 2);
    REQUIRE(lvl2.n_cols == 10);
    CHECK(lvl2.at(0, 3) == 2.0);
    CHECK(lvl2.at(0, 4) == 1.0);  // squares of each base feature
    CHECK(lvl2.at(0, 5) == 4.0);
    CHECK(lvl2.at(0, 6) == 9.0);
    CHECK(lvl2.at(0, 7) == doctest::Approx(std::sin(1.0)).epsilon(1e-15));
    CHECK(lvl2.at(0, 8) == doctest::Approx(std::sin(2.0)).epsilon(1e-15));
    CHECK(lvl2.at(0, 9) == doctest::Approx(std::sin(3.0)).epsilon(1e-15));

    const spinex::FeatureMatrix narrow = spinex::validate_matrix({{1.0}});
    CHECK_THROWS_AS(spinex::augment_complexity(narrow, 1), spinex::ArgumentError);
    CHECK(spinex::augment_complexity(narrow, 0).n_cols == 1);
}

TEST_CASE("spec validation rejects out-of-range parameters") {
    ScenarioSpec spec;
    spec.mean_shift = 1.0;
    spec.cov_scale = 1.0;
    spec.outlier_fraction = 0.1;
    spec.num_features = 2;
    spec.complexity_level = 0;
    spec.size = 10;
    spec.seed = 0;
    CHECK_NOTHROW(spec.validate());

    ScenarioSpec bad = spec;
    bad.outlier_fraction = -0.1;
    CHECK_THROWS_AS(bad.validate(), spinex::ArgumentError);
    bad = spec;
    bad.outlier_fraction = 1.5;
    CHECK_THROWS_AS(bad.validate(), spinex::ArgumentError);
    bad = spec;
    bad.cov_scale = 0.0;
    CHECK_THROWS_AS(bad.validate(), spinex::ArgumentError);
    bad = spec;
    bad.size = 1;
    CHECK_THROWS_AS(bad.validate(), spinex::ArgumentError);
    bad = spec;
    bad.num_features = 0;
    CHECK_THROWS_AS(bad.validate(), spinex::ArgumentError);
    bad = spec;
    bad.complexity_level = 3;
    CHECK_THROWS_AS(bad.validate(), spinex::ArgumentError);
    bad = spec;
    bad.num_features = 1;
    bad.complexity_level = 1;
    CHECK_THROWS_AS(spinex::generate_scenario(bad), spinex::ArgumentError);
}

TEST_CASE("a zero outlier fraction produces only normal labels") {
    ScenarioSpec spec;
    spec.mean_shift = 3.0;
    spec.cov_scale = 2.0;
    spec.outlier_fraction = 0.0;
    spec.num_features = 4;
    spec.complexity_level = 0;
    spec.size = 50;
    spec.seed = 11;
    const LabeledDataset data = spinex::generate_scenario(spec);
    CHECK(std::count(data.labels.begin(), data.labels.end(), 0) == 50);
}

TEST_CASE("normal rows are centered with the requested spread") {
    ScenarioSpec spec;
    spec.mean_shift = 9.0;
    spec.cov_scale = 4.0;
    spec.outlier_fraction = 0.0;
    spec.num_features = 2;
    spec.complexity_level = 0;
    spec.size = 2000;
    spec.seed = 123;
    const LabeledDataset data = spinex::generate_scenario(spec);

    const std::size_t total = data.matrix.values.size();
    const double mean =
        std::accumulate(data.matrix.values.begin(), data.matrix.values.end(), 0.0) /
        static_cast<double>(total);
    double var = 0.0;
    for (double v : data.matrix.values) {
        var += (v - mean) * (v - mean);
    }
    var /= static_cast<double>(total - 1);

    const double sigma = std::sqrt(spec.cov_scale);
    CHECK(std::abs(mean) < 0.15 * sigma);
    CHECK(var == doctest::Approx(spec.cov_scale).epsilon(0.15));
}

TEST_CASE("outlier rows sit near the shifted mean") {
    ScenarioSpec spec;
    spec.mean_shift = 50.0;
    spec.cov_scale = 1.0;
    spec.outlier_fraction = 0.2;
    spec.num_features = 3;
    spec.complexity_level = 0;
    spec.size = 1000;
    spec.seed = 7;
    const LabeledDataset data = spinex::generate_scenario(spec);

    double outlier_mean = 0.0;
    double normal_mean = 0.0;
    std::size_t outliers = 0;
    std::size_t normals = 0;
    for (std::size_t r = 0; r < data.matrix.n_rows; ++r) {
        const double row_mean =
            (data.matrix.at(r, 0) + data.matrix.at(r, 1) + data.matrix.at(r, 2)) / 3.0;
        if (data.labels[r] == 1) {
            outlier_mean += row_mean;
            ++outliers;
        } else {
            normal_mean += row_mean;
            ++normals;
        }
    }
    outlier_mean /= static_cast<double>(outliers);
    normal_mean /= static_cast<double>(normals);
    CHECK(outliers == spinex::planted_outlier_count(0.2, 1000));
    CHECK(outlier_mean == doctest::Approx(50.0).epsilon(0.02));
    CHECK(std::abs(normal_mean) < 1.0);
}
