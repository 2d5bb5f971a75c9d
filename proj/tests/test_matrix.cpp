#include <doctest.h>

#include <cmath>
#include <limits>

#include "spinex/error.hpp"
#include "spinex/matrix.hpp"

using spinex::FeatureMatrix;
using spinex::validate_matrix;

TEST_CASE("validate_matrix generates FeatureN names") {
    const FeatureMatrix m = validate_matrix({{1.0, 2.0, 3.0}, {4.0, 5.0, 6.0}});
    CHECK(m.n_rows == 2);
    CHECK(m.n_cols == 3);
    REQUIRE(m.column_names.size() == 3);
    CHECK(m.column_names[0] == "Feature1");
    CHECK(m.column_names[1] == "Feature2");
    CHECK(m.column_names[2] == "Feature3");
    CHECK(m.at(1, 2) == 6.0);
}

TEST_CASE("validate_matrix accepts the 1x1 case") {
    const FeatureMatrix m = validate_matrix({{0.0}});
    CHECK(m.n_rows == 1);
    CHECK(m.n_cols == 1);
    CHECK(m.column_names[0] == "Feature1");
}

TEST_CASE("validate_matrix adopts given names and checks the count") {
    const FeatureMatrix m = validate_matrix({{1.0, 2.0}}, {{"alpha", "beta"}});
    CHECK(m.column_names[0] == "alpha");
    CHECK(m.column_names[1] == "beta");
    CHECK_THROWS_AS(validate_matrix({{1.0, 2.0}}, {{"only_one"}}), spinex::ArgumentError);
}

TEST_CASE("validate_matrix rejects bad shapes and values") {
    CHECK_THROWS_AS(validate_matrix({}), spinex::ValidationError);
    CHECK_THROWS_AS(validate_matrix({{}}), spinex::ValidationError);
    CHECK_THROWS_AS(validate_matrix({{1.0, 2.0}, {3.0}}), spinex::ValidationError);

    const double nan = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_WITH_AS(validate_matrix({{1.0, 2.0}, {nan, 4.0}}),
                         doctest::Contains("row 1"), spinex::ValidationError);
    const double inf = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(validate_matrix({{inf}}), spinex::ValidationError);
}

TEST_CASE("duplicate column names are rejected") {
    CHECK_THROWS_AS(validate_matrix({{1.0, 2.0}}, {{"x", "x"}}), spinex::ValidationError);
}

TEST_CASE("row and column accessors slice correctly") {
    const FeatureMatrix m = validate_matrix({{1.0, 2.0}, {3.0, 4.0}, {5.0, 6.0}});
    const auto r1 = m.row(1);
    CHECK(r1[0] == 3.0);
    CHECK(r1[1] == 4.0);
    const auto c1 = m.column(1);
    REQUIRE(c1.size() == 3);
    CHECK(c1[0] == 2.0);
    CHECK(c1[2] == 6.0);
}

TEST_CASE("append_columns concatenates values and names") {
    const FeatureMatrix a = validate_matrix({{1.0}, {2.0}});
    FeatureMatrix b = validate_matrix({{10.0}, {20.0}}, {{"extra"}});
    const FeatureMatrix joined = spinex::append_columns(a, b);
    CHECK(joined.n_cols == 2);
    CHECK(joined.at(0, 0) == 1.0);
    CHECK(joined.at(0, 1) == 10.0);
    CHECK(joined.at(1, 1) == 20.0);
    CHECK(joined.column_names[1] == "extra");

    FeatureMatrix empty;
    empty.n_rows = 2;
    empty.n_cols = 0;
    const FeatureMatrix same = spinex::append_columns(a, empty);
    CHECK(same.n_cols == 1);
    CHECK(same.values == a.values);
}
