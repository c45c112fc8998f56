#include <catch2/catch_amalgamated.hpp>

#include "cullis/matrix.hpp"
#include "cullis/rng.hpp"

using namespace cullis;

TEST_CASE("index sets validate") {
    CHECK_THROWS_AS(IndexSet({2, 1}), BoundsError);
    CHECK_THROWS_AS(IndexSet({1, 1}), BoundsError);
    CHECK_THROWS_AS(IndexSet({0}), BoundsError);
    IndexSet s{1, 3, 4};
    CHECK(s.contains(3));
    CHECK(!s.contains(2));
    CHECK(s.complement(5) == IndexSet{2, 5});
    CHECK(IndexSet::all().is_all());
    CHECK(!IndexSet{}.is_all()); // empty and "all" are distinct
}

TEST_CASE("submatrix keep") {
    FieldSpec q = FieldSpec::rationals();
    Mat i3 = Mat::identity(q, 3);
    CHECK(submatrix_keep(i3, IndexSet{1, 2}, IndexSet{1, 2}) == Mat::identity(q, 2));

    Mat a = Mat::from_rows(q, {{1, 2}, {3, 4}, {5, 6}});
    CHECK(submatrix_keep(a, IndexSet{1, 3}, IndexSet::all()) ==
          Mat::from_rows(q, {{1, 2}, {5, 6}}));

    Mat i2 = Mat::identity(q, 2);
    CHECK(submatrix_keep(i2, IndexSet{2}, IndexSet{1}) == Mat::from_rows(q, {{0}}));

    CHECK_THROWS_AS(submatrix_keep(i2, IndexSet{3}, IndexSet::all()), BoundsError);
    // empty set without the sentinel keeps nothing
    CHECK(submatrix_keep(i2, IndexSet{1}, IndexSet{}).cols() == 0);
}

TEST_CASE("submatrix drop") {
    FieldSpec q = FieldSpec::rationals();
    CHECK(submatrix_drop(Mat::identity(q, 3), IndexSet{2}, IndexSet{2}) == Mat::identity(q, 2));

    Mat a = Mat::from_rows(q, {{1, 2}, {3, 4}});
    CHECK(submatrix_drop(a, IndexSet{1}, IndexSet{}) == Mat::from_rows(q, {{3, 4}}));
    CHECK(submatrix_drop(a, IndexSet{}, IndexSet{2}) == Mat::from_rows(q, {{1}, {3}}));
    CHECK_THROWS_AS(submatrix_drop(a, IndexSet::all(), IndexSet{}), Error);
}

TEST_CASE("matrix format round-trips bit-exactly") {
    std::string text = "3 2 Q\n1 2\n-3/4 4\n0 6\n";
    Mat m = parse_matrix(text);
    CHECK(matrix_to_string(m) == text);
    CHECK(parse_matrix(matrix_to_string(m)) == m);

    Rng rng(42);
    for (int t = 0; t < 25; ++t) {
        for (FieldSpec f : {FieldSpec::rationals(), FieldSpec::prime(7)}) {
            Mat r = random_matrix(rng, f, 1 + int(rng.below(5)), 1 + int(rng.below(5)));
            CHECK(parse_matrix(matrix_to_string(r)) == r);
        }
    }

    // rationals keep their reduced form through the format
    Mat frac = parse_matrix("1 1 Q\n6/4\n");
    CHECK(matrix_to_string(frac) == "1 1 Q\n3/2\n");
}

TEST_CASE("matrix parse errors carry line numbers") {
    auto fails_with = [](const std::string& text, const std::string& needle) {
        try {
            parse_matrix(text);
            FAIL("expected a parse error");
        } catch (const ParseError& e) {
            CHECK(std::string(e.what()).find(needle) != std::string::npos);
        }
    };
    fails_with("2 2\n1 0\n0 1\n", "line 1");
    fails_with("2 2 F4\n1 0\n0 1\n", "line 1");
    fails_with("2 2 F3\n1\n0 1\n", "line 2");
    fails_with("2 2 F3\n1 0 0\n0 1\n", "line 2");
    fails_with("2 2 F3\n1 0\n0 x\n", "line 3");
    fails_with("2 2 F3\n1 0\n", "line 3");
}

TEST_CASE("matrix product and transpose") {
    FieldSpec f = FieldSpec::prime(5);
    Mat a = Mat::from_rows(f, {{1, 2}, {3, 4}});
    Mat b = Mat::from_rows(f, {{0, 1}, {1, 0}});
    CHECK(a * b == Mat::from_rows(f, {{2, 1}, {4, 3}}));
    CHECK(a.transpose() == Mat::from_rows(f, {{1, 3}, {2, 4}}));
    CHECK(Mat::hstack(a, b).cols() == 4);
    CHECK(Mat::vstack(a, b).rows() == 4);
    CHECK_THROWS_AS(a * Mat::identity(f, 3), ShapeError);
}
