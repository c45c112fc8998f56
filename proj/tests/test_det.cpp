#include <catch2/catch_amalgamated.hpp>

#include "cullis/det.hpp"
#include "cullis/rng.hpp"
#include "oracles.hpp"

using namespace cullis;

namespace {
const FieldSpec Q = FieldSpec::rationals();

Scalar qs(long long v) { return Scalar::from_int(Q, v); }
} // namespace

TEST_CASE("sgn of subsets") {
    CHECK(sgn_subset(RowSelection(4, IndexSet{1, 2, 3})) == 1); // exponent 0
    CHECK(sgn_subset(RowSelection(3, IndexSet{1, 3})) == -1);   // (1-1)+(3-2) = 1
    CHECK(sgn_subset(RowSelection(3, IndexSet{2, 3})) == 1);    // (2-1)+(3-2) = 2
    // independent of the universe size
    CHECK(sgn_subset(RowSelection(9, IndexSet{1, 3})) == -1);
}

TEST_CASE("sgn of injections") {
    CHECK(sgn_injection(RowInjection(3, {1, 2})) == 1);
    CHECK(sgn_injection(RowInjection(3, {2, 1})) == -1); // swap * sgn{1,2}
    CHECK(sgn_injection(RowInjection(3, {3, 1})) == 1);  // (-1) * sgn{1,3} = (-1)(-1)
    CHECK_THROWS_AS(RowInjection(3, {1, 1}), Error);
    CHECK_THROWS_AS(RowInjection(3, {4}), BoundsError);
}

TEST_CASE("the three determinants on the named cases") {
    Mat a1 = Mat::from_rows(Q, {{5}});
    CHECK(det_injection_sum(a1) == qs(5));
    CHECK(det_minor_sum(a1) == qs(5));
    CHECK(det_laplace(a1, 1) == qs(5));

    // k = 1 alternating sum: x11 - x21
    Mat a2 = Mat::from_rows(Q, {{1}, {1}});
    CHECK(det_injection_sum(a2).is_zero());
    CHECK(det_minor_sum(a2).is_zero());
    CHECK(det_laplace(a2).is_zero());

    Mat a3 = Mat::from_rows(Q, {{1, 0}, {0, 1}, {0, 0}});
    CHECK(det_injection_sum(a3).is_one());
    CHECK(det_minor_sum(a3).is_one()); // det{1,2} - det{1,3} + det{2,3} = 1 - 0 + 0
    CHECK(det_laplace(a3, 1).is_one());

    // wide input is a shape error
    CHECK_THROWS_AS(det_injection_sum(Mat(Q, 2, 3)), ShapeError);
    CHECK_THROWS_AS(det_minor_sum(Mat(Q, 2, 3)), ShapeError);
    CHECK_THROWS_AS(det_laplace(Mat(Q, 2, 3)), ShapeError);
    CHECK_THROWS_AS(det_laplace(a3, 3), BoundsError);
}

TEST_CASE("square case equals the classical determinant") {
    Rng rng(21);
    for (int t = 0; t < 20; ++t) {
        FieldSpec f = t % 2 == 0 ? FieldSpec::prime(5) : Q;
        int n = 1 + int(rng.below(4));
        Mat x = random_matrix(rng, f, n, n);
        CHECK(det_minor_sum(x) == square_det(x));
        CHECK(det_injection_sum(x) == square_det(x));
    }
}

TEST_CASE("three-way agreement with the oracle") {
    Rng rng(22);
    for (FieldSpec f : {FieldSpec::prime(5), Q})
        for (int n = 1; n <= 5; ++n)
            for (int k = 1; k <= n; ++k)
                for (int t = 0; t < 5; ++t) {
                    Mat x = random_matrix(rng, f, n, k);
                    Scalar want = oracles::naive_cullis_det(x);
                    CHECK(det_injection_sum(x) == want);
                    CHECK(det_minor_sum(x) == want);
                    for (int col = 1; col <= k; ++col) CHECK(det_laplace(x, col) == want);
                }
}

TEST_CASE("column properties") {
    Rng rng(23);
    for (FieldSpec f : {FieldSpec::prime(3), Q})
        for (int t = 0; t < 10; ++t) {
            int n = 2 + int(rng.below(3));
            int k = 2 + int(rng.below(n - 1));
            Mat x = random_matrix(rng, f, n, k);

            // identical columns annihilate
            Mat same = x;
            same.set_col(2, x.col_vec(1));
            CHECK(det_minor_sum(same).is_zero());

            // swapping two columns flips the sign
            Mat swapped = x;
            swapped.set_col(1, x.col_vec(2));
            swapped.set_col(2, x.col_vec(1));
            CHECK(det_minor_sum(swapped) == -det_minor_sum(x));

            // multilinearity in a column
            Mat y = x;
            auto u = random_vector(rng, f, n);
            y.set_col(1, u);
            Scalar c = random_scalar(rng, f);
            Mat mix = x;
            std::vector<Scalar> mixed_col;
            for (int i = 1; i <= n; ++i)
                mixed_col.push_back(x(i, 1) + c * u[size_t(i - 1)]);
            mix.set_col(1, mixed_col);
            CHECK(det_minor_sum(mix) == det_minor_sum(x) + c * det_minor_sum(y));

            // adding a combination of other columns changes nothing
            Mat add = x;
            std::vector<Scalar> col1 = x.col_vec(1);
            for (int j = 2; j <= k; ++j) {
                Scalar cj = random_scalar(rng, f);
                for (int i = 1; i <= n; ++i) col1[size_t(i - 1)] += cj * x(i, j);
            }
            add.set_col(1, col1);
            CHECK(det_minor_sum(add) == det_minor_sum(x));
        }
}

TEST_CASE("laplace expansion named cases") {
    Mat ones32 = Mat::from_rows(Q, {{1, 1}, {1, 1}, {1, 1}});
    CHECK(det_laplace(ones32, 2).is_zero()); // two identical columns

    Mat a = Mat::from_rows(Q, {{1, 0}, {0, 1}, {0, 0}});
    CHECK(det_laplace(a, 1).is_one());
    CHECK(det_laplace(a, 2).is_one());
}

TEST_CASE("binomial expansion coefficients") {
    Rng rng(24);
    for (FieldSpec f : {FieldSpec::prime(5), Q})
        for (int t = 0; t < 6; ++t) {
            int n = 3, k = 2;
            Mat a = random_matrix(rng, f, n, k);
            Mat b = random_matrix(rng, f, n, k);
            auto coeffs = binomial_coeffs(a, b);
            REQUIRE(coeffs.size() == size_t(k) + 1);
            CHECK(coeffs[0] == det_minor_sum(a));
            CHECK(coeffs.back() == det_minor_sum(b));

            // evaluate both sides at k+1 distinct points
            for (long long lam = 0; lam <= k; ++lam) {
                Scalar l = Scalar::from_int(f, lam);
                Mat sum = a + b.scaled(l);
                Scalar poly = zero(f);
                Scalar pow = one(f);
                for (const auto& cd : coeffs) {
                    poly += cd * pow;
                    pow *= l;
                }
                CHECK(poly == det_minor_sum(sum));
            }
        }

    // A = 0: every term that keeps a zero column vanishes
    Mat z = Mat(Q, 3, 2);
    Mat b = Mat::from_rows(Q, {{1, 2}, {3, 4}, {5, 6}});
    auto coeffs = binomial_coeffs(z, b);
    CHECK(coeffs[0].is_zero());
    CHECK(coeffs[1].is_zero());
    CHECK(coeffs[2] == det_minor_sum(b));
}

TEST_CASE("ones-column reduction") {
    Rng rng(25);
    for (FieldSpec f : {FieldSpec::prime(3), Q})
        for (int n = 2; n <= 6; ++n)
            for (int k = 1; k < n; ++k)
                for (int t = 0; t < 3; ++t) {
                    Mat x = random_matrix(rng, f, n, k);
                    Scalar got = det_minor_sum(append_ones_column(x));
                    if ((n + k) % 2 != 0)
                        CHECK(got == det_minor_sum(x));
                    else
                        CHECK(got.is_zero());
                }
}

TEST_CASE("cyclic shift") {
    CHECK_THROWS_AS(cyclic_shift(Mat(Q, 2, 2), 1), PreconditionError); // n + k even

    Mat x = Mat::from_rows(Q, {{1, 0}, {0, 1}, {0, 0}});
    auto s1 = cyclic_shift(x, 1);
    CHECK(s1.matrix == x);
    CHECK(s1.sign == 1);

    auto s2 = cyclic_shift(x, 2);
    CHECK(s2.matrix == Mat::from_rows(Q, {{0, 1}, {0, 0}, {1, 0}}));
    CHECK(s2.sign == 1); // (-1)^{3*2}
    CHECK(det_minor_sum(s2.matrix) == det_minor_sum(x));

    CHECK(cyclic_shift(x, 3).sign == 1); // (-1)^{4*2}

    Rng rng(26);
    for (int n = 1; n <= 6; ++n)
        for (int k = 1; k <= n; ++k) {
            if ((n + k) % 2 == 0) continue;
            Mat y = random_matrix(rng, FieldSpec::prime(5), n, k);
            for (int i = 1; i <= n; ++i) {
                auto s = cyclic_shift(y, i);
                CHECK(sign_scalar(y.field(), s.sign) * det_minor_sum(s.matrix) ==
                      det_minor_sum(y));
            }
        }
}

TEST_CASE("semi-cyclic shift") {
    CHECK_THROWS_AS(semicyclic_shift(Mat(Q, 3, 2), 1), PreconditionError); // n + k odd

    Mat x = Mat::from_rows(Q, {{2}, {3}, {5}});
    auto s = semicyclic_shift(x, 2);
    CHECK(s.matrix == Mat::from_rows(Q, {{3}, {5}, {-2}}));
    CHECK(s.sign == -1); // (-1)^{(3-2)*1}
    CHECK(sign_scalar(Q, s.sign) * det_minor_sum(s.matrix) == det_minor_sum(x));

    Rng rng(27);
    for (int n = 1; n <= 6; ++n)
        for (int k = 1; k <= n; ++k) {
            if ((n + k) % 2 != 0) continue;
            for (FieldSpec f : {FieldSpec::prime(3), Q}) {
                Mat y = random_matrix(rng, f, n, k);
                for (int i = 1; i <= n; ++i) {
                    auto r = semicyclic_shift(y, i);
                    CHECK(sign_scalar(f, r.sign) * det_minor_sum(r.matrix) == det_minor_sum(y));
                }
            }
        }
}

TEST_CASE("scs apply") {
    Mat x31 = Mat::from_rows(Q, {{2}, {3}, {5}});
    CHECK(scs_apply(x31, 1) == x31);
    // n + k even: semi-cyclic construction
    CHECK(scs_apply(x31, 2) == Mat::from_rows(Q, {{3}, {5}, {-2}}));

    // n + k odd: plain rotation
    Mat x41 = Mat::from_rows(Q, {{2}, {3}, {5}, {7}});
    CHECK(scs_apply(x41, 3) == Mat::from_rows(Q, {{5}, {7}, {2}, {3}}));

    CHECK_THROWS_AS(scs_apply(x31, 4), BoundsError);

    // the row-action matrix realizes the same map
    Rng rng(28);
    for (int n = 2; n <= 5; ++n)
        for (int k = 1; k <= n; ++k)
            for (int i0 = 1; i0 <= n; ++i0) {
                Mat y = random_matrix(rng, Q, n, k);
                Mat s = scs_row_matrix(Q, n, k, i0);
                CHECK(s * y == scs_apply(y, i0));
                CHECK(!square_det(s).is_zero()); // invertible
            }
}

TEST_CASE("scs transport of kernel vectors") {
    // i0 = 1 leaves z unchanged
    std::vector<Scalar> z = {qs(1), qs(0), qs(1)};
    CHECK(scs_transport_z(z, 1, 3, 1) == z);

    // n = 3, k = 1: n + k even, wrapped entries are negated
    CHECK(scs_transport_z(z, 2, 3, 1) == std::vector<Scalar>{qs(0), qs(1), qs(-1)});

    // n = 3, k = 2: n + k odd, wrapped entries keep their sign
    CHECK(scs_transport_z(z, 2, 3, 2) == std::vector<Scalar>{qs(0), qs(1), qs(1)});

    CHECK_THROWS_AS(scs_transport_z(z, 1, 4, 1), ShapeError);

    // S2: transported vectors annihilate the transported matrix
    Rng rng(29);
    for (FieldSpec f : {FieldSpec::prime(3), Q})
        for (int n = 2; n <= 5; ++n)
            for (int k = 1; k <= n; ++k)
                for (int i0 = 1; i0 <= n; ++i0) {
                    auto zz = random_vector(rng, f, n);
                    Mat zrow = row_matrix(f, zz);
                    auto basis = nullspace_basis(zrow);
                    Mat x(f, n, k);
                    for (int j = 1; j <= k; ++j) {
                        auto col = zero_vector(f, n);
                        for (const auto& v : basis) {
                            Scalar c = random_scalar(rng, f);
                            for (int i = 0; i < n; ++i) col[size_t(i)] += c * v[size_t(i)];
                        }
                        x.set_col(j, col);
                    }
                    REQUIRE(is_zero_vector(vec_mat(zz, x)));
                    auto zt = scs_transport_z(zz, i0, n, k);
                    CHECK(is_zero_vector(vec_mat(zt, scs_apply(x, i0))));
                }
}

TEST_CASE("alternating row sum convention") {
    // starts with -X[1|)
    Mat x = Mat::from_rows(Q, {{1, 2}, {3, 4}, {5, 6}});
    auto s = alternating_row_sum(x);
    CHECK(s == std::vector<Scalar>{qs(-1 + 3 - 5), qs(-2 + 4 - 6)});
}
