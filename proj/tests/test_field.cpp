#include <catch2/catch_amalgamated.hpp>

#include "cullis/field.hpp"

using namespace cullis;

TEST_CASE("field spec validation") {
    CHECK(FieldSpec::prime(2).modulus() == 2);
    CHECK(FieldSpec::prime(65521).modulus() == 65521); // largest prime < 2^16
    CHECK_THROWS_AS(FieldSpec::prime(1), Error);
    CHECK_THROWS_AS(FieldSpec::prime(4), Error);
    CHECK_THROWS_AS(FieldSpec::prime(65536), Error);
    CHECK_THROWS_AS(FieldSpec::prime(65535), Error); // 3 * 5 * 17 * 257

    CHECK(FieldSpec::parse("Q") == FieldSpec::rationals());
    CHECK(FieldSpec::parse("F7") == FieldSpec::prime(7));
    CHECK(FieldSpec::prime(7).to_string() == "F7");
    CHECK(FieldSpec::rationals().to_string() == "Q");
    CHECK_THROWS_AS(FieldSpec::parse("F"), ParseError);
    CHECK_THROWS_AS(FieldSpec::parse("GF2"), ParseError);
    CHECK_THROWS_AS(FieldSpec::parse("F99999"), ParseError);
}

TEST_CASE("prime field arithmetic is canonical") {
    FieldSpec f = FieldSpec::prime(5);
    Scalar a = Scalar::from_int(f, 7);  // 2
    Scalar b = Scalar::from_int(f, -1); // 4
    CHECK(a.fp_value() == 2);
    CHECK(b.fp_value() == 4);
    CHECK((a + b).fp_value() == 1);
    CHECK((a - b).fp_value() == 3);
    CHECK((a * b).fp_value() == 3);
    CHECK((-a).fp_value() == 3);
    CHECK((a / b).fp_value() == 3); // 2 * 4^{-1} = 2 * 4 = 8 = 3
    CHECK(a.inverse().fp_value() == 3);
    CHECK_THROWS_AS(zero(f).inverse(), Error);

    for (long long v = 1; v < 5; ++v) {
        Scalar s = Scalar::from_int(f, v);
        CHECK((s * s.inverse()).is_one());
    }
}

TEST_CASE("rational arithmetic is canonical") {
    FieldSpec f = FieldSpec::rationals();
    Scalar half = Scalar::parse(f, "2/4");
    CHECK(half.to_string() == "1/2");
    Scalar neg = Scalar::parse(f, "3/-6");
    CHECK(neg.to_string() == "-1/2"); // positive denominator
    CHECK((half + neg).is_zero());
    CHECK((half * Scalar::from_int(f, 2)).is_one());
    CHECK(Scalar::parse(f, "-0").is_zero());
    CHECK(Scalar::parse(f, "10/5").to_string() == "2");
    CHECK_THROWS_AS(Scalar::parse(f, "1/0"), ParseError);
    CHECK_THROWS_AS(Scalar::parse(f, "abc"), ParseError);

    // equality is equality of canonical forms
    CHECK(Scalar::parse(f, "2/4") == Scalar::parse(f, "1/2"));
    CHECK(Scalar::parse(f, "1/3") != Scalar::parse(f, "1/2"));
}

TEST_CASE("fields never mix") {
    Scalar a = Scalar::from_int(FieldSpec::prime(3), 1);
    Scalar b = Scalar::from_int(FieldSpec::prime(5), 1);
    Scalar q = Scalar::from_int(FieldSpec::rationals(), 1);
    CHECK_THROWS_AS(a + b, FieldMismatchError);
    CHECK_THROWS_AS(a * q, FieldMismatchError);
    CHECK(a != b); // comparable, but never equal across fields
    CHECK_THROWS_AS(Scalar::parse(FieldSpec::prime(5), "1/2"), ParseError);
}

TEST_CASE("fp parsing reduces large and negative integers") {
    FieldSpec f = FieldSpec::prime(7);
    CHECK(Scalar::parse(f, "700000000000000000003").fp_value() == 3);
    CHECK(Scalar::parse(f, "-1").fp_value() == 6);
}
