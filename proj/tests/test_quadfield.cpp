#include <catch2/catch_amalgamated.hpp>

#include "wrideal/quadfield.hpp"

using namespace wrideal;

TEST_CASE("make_field delta data") {
    const auto f21 = make_field(21);
    CHECK(f21.delta_trace == 1);
    CHECK(f21.delta_norm == -5);

    const auto fm21 = make_field(-21);
    CHECK(fm21.delta_trace == 0);
    CHECK(fm21.delta_norm == 21);

    const auto fm3 = make_field(-3);
    CHECK(fm3.delta_trace == 1);
    CHECK(fm3.delta_norm == 1);

    CHECK_THROWS_AS(make_field(0), std::invalid_argument);
    CHECK_THROWS_AS(make_field(1), std::invalid_argument);
    CHECK_THROWS_AS(make_field(12), std::invalid_argument);
    CHECK_THROWS_AS(make_field(-12), std::invalid_argument);
}

TEST_CASE("element_norm") {
    CHECK(element_norm(make_field(-3), 1, 0) == 1);
    CHECK(element_norm(make_field(21), 3, 1) == 7);    // N(3 + delta)
    CHECK(element_norm(make_field(-21), 7, 1) == 70);
}

TEST_CASE("validate_ideal") {
    CHECK(validate_ideal(make_field(21), 7, 3, 1));
    CHECK_FALSE(validate_ideal(make_field(-21), 7, 3, 1));  // 7 does not divide 30
    CHECK(validate_ideal(make_field(-21), 14, 7, 1));
    CHECK_FALSE(validate_ideal(make_field(21), 3, 4, 1));   // b >= a
    CHECK_FALSE(validate_ideal(make_field(21), 4, 2, 2));   // 8 does not divide N(2+2d) = -12
}

TEST_CASE("enumerate_ideals") {
    const auto fm3 = make_field(-3);
    const auto ideals3 = enumerate_ideals(fm3, 3);
    auto has = [](const std::vector<IdealBasis>& v, i64 a, i64 b, i64 g) {
        return std::any_of(v.begin(), v.end(), [&](const IdealBasis& I) {
            return I.a == a && I.b == b && I.g == g;
        });
    };
    CHECK(has(ideals3, 1, 0, 1));
    CHECK(has(ideals3, 3, 1, 1));
    CHECK(has(ideals3, 2, 0, 2));
    CHECK_FALSE(has(ideals3, 2, 1, 1));  // 2 does not divide N(1+delta) = 3

    CHECK(has(enumerate_ideals(make_field(-21), 5), 5, 2, 1));
    CHECK(has(enumerate_ideals(make_field(21), 3), 3, 1, 1));

    for (const auto& I : enumerate_ideals(make_field(-21), 40))
        REQUIRE(validate_ideal(I.field, I.a, I.b, I.g));
}

TEST_CASE("construct_wr_ideal") {
    const auto i1 = construct_wr_ideal(21, 2, 5, FieldSign::real);
    CHECK(i1.a == 7);
    CHECK(i1.b == 3);
    CHECK(i1.g == 1);

    const auto i2 = construct_wr_ideal(21, 2, 5, FieldSign::imaginary);
    CHECK(i2.a == 14);
    CHECK(i2.b == 7);

    const auto i3 = construct_wr_ideal(3, 1, 2, FieldSign::imaginary);
    CHECK(i3.a == 3);
    CHECK(i3.b == 1);

    const auto i4 = construct_wr_ideal(3, 1, 2, FieldSign::real);
    CHECK(i4.a == 6);
    CHECK(i4.b == 3);

    CHECK_THROWS_AS(construct_wr_ideal(21, 1, 5, FieldSign::real), std::invalid_argument);
}

TEST_CASE("principal_ideal_basis") {
    const auto unit = principal_ideal_basis(make_field(-3), 1, 0);
    CHECK(unit.a == 1);
    CHECK(unit.b == 0);
    CHECK(unit.g == 1);

    const auto d21 = principal_ideal_basis(make_field(21), 0, 1);
    CHECK(d21.a == 5);
    CHECK(d21.b == 0);

    const auto p21 = principal_ideal_basis(make_field(21), 1, 1);
    CHECK(p21.a == 3);
    CHECK(p21.b == 1);

    CHECK_THROWS_AS(principal_ideal_basis(make_field(21), 0, 0), std::invalid_argument);
}

TEST_CASE("principal ideal norm equals absolute element norm") {
    for (i64 m : {-21, -5, -3, -2, 5, 21, 77}) {
        const auto field = make_field(m);
        for (i64 x = -6; x <= 6; ++x)
            for (i64 y = -6; y <= 6; ++y) {
                if (x == 0 && y == 0) continue;
                const i64 nrm = element_norm(field, x, y);
                if (nrm == 0) continue;  // real fields have no norm-zero elements anyway
                const auto I = principal_ideal_basis(field, x, y);
                REQUIRE(validate_ideal(field, I.a, I.b, I.g));
                REQUIRE(ideal_norm(I) == std::abs(nrm));
            }
    }
}

TEST_CASE("ideal_norm") {
    const auto f = make_field(21);
    CHECK(ideal_norm({f, 7, 3, 1}) == 7);
    CHECK(ideal_norm({f, 14, 7, 1}) == 14);
    CHECK(ideal_norm({make_field(-3), 2, 0, 2}) == 4);
}

TEST_CASE("scaled ideals stay valid") {
    for (i64 m : {-21, -3, 5, 21}) {
        const auto field = make_field(m);
        for (const auto& I : enumerate_ideals(field, 30)) {
            if (I.g == 1) continue;
            REQUIRE(validate_ideal(field, I.a / I.g, I.b / I.g, 1));
        }
    }
}
