#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ecshor/ecgroup.hpp"

using namespace ecshor;

TEST_CASE("default curve is the frozen deterministic search result") {
    const auto& dc = default_curve(32);
    CHECK(dc.curve == CurveParams{23, 1, 10});
    CHECK(dc.generator == Point::at(5, 5));
    CHECK(point_order(dc.curve, dc.generator) == 32);
}

TEST_CASE("point_add identity, inverse and doubling") {
    const auto& dc = default_curve(32);
    auto enc = build_encoding(dc.curve, dc.generator, 32);

    CHECK(point_add(dc.curve, Point::inf(), dc.generator) == dc.generator);
    Point neg = point_negate(dc.curve, dc.generator);
    CHECK(point_add(dc.curve, dc.generator, neg) == Point::inf());
    // G + G against the frozen table entry
    CHECK(point_add(dc.curve, dc.generator, dc.generator) == enc.table[2]);
    CHECK(enc.table[2] == Point::at(22, 13));
}

TEST_CASE("scalar_mul basics") {
    const auto& dc = default_curve(32);
    CHECK(scalar_mul(dc.curve, 0, dc.generator) == Point::inf());
    CHECK(scalar_mul(dc.curve, 1, dc.generator) == dc.generator);
    CHECK(scalar_mul(dc.curve, 32, dc.generator) == Point::inf());
    CHECK(scalar_mul(dc.curve, 7, dc.generator) == Point::at(9, 14));
    // periodicity
    CHECK(scalar_mul(dc.curve, 39, dc.generator) == Point::at(9, 14));
}

TEST_CASE("find_generator_of_order") {
    const auto& dc = default_curve(32);
    Point g = find_generator_of_order(dc.curve, 32);
    CHECK(g == dc.generator);
    CHECK(scalar_mul(dc.curve, 16, g) != Point::inf());

    CHECK(find_generator_of_order(dc.curve, 1) == Point::inf());

    // y^2 = x^3 + x + 1 over F_5 has group order 9: no order-32 point
    CurveParams small{5, 1, 1};
    CHECK_THROWS_AS(find_generator_of_order(small, 32), NoSuchSubgroup);
}

TEST_CASE("build_encoding table and homomorphism") {
    const auto& dc = default_curve(32);
    auto enc = build_encoding(dc.curve, dc.generator, 32);
    CHECK(enc.table[0] == Point::inf());
    CHECK(enc.table[1] == dc.generator);
    CHECK(enc.table[(13 + 25) % 32] == point_add(dc.curve, enc.table[13], enc.table[25]));

    // full isomorphism check
    for (int x = 0; x < 32; ++x)
        for (int y = 0; y < 32; ++y)
            CHECK(enc.index_of(point_add(dc.curve, enc.table[x], enc.table[y])) == (x + y) % 32);

    Point wrong_order = scalar_mul(dc.curve, 2, dc.generator);  // order 16
    CHECK_THROWS_AS(build_encoding(dc.curve, wrong_order, 32), OrderMismatch);
}

TEST_CASE("discrete_log_bruteforce") {
    const auto& dc = default_curve(32);
    auto enc = build_encoding(dc.curve, dc.generator, 32);
    CHECK(discrete_log_bruteforce(enc, Point::inf()) == 0);
    CHECK(discrete_log_bruteforce(enc, dc.generator) == 1);
    CHECK(discrete_log_bruteforce(enc, scalar_mul(dc.curve, 7, dc.generator)) == 7);
    for (int k = 0; k < 32; ++k)
        CHECK(discrete_log_bruteforce(enc, scalar_mul(dc.curve, k, dc.generator)) == k);
    CHECK_THROWS_AS(discrete_log_bruteforce(enc, Point::at(0, 0)), NotInSubgroup);
}

TEST_CASE("curve fixture JSON round-trip") {
    const auto& dc = default_curve(32);
    auto enc = build_encoding(dc.curve, dc.generator, 32);
    auto loaded = load_curve_fixture_json(curve_fixture_json(enc));
    CHECK(loaded.curve == enc.curve);
    CHECK(loaded.generator == enc.generator);
    CHECK(loaded.order == enc.order);
    CHECK(loaded.table == enc.table);
}
