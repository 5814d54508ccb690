#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "ecshor/calibration.hpp"

using namespace ecshor;

namespace {

const char* kWellFormed =
    "Qubit,T1 (us),T2 (us),\"\xE2\x88\x9Ax (sx) error\"\n"
    "0,100.5,80.25,0.001\n"
    "1,200,90,0.002\n"
    "2,150,70,0.001\n";

}  // namespace

TEST_CASE("parse_calibration_csv well-formed file") {
    auto rows = parse_calibration_csv(kWellFormed);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].qubit == 0);
    CHECK(rows[0].t1_us == 100.5);
    CHECK(rows[0].t2_us == 80.25);
    CHECK(rows[0].sx_error == 0.001);
    CHECK(rows[2].qubit == 2);
}

TEST_CASE("headers with stray whitespace parse identically") {
    std::string padded =
        "  Qubit , T1 (us) ,  T2 (us) , \xE2\x88\x9Ax (sx) error \n"
        "0,100.5,80.25,0.001\n"
        "1,200,90,0.002\n"
        "2,150,70,0.001\n";
    auto a = parse_calibration_csv(kWellFormed);
    auto b = parse_calibration_csv(padded);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].qubit == b[i].qubit);
        CHECK(a[i].sx_error == b[i].sx_error);
        CHECK(a[i].t1_us == b[i].t1_us);
        CHECK(a[i].t2_us == b[i].t2_us);
    }
}

TEST_CASE("missing column and malformed rows") {
    CHECK_THROWS_AS(parse_calibration_csv("Qubit,T1 (us),(sx) error\n0,1,0.1\n"), MissingColumn);
    CHECK_THROWS_AS(parse_calibration_csv(""), MissingColumn);
    CHECK_THROWS_AS(
        parse_calibration_csv("Qubit,T1 (us),T2 (us),(sx) error\n0,oops,80,0.001\n"),
        MalformedRow);
    CHECK_THROWS_AS(parse_calibration_csv("Qubit,T1 (us),T2 (us),(sx) error\n0,100\n"),
                    MalformedRow);
}

TEST_CASE("rank_qubits ordering") {
    std::vector<QubitCalRow> rows = {
        {0, 0.001, 100, 80},
        {1, 0.002, 200, 90},
        {2, 0.001, 150, 70},
    };
    CHECK(rank_qubits(rows, 2) == std::vector<int>{2, 0});
    CHECK(rank_qubits(rows, 3) == std::vector<int>{2, 0, 1});

    std::vector<QubitCalRow> ties = {{5, 0.1, 1, 1}, {3, 0.1, 1, 1}, {4, 0.1, 1, 1}};
    CHECK(rank_qubits(ties, 3) == std::vector<int>{3, 4, 5});

    CHECK_THROWS_AS(rank_qubits(rows, 4), NotEnoughQubits);
}

TEST_CASE("ranking is shuffle-invariant and prefix-stable") {
    std::vector<QubitCalRow> rows;
    std::mt19937 rng(99);
    for (int q = 0; q < 20; ++q)
        rows.push_back({q, double(rng() % 5) * 1e-3, double(rng() % 300), double(rng() % 200)});

    auto full = rank_qubits(rows, 20);
    for (int trial = 0; trial < 5; ++trial) {
        auto shuffled = rows;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        CHECK(rank_qubits(shuffled, 20) == full);
    }
    for (int n = 1; n < 20; ++n) {
        auto prefix = rank_qubits(rows, n);
        CHECK(std::equal(prefix.begin(), prefix.end(), full.begin()));
    }
}
