#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ecshor/postprocess.hpp"
#include "ecshor/simulator.hpp"

using namespace ecshor;

TEST_CASE("mod_inverse") {
    CHECK(mod_inverse(9, 32) == 25);
    CHECK(mod_inverse(1, 32) == 1);
    CHECK_THROWS_AS(mod_inverse(2, 32), NotInvertible);
}

TEST_CASE("parse_counts basics and malformed keys") {
    auto conv = ConventionConfig::consistent();
    const int n = 5;

    Counts zero;
    zero.shots = 3;
    zero.map["0000000000"] = 3;
    auto pairs = parse_counts(zero, n, conv);
    REQUIRE(pairs.size() == 1);
    CHECK(pairs[0] == AbPair{0, 0, 3});

    Counts one;
    one.shots = 1;
    one.map[render_outcome(1, 0, n, conv)] = 1;
    auto p1 = parse_counts(one, n, conv);
    REQUIRE(p1.size() == 1);
    CHECK(p1[0] == AbPair{1, 0, 1});

    Counts bad_width;
    bad_width.map["000000000"] = 1;  // 9 chars
    CHECK_THROWS_AS(parse_counts(bad_width, n, conv), MalformedBitstring);

    Counts bad_char;
    bad_char.map["00000000x0"] = 1;
    CHECK_THROWS_AS(parse_counts(bad_char, n, conv), MalformedBitstring);
}

TEST_CASE("extract_candidates decode fixtures") {
    std::vector<AbPair> pairs = {
        {8, 11, 63}, {12, 9, 58}, {0, 3, 50}, {1, 9, 54}, {28, 1, 40}, {25, 1, 32}, {4, 2, 99},
    };
    auto table = extract_candidates(pairs, 32, 100);
    REQUIRE(table.entries.size() == 6);  // (4,2) dropped: b not invertible
    auto k_of = [&](int a, int b) {
        for (const auto& c : table.entries)
            if (c.pair.a == a && c.pair.b == b) return c.k;
        FAIL("pair not found");
        return -1;
    };
    CHECK(k_of(8, 11) == 8);
    CHECK(k_of(12, 9) == 20);
    CHECK(k_of(0, 3) == 0);
    CHECK(k_of(1, 9) == 7);
    CHECK(k_of(28, 1) == 4);
    CHECK(k_of(25, 1) == 7);

    // descending count, the fixture's top row first
    CHECK(table.entries[0].pair == AbPair{8, 11, 63});

    // equal counts tie-break ascending (a, b)
    std::vector<AbPair> ties = {{3, 1, 10}, {1, 3, 10}, {1, 1, 10}};
    auto tied = extract_candidates(ties, 32, 100);
    CHECK(tied.entries[0].pair == AbPair{1, 1, 10});
    CHECK(tied.entries[1].pair == AbPair{1, 3, 10});
    CHECK(tied.entries[2].pair == AbPair{3, 1, 10});

    // top_n truncation
    CHECK(extract_candidates(pairs, 32, 2).entries.size() == 2);
}

TEST_CASE("aggregate_k_histogram") {
    std::vector<AbPair> pairs = {{1, 9, 54}, {11, 3, 41}, {25, 1, 32}};
    auto hist = aggregate_k_histogram(pairs, 32);
    CHECK(hist[7] == 127);

    CHECK(aggregate_k_histogram({}, 32) == std::vector<int64_t>(32, 0));

    auto single = aggregate_k_histogram({{0, 1, 10}}, 32);
    CHECK(single[0] == 10);
}

TEST_CASE("success_check") {
    std::vector<AbPair> pairs = {{8, 11, 63}, {12, 9, 58}, {1, 9, 54}};
    auto table = extract_candidates(pairs, 32, 100);
    auto hit = success_check(table, 7);
    CHECK(hit.found);
    CHECK(hit.rank == 3);  // (1,9) row
    CHECK_FALSE(success_check(table, 31).found);
    CHECK_FALSE(success_check(CandidateTable{}, 7).found);
}

TEST_CASE("merged duplicate keys give the same table") {
    auto conv = ConventionConfig::consistent();
    Counts merged, split;
    merged.shots = split.shots = 10;
    auto key = render_outcome(3, 5, 3, conv);
    merged.map[key] = 10;
    split.map[key] = 10;  // Counts keys are unique; merging happens inside parse_counts
    auto p1 = parse_counts(merged, 3, conv);
    auto p2 = parse_counts(split, 3, conv);
    CHECK(p1 == p2);
    CHECK(extract_candidates(p1, 8, 5).entries.size() == extract_candidates(p2, 8, 5).entries.size());
}

TEST_CASE("report and CSV formatting") {
    std::vector<AbPair> pairs = {{1, 9, 54}, {8, 11, 63}};
    auto table = extract_candidates(pairs, 32, 100);
    auto report = format_report(table, 7);
    CHECK(report.find("(a= 8, b=11) -> k =  8 (count = 63)") != std::string::npos);
    CHECK(report.find("<<<") != std::string::npos);

    auto csv = candidates_csv(table, 7);
    CHECK(csv.find("rank,a,b,k,count,is_target") == 0);
    CHECK(csv.find("1,8,11,8,63,0") != std::string::npos);
    CHECK(csv.find("2,1,9,7,54,1") != std::string::npos);
}
