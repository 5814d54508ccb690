#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ecshor/conventions.hpp"
#include "ecshor/errors.hpp"
#include "ecshor/simulator.hpp"

namespace ecshor {

struct AbPair {
    int a = 0;
    int b = 0;
    int64_t count = 0;

    bool operator==(const AbPair&) const = default;
};

struct Candidate {
    AbPair pair;
    int k = 0;  // (-a) * b^-1 mod N
};

struct CandidateTable {
    std::vector<Candidate> entries;  // descending count, ties ascending (a,b)
    int top_n = 100;
};

struct SuccessReport {
    bool found = false;
    int rank = 0;  // 1-based rank of the first hit, 0 when not found
};

/// b^-1 mod N; throws NotInvertible when gcd(b, N) != 1.
int64_t mod_inverse(int64_t b, int64_t n);

/// Parses every counts key into an (a, b) pair per the conventions,
/// merging colliding pairs. Output sorted ascending by (a, b).
/// Throws MalformedBitstring on wrong width or non-binary characters.
std::vector<AbPair> parse_counts(const Counts& counts, int n, const ConventionConfig& conv);

/// Descending-count sort (ties ascending (a,b)), keep invertible b only,
/// compute k = (-a) b^-1 mod N, truncate to top_n.
CandidateTable extract_candidates(const std::vector<AbPair>& pairs, int n_mod, int top_n);

/// Total counts per recovered k over invertible pairs; size N.
std::vector<int64_t> aggregate_k_histogram(const std::vector<AbPair>& pairs, int n_mod);

SuccessReport success_check(const CandidateTable& table, int k_true);

/// Console listing: "(a=.., b=..) -> k = .. (count = ..)" with a
/// `<<<` marker on rows hitting k_true.
std::string format_report(const CandidateTable& table, int k_true);

/// Candidate table CSV: rank,a,b,k,count,is_target.
std::string candidates_csv(const CandidateTable& table, int k_true);

}  // namespace ecshor
