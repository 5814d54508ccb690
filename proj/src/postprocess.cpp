#include "ecshor/postprocess.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <numeric>
#include <sstream>

namespace ecshor {

int64_t mod_inverse(int64_t b, int64_t n) {
    if (n < 2) throw Error("modulus must be >= 2");
    b = (b % n + n) % n;
    if (std::gcd(b, n) != 1)
        throw NotInvertible("gcd(" + std::to_string(b) + ", " + std::to_string(n) + ") != 1");
    int64_t a = b, m = n, x0 = 1, x1 = 0;
    while (m != 0) {
        int64_t q = a / m;
        int64_t t = a - q * m;
        a = m;
        m = t;
        t = x0 - q * x1;
        x0 = x1;
        x1 = t;
    }
    return (x0 % n + n) % n;
}

std::vector<AbPair> parse_counts(const Counts& counts, int n, const ConventionConfig& conv) {
    std::map<std::pair<int, int>, int64_t> merged;
    for (const auto& [key, count] : counts.map) {
        auto ab = parse_bitstring(key, n, conv);
        merged[ab] += count;
    }
    std::vector<AbPair> pairs;
    pairs.reserve(merged.size());
    for (const auto& [ab, count] : merged) pairs.push_back(AbPair{ab.first, ab.second, count});
    return pairs;
}

CandidateTable extract_candidates(const std::vector<AbPair>& pairs, int n_mod, int top_n) {
    std::vector<AbPair> sorted = pairs;
    std::stable_sort(sorted.begin(), sorted.end(), [](const AbPair& l, const AbPair& r) {
        if (l.count != r.count) return l.count > r.count;
        if (l.a != r.a) return l.a < r.a;
        return l.b < r.b;
    });
    CandidateTable table;
    table.top_n = top_n;
    for (const AbPair& p : sorted) {
        if (std::gcd(p.b, n_mod) != 1) continue;
        int64_t k = (-int64_t{p.a} * mod_inverse(p.b, n_mod) % n_mod + n_mod) % n_mod;
        table.entries.push_back(Candidate{p, static_cast<int>(k)});
        if (static_cast<int>(table.entries.size()) == top_n) break;
    }
    return table;
}

std::vector<int64_t> aggregate_k_histogram(const std::vector<AbPair>& pairs, int n_mod) {
    std::vector<int64_t> hist(n_mod, 0);
    for (const AbPair& p : pairs) {
        if (std::gcd(p.b, n_mod) != 1) continue;
        int64_t k = (-int64_t{p.a} * mod_inverse(p.b, n_mod) % n_mod + n_mod) % n_mod;
        hist[k] += p.count;
    }
    return hist;
}

SuccessReport success_check(const CandidateTable& table, int k_true) {
    for (size_t i = 0; i < table.entries.size(); ++i)
        if (table.entries[i].k == k_true) return SuccessReport{true, static_cast<int>(i + 1)};
    return SuccessReport{false, 0};
}

std::string format_report(const CandidateTable& table, int k_true) {
    std::ostringstream out;
    out << "Top " << table.top_n << " invertible (a, b) pairs and recovered k:\n";
    for (const Candidate& c : table.entries) {
        char line[96];
        std::snprintf(line, sizeof(line), " (a=%2d, b=%2d) -> k = %2d (count = %lld)%s\n", c.pair.a,
                      c.pair.b, c.k, static_cast<long long>(c.pair.count),
                      c.k == k_true ? " <<<" : "");
        out << line;
    }
    return out.str();
}

std::string candidates_csv(const CandidateTable& table, int k_true) {
    std::ostringstream out;
    out << "rank,a,b,k,count,is_target\n";
    for (size_t i = 0; i < table.entries.size(); ++i) {
        const Candidate& c = table.entries[i];
        out << i + 1 << ',' << c.pair.a << ',' << c.pair.b << ',' << c.k << ',' << c.pair.count
            << ',' << (c.k == k_true ? 1 : 0) << '\n';
    }
    return out.str();
}

}  // namespace ecshor
