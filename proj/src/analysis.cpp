#include "ecshor/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <numbers>
#include <numeric>
#include <sstream>

#include <nlohmann/json.hpp>

#include "ecshor/simulator.hpp"

namespace ecshor {

namespace {

std::string format_number(double v) {
    if (v == std::floor(v) && std::abs(v) < 1e15) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.0f", v);
        return buf;
    }
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

const char* kind_name(FigureKind k) {
    switch (k) {
        case FigureKind::grid: return "grid";
        case FigureKind::series: return "series";
        case FigureKind::bar: return "bar";
        default: return "scatter";
    }
}

std::vector<std::vector<int64_t>> count_grid(const std::vector<AbPair>& pairs, int n_mod) {
    std::vector<std::vector<int64_t>> grid(n_mod, std::vector<int64_t>(n_mod, 0));
    for (const AbPair& p : pairs) grid[p.a][p.b] += p.count;
    return grid;
}

}  // namespace

std::string FigureDataset::to_csv() const {
    std::ostringstream out;
    for (size_t i = 0; i < columns.size(); ++i) out << (i ? "," : "") << columns[i];
    out << '\n';
    for (const auto& row : rows) {
        for (size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << format_number(row[i]);
        out << '\n';
    }
    return out.str();
}

FigureDataset heatmap_grid(const std::vector<AbPair>& pairs, int n_mod) {
    FigureDataset fig{"raw_count_heatmap", "Raw Count Heatmap (a vs b)", FigureKind::grid,
                      {"a", "b", "count"}, {}};
    auto grid = count_grid(pairs, n_mod);
    for (int a = 0; a < n_mod; ++a)
        for (int b = 0; b < n_mod; ++b)
            fig.rows.push_back({double(a), double(b), double(grid[a][b])});
    return fig;
}

std::set<std::pair<int, int>> ridge_mask(int k, int n_mod, const ConventionConfig& conv) {
    int n = 0;
    while ((1 << n) < n_mod) ++n;
    auto dist = analytic_distribution(n, k, conv);
    std::set<std::pair<int, int>> mask;
    for (int a = 0; a < n_mod; ++a)
        for (int b = 0; b < n_mod; ++b)
            if (dist.at(a, b) > 1e-12) mask.emplace(a, b);
    return mask;
}

FigureDataset residue_map(int k, int n_mod) {
    FigureDataset fig{"residue_map", "Residue Map of a + k*b mod N", FigureKind::grid,
                      {"a", "b", "residue"}, {}};
    for (int a = 0; a < n_mod; ++a)
        for (int b = 0; b < n_mod; ++b)
            fig.rows.push_back({double(a), double(b), double((a + int64_t{k} * b) % n_mod)});
    return fig;
}

std::pair<int64_t, int64_t> efficiency_split(const std::vector<AbPair>& pairs, int n_mod) {
    int64_t invertible = 0, wasted = 0;
    for (const AbPair& p : pairs)
        (std::gcd(p.b, n_mod) == 1 ? invertible : wasted) += p.count;
    return {invertible, wasted};
}

FigureDataset ridge_angle_histogram(const std::vector<AbPair>& pairs, int n_mod, double bin_width) {
    FigureDataset fig{"ridge_angle_histogram", "Distribution of Phase Ridge Angles", FigureKind::bar,
                      {"angle_rad", "count"}, {}};
    std::map<int64_t, int64_t> bins;
    for (const AbPair& p : pairs) {
        if (std::gcd(p.b, n_mod) != 1) continue;
        double angle = std::atan2(double((n_mod - p.a) % n_mod), double(p.b));
        angle = std::fmod(angle, std::numbers::pi);
        bins[llround(angle / bin_width)] += p.count;
    }
    for (const auto& [bin, count] : bins) fig.rows.push_back({bin * bin_width, double(count)});
    return fig;
}

FigureDataset variance_per_a(const std::vector<AbPair>& pairs, int n_mod) {
    FigureDataset fig{"count_variance_per_a", "Noise: Variance of Count across b for fixed a",
                      FigureKind::series, {"a", "variance"}, {}};
    auto grid = count_grid(pairs, n_mod);
    for (int a = 0; a < n_mod; ++a) {
        double mean = 0.0;
        for (int b = 0; b < n_mod; ++b) mean += double(grid[a][b]);
        mean /= n_mod;
        double var = 0.0;
        for (int b = 0; b < n_mod; ++b) {
            double d = double(grid[a][b]) - mean;
            var += d * d;
        }
        fig.rows.push_back({double(a), var / n_mod});
    }
    return fig;
}

FigureDataset rank_count_series(const std::vector<AbPair>& pairs) {
    FigureDataset fig{"bitstring_rank_vs_count", "Bitstring Rank vs Count", FigureKind::series,
                      {"rank", "count"}, {}};
    std::vector<int64_t> counts;
    counts.reserve(pairs.size());
    for (const AbPair& p : pairs) counts.push_back(p.count);
    std::sort(counts.rbegin(), counts.rend());
    for (size_t r = 0; r < counts.size(); ++r) fig.rows.push_back({double(r), double(counts[r])});
    return fig;
}

FigureDataset recovered_k_histogram(const std::vector<AbPair>& pairs, int n_mod) {
    FigureDataset fig{"recovered_k_histogram", "Histogram of Recovered k Values", FigureKind::bar,
                      {"k", "count"}, {}};
    auto hist = aggregate_k_histogram(pairs, n_mod);
    for (int k = 0; k < n_mod; ++k) fig.rows.push_back({double(k), double(hist[k])});
    return fig;
}

FigureDataset k_target_locations(const std::vector<AbPair>& pairs, int n_mod, int k_target) {
    FigureDataset fig{"k_target_locations", "Locations of (a, b) Decoding to k = " + std::to_string(k_target),
                      FigureKind::scatter, {"b", "a", "count"}, {}};
    for (const AbPair& p : pairs) {
        if (std::gcd(p.b, n_mod) != 1) continue;
        int64_t k = (-int64_t{p.a} * mod_inverse(p.b, n_mod) % n_mod + n_mod) % n_mod;
        if (k == k_target) fig.rows.push_back({double(p.b), double(p.a), double(p.count)});
    }
    return fig;
}

FigureDataset invertibility_mask(const std::vector<AbPair>& pairs, int n_mod) {
    FigureDataset fig{"invertibility_mask", "Invertibility Mask for b Register", FigureKind::bar,
                      {"b", "count"}, {}};
    std::vector<int64_t> totals(n_mod, 0);
    for (const AbPair& p : pairs)
        if (std::gcd(p.b, n_mod) == 1) totals[p.b] += p.count;
    for (int b = 0; b < n_mod; ++b) fig.rows.push_back({double(b), double(totals[b])});
    return fig;
}

FigureDataset modular_inverse_map(const std::vector<AbPair>& pairs, int n_mod) {
    FigureDataset fig{"modular_inverse_map", "Modular Inverse Frequency Map: b vs b^-1 mod N",
                      FigureKind::grid, {"b", "b_inv", "count"}, {}};
    std::vector<std::vector<int64_t>> grid(n_mod, std::vector<int64_t>(n_mod, 0));
    for (const AbPair& p : pairs)
        if (std::gcd(p.b, n_mod) == 1) grid[p.b][mod_inverse(p.b, n_mod)] += p.count;
    for (int b = 0; b < n_mod; ++b)
        for (int inv = 0; inv < n_mod; ++inv)
            fig.rows.push_back({double(b), double(inv), double(grid[b][inv])});
    return fig;
}

FigureDataset invertible_heatmap(const std::vector<AbPair>& pairs, int n_mod) {
    FigureDataset fig{"invertible_heatmap", "Heatmap: (a, b) with Invertible b mod N",
                      FigureKind::grid, {"a", "b", "count"}, {}};
    auto grid = count_grid(pairs, n_mod);
    for (int a = 0; a < n_mod; ++a)
        for (int b = 0; b < n_mod; ++b)
            fig.rows.push_back({double(a), double(b),
                                std::gcd(b, n_mod) == 1 ? double(grid[a][b]) : 0.0});
    return fig;
}

FigureDataset linear_residue_totals(const std::vector<AbPair>& pairs, int n_mod, int k_target) {
    FigureDataset fig{"linear_residue_totals", "a + k*b mod N Map", FigureKind::bar,
                      {"residue", "count"}, {}};
    std::vector<int64_t> totals(n_mod, 0);
    for (const AbPair& p : pairs) totals[(p.a + int64_t{k_target} * p.b) % n_mod] += p.count;
    for (int r = 0; r < n_mod; ++r) fig.rows.push_back({double(r), double(totals[r])});
    return fig;
}

FigureDataset efficiency_split_figure(const std::vector<AbPair>& pairs, int n_mod) {
    FigureDataset fig{"attack_efficiency", "ECC Attack Efficiency: Valid vs Invalid b",
                      FigureKind::bar, {"invertible", "count"}, {}};
    auto [inv, noninv] = efficiency_split(pairs, n_mod);
    fig.rows.push_back({1.0, double(inv)});
    fig.rows.push_back({0.0, double(noninv)});
    return fig;
}

std::vector<FigureDataset> all_figures(const std::vector<AbPair>& pairs, int n_mod, int k_target,
                                       const ConventionConfig& conv) {
    (void)conv;
    return {
        heatmap_grid(pairs, n_mod),
        recovered_k_histogram(pairs, n_mod),
        rank_count_series(pairs),
        k_target_locations(pairs, n_mod, k_target),
        invertibility_mask(pairs, n_mod),
        modular_inverse_map(pairs, n_mod),
        linear_residue_totals(pairs, n_mod, k_target),
        efficiency_split_figure(pairs, n_mod),
        invertible_heatmap(pairs, n_mod),
        ridge_angle_histogram(pairs, n_mod),
        residue_map(k_target, n_mod),
        variance_per_a(pairs, n_mod),
    };
}

RidgeMetrics ridge_metrics(const std::vector<AbPair>& pairs, int n_mod, int k,
                           const ConventionConfig& conv) {
    RidgeMetrics m;
    auto mask = ridge_mask(k, n_mod, conv);
    int64_t total = 0, on_ridge = 0, invertible = 0;
    for (const AbPair& p : pairs) {
        total += p.count;
        if (mask.count({p.a, p.b})) on_ridge += p.count;
        if (std::gcd(p.b, n_mod) == 1) invertible += p.count;
    }
    if (total > 0) {
        m.on_ridge_mass = double(on_ridge) / double(total);
        m.invertible_mass = double(invertible) / double(total);
    }
    auto hist = aggregate_k_histogram(pairs, n_mod);
    for (int kk = 0; kk < n_mod; ++kk) m.top_k.emplace_back(kk, hist[kk]);
    std::stable_sort(m.top_k.begin(), m.top_k.end(),
                     [](const auto& l, const auto& r) { return l.second > r.second; });
    for (const AbPair& p : pairs) m.zipf_series.push_back(p.count);
    std::sort(m.zipf_series.rbegin(), m.zipf_series.rend());
    return m;
}

void write_figures(const std::vector<FigureDataset>& figures, const std::string& out_dir,
                   const std::string& source_run_id) {
    namespace fs = std::filesystem;
    fs::path dir = fs::path(out_dir) / "figures";
    fs::create_directories(dir);
    nlohmann::ordered_json manifest = nlohmann::ordered_json::array();
    for (const FigureDataset& fig : figures) {
        std::ofstream out(dir / (fig.name + ".csv"), std::ios::binary);
        out << fig.to_csv();
        nlohmann::ordered_json entry;
        entry["name"] = fig.name;
        entry["title"] = fig.title;
        entry["kind"] = kind_name(fig.kind);
        entry["axes"] = fig.columns;
        entry["source_run"] = source_run_id;
        manifest.push_back(entry);
    }
    std::ofstream out(dir / "manifest.json", std::ios::binary);
    out << manifest.dump(4) << "\n";
}

}  // namespace ecshor
