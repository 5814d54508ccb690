#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ecshor/conventions.hpp"
#include "ecshor/postprocess.hpp"

namespace ecshor {

enum class FigureKind { grid, series, bar, scatter };

/// One analysis figure as a machine-readable table: `columns` labels the
/// payload columns, one row per record. Grids are emitted row-major with
/// explicit a,b coordinates.
struct FigureDataset {
    std::string name;
    std::string title;
    FigureKind kind = FigureKind::series;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;

    std::string to_csv() const;
};

struct RidgeMetrics {
    double on_ridge_mass = 0.0;
    double invertible_mass = 0.0;
    std::vector<std::pair<int, int64_t>> top_k;  // k -> total, descending
    std::vector<int64_t> zipf_series;            // rank -> count, descending
};

FigureDataset heatmap_grid(const std::vector<AbPair>& pairs, int n_mod);

/// The 2^n parsed pairs the calibrated ridge occupies for scalar k.
std::set<std::pair<int, int>> ridge_mask(int k, int n_mod, const ConventionConfig& conv);

/// grid[a][b] = (a + k*b) mod N.
FigureDataset residue_map(int k, int n_mod);

/// (invertible_total, noninvertible_total) partitioned by gcd(b, N) = 1.
std::pair<int64_t, int64_t> efficiency_split(const std::vector<AbPair>& pairs, int n_mod);

/// For invertible pairs: angle = atan2((-a) mod N, b) mod pi, rounded to
/// the nearest bin, weighted by count.
FigureDataset ridge_angle_histogram(const std::vector<AbPair>& pairs, int n_mod,
                                    double bin_width = 0.01);

/// Population variance of the zero-filled count vector over b, per a.
FigureDataset variance_per_a(const std::vector<AbPair>& pairs, int n_mod);

/// Counts sorted descending with 0-based rank.
FigureDataset rank_count_series(const std::vector<AbPair>& pairs);

FigureDataset recovered_k_histogram(const std::vector<AbPair>& pairs, int n_mod);
FigureDataset k_target_locations(const std::vector<AbPair>& pairs, int n_mod, int k_target);
FigureDataset invertibility_mask(const std::vector<AbPair>& pairs, int n_mod);
FigureDataset modular_inverse_map(const std::vector<AbPair>& pairs, int n_mod);
FigureDataset invertible_heatmap(const std::vector<AbPair>& pairs, int n_mod);
FigureDataset linear_residue_totals(const std::vector<AbPair>& pairs, int n_mod, int k_target);
FigureDataset efficiency_split_figure(const std::vector<AbPair>& pairs, int n_mod);

/// The twelve standard figures, in a stable order.
std::vector<FigureDataset> all_figures(const std::vector<AbPair>& pairs, int n_mod,
                                       int k_target, const ConventionConfig& conv);

RidgeMetrics ridge_metrics(const std::vector<AbPair>& pairs, int n_mod, int k,
                           const ConventionConfig& conv);

/// figures/<name>.csv plus figures/manifest.json under out_dir.
void write_figures(const std::vector<FigureDataset>& figures, const std::string& out_dir,
                   const std::string& source_run_id);

}  // namespace ecshor
