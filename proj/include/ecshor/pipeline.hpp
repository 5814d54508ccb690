#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "ecshor/analysis.hpp"
#include "ecshor/conventions.hpp"
#include "ecshor/ecgroup.hpp"
#include "ecshor/postprocess.hpp"
#include "ecshor/results_io.hpp"
#include "ecshor/simulator.hpp"

namespace ecshor {

/// End-to-end run configuration. Exactly one of secret_k (consistent
/// mode) or q_index (paper-compat mode) is set.
struct RunConfig {
    int n = 5;
    std::optional<int> secret_k;
    std::optional<int> q_index;
    int p_index = 1;
    int64_t shots = 16384;
    uint64_t seed = 0;
    double noise_eps = 0.0;
    double readout_flip = 0.0;
    int top_n = 100;
    std::optional<ConventionConfig> conventions;  // defaults per mode
    std::optional<std::string> curve_fixture_path;
    std::optional<std::string> calibration_csv_path;  // ranks 3n qubits into metadata

    bool compat_mode() const { return q_index.has_value(); }
    ConventionConfig effective_conventions() const;

    /// Compat mode recovers q_index^-1 (the inverse-index convention);
    /// consistent mode recovers secret_k itself.
    std::optional<int> expected_k() const;
};

struct AttackResult {
    EcdlpInstance instance;
    ConventionConfig conventions;
    OutcomeDistribution distribution;  // post-noise
    Counts counts;
    std::vector<AbPair> pairs;
    CandidateTable table;
    std::optional<int> k_true;
    SuccessReport report;
    ResultsDocument document;
};

/// instance -> circuit -> exact distribution -> noise -> sample -> parse ->
/// candidates -> success check.
AttackResult run_attack(const RunConfig& config);

/// Builds the ECDLP instance for a config: default (or fixture) curve,
/// scalar_mul for Q, index table sanity via the brute-force oracle.
EcdlpInstance build_instance(const RunConfig& config);

}  // namespace ecshor
