#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ecshor/conventions.hpp"
#include "ecshor/errors.hpp"
#include "ecshor/simulator.hpp"

namespace ecshor {

/// Optional metadata appended by this tool; documents from other tools
/// (lacking it) still load.
struct ResultsExtensions {
    int n = 5;
    std::string mode;  // "consistent" or "paper-compat"
    int p_index = 1;
    int q_index = 0;
    std::optional<int> secret_k;
    uint64_t seed = 0;
    double noise_eps = 0.0;
    double readout_flip = 0.0;
    ConventionConfig conventions;
    std::string version;
};

/// The interchange schema: experiment/backend/physical_qubits/shots/counts,
/// plus the additive extensions block. Serialization is canonical (fixed
/// field order, sorted counts keys, integer-only payload) so save/load
/// round-trips byte-identically.
struct ResultsDocument {
    std::string experiment;
    std::string backend;
    std::vector<int> physical_qubits;
    int64_t shots = 0;
    std::map<std::string, int64_t> counts;
    std::optional<ResultsExtensions> extensions;

    Counts to_counts() const;
};

std::string to_json(const ResultsDocument& doc);
ResultsDocument from_json(const std::string& text);  // throws SchemaError

void save_results(const ResultsDocument& doc, const std::string& path);
ResultsDocument load_results(const std::string& path);

/// Uniform key width check; throws SchemaError. Returns bits-per-register n.
int counts_key_width_bits(const ResultsDocument& doc);

}  // namespace ecshor
