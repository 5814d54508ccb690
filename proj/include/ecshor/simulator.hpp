#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ecshor/circuit.hpp"
#include "ecshor/conventions.hpp"

namespace ecshor {

struct StateVector {
    int n_qubits = 0;
    std::vector<std::complex<double>> amps;

    static StateVector zero_state(int n_qubits);
    double norm() const;
};

/// Exact probability table over the measured 2n bits, indexed by the
/// *parsed* pair: index = (a << n) | b where (a, b) is what parse_counts
/// would report for the rendered bitstring. Keeping run_exact, the analytic
/// ridge and the noise channel in one coordinate system; the raw bitstring
/// only exists at the sampling boundary.
struct OutcomeDistribution {
    int n = 0;
    std::vector<double> probs;  // size 2^(2n)

    int size_per_reg() const { return 1 << n; }
    double at(int a, int b) const { return probs[(static_cast<size_t>(a) << n) | b]; }
    double& at(int a, int b) { return probs[(static_cast<size_t>(a) << n) | b]; }
    double total() const;
};

struct Counts {
    int64_t shots = 0;
    std::map<std::string, int64_t> map;  // 2n-char '0'/'1' keys
};

int bit_reverse(int value, int n);

/// Raw classical bitstring for measured register values (msb-first, b in
/// the high classical bits).
std::string render_measured(int a_meas, int b_meas, int n);

/// Bitstring -> parsed (a, b) per the conventions: optional whole-string
/// endian flip, split in halves, msb-first integer per half, halves order.
std::pair<int, int> parse_bitstring(const std::string& bits, int n, const ConventionConfig& conv);

/// Exact inverse of parse_bitstring: parsed (a, b) -> raw bitstring.
std::string render_outcome(int a, int b, int n, const ConventionConfig& conv);

/// Applies one gate to the state (unitary; Barrier and MeasureRegister are
/// no-ops here). Throws WidthMismatch if the state width does not match.
void apply_gate_inplace(StateVector& state, const Gate& gate, const RegisterLayout& layout);
StateVector apply_gate(StateVector state, const Gate& gate, const RegisterLayout& layout);

/// Runs all gates on |0...0>, marginalizes the point register, and reports
/// the parsed-coordinate outcome distribution.
OutcomeDistribution run_exact(const Circuit& circuit);

/// Closed-form ridge: uniform 1/2^n over the 2^n QFT-output pairs with
/// v = ridge_sign * k_eff * u (mod 2^n), pushed through the same
/// render/parse coordinate map as run_exact.
OutcomeDistribution analytic_distribution(int n, int k_eff, const ConventionConfig& conv);

/// Exhaustively tries the finite convention space; keeps configurations
/// under which, for every k in Z_2^n, every invertible exact-support
/// outcome of the consistent instance (p=1, q=k) decodes to k. Throws
/// NoConsistentConvention when none passes.
std::vector<ConventionConfig> calibrate_conventions_all(int n);
ConventionConfig calibrate_conventions(int n);

/// Seeded multinomial draw. RNG contract: std::mt19937_64 seeded with
/// `seed`; each shot consumes one 53-bit uniform ((x >> 11) * 2^-53) and
/// inverts the CDF taken in ascending index order. Reproducible across
/// platforms. Keys are rendered per the conventions.
Counts sample(const OutcomeDistribution& dist, int64_t shots, uint64_t seed,
              const ConventionConfig& conv);

/// p' = (1-eps) p + eps * uniform, then an independent per-bit readout
/// flip channel on the outcome labels (a bit permutation away from the
/// rendered bits, so applied directly on index bits), renormalized.
OutcomeDistribution apply_noise(const OutcomeDistribution& dist, double epsilon,
                                double readout_flip);

}  // namespace ecshor
