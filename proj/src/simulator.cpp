#include "ecshor/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <random>

namespace ecshor {

StateVector StateVector::zero_state(int n_qubits) {
    StateVector sv;
    sv.n_qubits = n_qubits;
    sv.amps.assign(size_t{1} << n_qubits, {0.0, 0.0});
    sv.amps[0] = {1.0, 0.0};
    return sv;
}

double StateVector::norm() const {
    double s = 0.0;
    for (const auto& a : amps) s += std::norm(a);
    return std::sqrt(s);
}

double OutcomeDistribution::total() const {
    return std::accumulate(probs.begin(), probs.end(), 0.0);
}

int bit_reverse(int value, int n) {
    int r = 0;
    for (int i = 0; i < n; ++i)
        if (value >> i & 1) r |= 1 << (n - 1 - i);
    return r;
}

namespace {

std::string msb_bits(int value, int n) {
    std::string s(n, '0');
    for (int i = 0; i < n; ++i)
        if (value >> (n - 1 - i) & 1) s[i] = '1';
    return s;
}

int parse_msb(const std::string& s) {
    int v = 0;
    for (char c : s) v = v << 1 | (c - '0');
    return v;
}

}  // namespace

std::string render_measured(int a_meas, int b_meas, int n) {
    return msb_bits(b_meas, n) + msb_bits(a_meas, n);
}

std::pair<int, int> parse_bitstring(const std::string& bits, int n, const ConventionConfig& conv) {
    if (static_cast<int>(bits.size()) != 2 * n)
        throw MalformedBitstring("expected width " + std::to_string(2 * n) + ", got key '" + bits + "'");
    for (char c : bits)
        if (c != '0' && c != '1') throw MalformedBitstring("non-binary character in key '" + bits + "'");
    std::string s = bits;
    if (conv.postparse_endian_flip) std::reverse(s.begin(), s.end());
    int high = parse_msb(s.substr(0, n));
    int low = parse_msb(s.substr(n));
    if (conv.register_halves_order == HalvesOrder::a_high) return {high, low};
    return {low, high};
}

std::string render_outcome(int a, int b, int n, const ConventionConfig& conv) {
    int high = conv.register_halves_order == HalvesOrder::a_high ? a : b;
    int low = conv.register_halves_order == HalvesOrder::a_high ? b : a;
    std::string s = msb_bits(high, n) + msb_bits(low, n);
    if (conv.postparse_endian_flip) std::reverse(s.begin(), s.end());
    return s;
}

namespace {

void apply_hadamard_layer(StateVector& sv, int offset, int width) {
    const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
    const size_t size = sv.amps.size();
    for (int q = offset; q < offset + width; ++q) {
        const size_t bit = size_t{1} << q;
        for (size_t idx = 0; idx < size; ++idx) {
            if (idx & bit) continue;
            auto a0 = sv.amps[idx];
            auto a1 = sv.amps[idx | bit];
            sv.amps[idx] = (a0 + a1) * inv_sqrt2;
            sv.amps[idx | bit] = (a0 - a1) * inv_sqrt2;
        }
    }
}

void apply_controlled_phase(StateVector& sv, int q1, int q2, double angle) {
    const size_t b1 = size_t{1} << q1;
    const size_t b2 = size_t{1} << q2;
    const std::complex<double> phase = std::polar(1.0, angle);
    for (size_t idx = 0; idx < sv.amps.size(); ++idx)
        if ((idx & b1) && (idx & b2)) sv.amps[idx] *= phase;
}

void apply_swap(StateVector& sv, int q1, int q2) {
    const size_t b1 = size_t{1} << q1;
    const size_t b2 = size_t{1} << q2;
    for (size_t idx = 0; idx < sv.amps.size(); ++idx)
        if ((idx & b1) && !(idx & b2)) std::swap(sv.amps[idx], sv.amps[(idx & ~b1) | b2]);
}

void apply_controlled_add(StateVector& sv, const RegisterLayout& layout, const ControlledAddConst& g) {
    const int n = layout.n;
    const int offset = layout.reg_offset(g.target);
    const int reg_size = 1 << n;
    const size_t ctrl = size_t{1} << g.control_qubit;
    const size_t low_count = size_t{1} << offset;
    const size_t high_count = sv.amps.size() >> (offset + n);
    std::vector<std::complex<double>> tmp(reg_size);
    for (size_t high = 0; high < high_count; ++high) {
        for (size_t low = 0; low < low_count; ++low) {
            size_t base = (high << (offset + n)) | low;
            if (!(base & ctrl)) continue;  // control must sit outside the target register
            for (int x = 0; x < reg_size; ++x) tmp[(x + g.constant) & (reg_size - 1)] = sv.amps[base | (static_cast<size_t>(x) << offset)];
            for (int x = 0; x < reg_size; ++x) sv.amps[base | (static_cast<size_t>(x) << offset)] = tmp[x];
        }
    }
}

void apply_qft(StateVector& sv, const RegisterLayout& layout, const QftOnRegister& g) {
    const int n = layout.n;
    const int offset = layout.reg_offset(g.reg);
    const double sign = g.exponent_sign >= 0 ? 1.0 : -1.0;
    for (int j = n - 1; j >= 0; --j) {
        apply_hadamard_layer(sv, offset + j, 1);
        for (int m = j - 1; m >= 0; --m)
            apply_controlled_phase(sv, offset + m, offset + j, sign * std::numbers::pi / double(1 << (j - m)));
    }
    if (g.include_final_swaps)
        for (int i = 0; i < n / 2; ++i) apply_swap(sv, offset + i, offset + n - 1 - i);
}

}  // namespace

void apply_gate_inplace(StateVector& state, const Gate& gate, const RegisterLayout& layout) {
    if (state.n_qubits != layout.total_qubits())
        throw WidthMismatch("state has " + std::to_string(state.n_qubits) + " qubits, layout wants " +
                            std::to_string(layout.total_qubits()));
    std::visit(
        [&](const auto& g) {
            using T = std::decay_t<decltype(g)>;
            if constexpr (std::is_same_v<T, HadamardAll>) {
                apply_hadamard_layer(state, layout.reg_offset(g.reg), layout.n);
            } else if constexpr (std::is_same_v<T, ControlledAddConst>) {
                apply_controlled_add(state, layout, g);
            } else if constexpr (std::is_same_v<T, QftOnRegister>) {
                apply_qft(state, layout, g);
            }
            // Barrier and MeasureRegister: markers, no unitary action.
        },
        gate);
}

StateVector apply_gate(StateVector state, const Gate& gate, const RegisterLayout& layout) {
    apply_gate_inplace(state, gate, layout);
    return state;
}

namespace {

// parsed index for measured register values, per conventions
std::vector<int> parsed_index_map(int n, const ConventionConfig& conv) {
    const int reg = 1 << n;
    std::vector<int> map(static_cast<size_t>(reg) * reg);
    for (int am = 0; am < reg; ++am) {
        for (int bm = 0; bm < reg; ++bm) {
            auto [a, b] = parse_bitstring(render_measured(am, bm, n), n, conv);
            map[(static_cast<size_t>(bm) << n) | am] = (a << n) | b;
        }
    }
    return map;
}

}  // namespace

OutcomeDistribution run_exact(const Circuit& circuit) {
    const int n = circuit.layout.n;
    StateVector sv = StateVector::zero_state(circuit.layout.total_qubits());
    for (const Gate& g : circuit.gates) apply_gate_inplace(sv, g, circuit.layout);

    const auto map = parsed_index_map(n, circuit.conventions);
    OutcomeDistribution dist;
    dist.n = n;
    dist.probs.assign(size_t{1} << (2 * n), 0.0);
    const size_t meas_mask = (size_t{1} << (2 * n)) - 1;
    for (size_t idx = 0; idx < sv.amps.size(); ++idx) {
        double p = std::norm(sv.amps[idx]);
        if (p == 0.0) continue;
        dist.probs[map[idx & meas_mask]] += p;  // point register marginalized
    }
    return dist;
}

OutcomeDistribution analytic_distribution(int n, int k_eff, const ConventionConfig& conv) {
    const int reg = 1 << n;
    const auto map = parsed_index_map(n, conv);
    OutcomeDistribution dist;
    dist.n = n;
    dist.probs.assign(size_t{1} << (2 * n), 0.0);
    const int rs = ridge_sign(conv);
    for (int u = 0; u < reg; ++u) {
        int v = ((rs * k_eff * u) % reg + reg) % reg;
        int am = conv.qft_final_swaps ? u : bit_reverse(u, n);
        int bm = conv.qft_final_swaps ? v : bit_reverse(v, n);
        dist.probs[map[(static_cast<size_t>(bm) << n) | am]] += 1.0 / reg;
    }
    return dist;
}

std::vector<ConventionConfig> calibrate_conventions_all(int n) {
    if (n < 1 || n > 4) throw Error("calibrate_conventions requires 1 <= n <= 4");
    const int reg = 1 << n;
    std::vector<ConventionConfig> passing;
    for (int sign : {+1, -1}) {
        for (bool bconj : {true, false}) {
            for (bool swaps : {false, true}) {
                for (bool flip : {true, false}) {
                    for (HalvesOrder halves : {HalvesOrder::b_high, HalvesOrder::a_high}) {
                        ConventionConfig cfg;
                        cfg.qft_final_swaps = swaps;
                        cfg.qft_exponent_sign = sign;
                        cfg.qft_b_conjugate = bconj;
                        cfg.register_halves_order = halves;
                        cfg.postparse_endian_flip = flip;
                        bool ok = true;
                        for (int k = 0; k < reg && ok; ++k) {
                            auto dist = run_exact(build_shor_circuit(n, 1, k, cfg));
                            bool any_invertible = false;
                            for (int a = 0; a < reg && ok; ++a) {
                                for (int b = 0; b < reg; ++b) {
                                    if (dist.at(a, b) < 1e-12) continue;
                                    if (std::gcd(b, reg) != 1) continue;
                                    any_invertible = true;
                                    int64_t inv = 0;
                                    for (int64_t c = 1; c < reg; c += 2)
                                        if (c * b % reg == 1) { inv = c; break; }
                                    int rec = static_cast<int>(((-int64_t{a} * inv) % reg + reg) % reg);
                                    if (rec != k) { ok = false; break; }
                                }
                            }
                            if (!any_invertible) ok = false;
                        }
                        if (ok) passing.push_back(cfg);
                    }
                }
            }
        }
    }
    if (passing.empty())
        throw NoConsistentConvention("no convention configuration achieves identity recovery");
    return passing;
}

ConventionConfig calibrate_conventions(int n) {
    auto passing = calibrate_conventions_all(n);
    auto preferred = ConventionConfig::consistent();
    for (const auto& cfg : passing)
        if (cfg == preferred) return cfg;
    return passing.front();
}

Counts sample(const OutcomeDistribution& dist, int64_t shots, uint64_t seed,
              const ConventionConfig& conv) {
    std::vector<double> cdf(dist.probs.size());
    double acc = 0.0;
    for (size_t i = 0; i < dist.probs.size(); ++i) {
        acc += dist.probs[i];
        cdf[i] = acc;
    }
    const double total = acc;

    std::mt19937_64 rng(seed);
    std::vector<int64_t> hits(dist.probs.size(), 0);
    for (int64_t s = 0; s < shots; ++s) {
        double u = static_cast<double>(rng() >> 11) * 0x1.0p-53 * total;
        auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        size_t idx = std::min<size_t>(it - cdf.begin(), cdf.size() - 1);
        ++hits[idx];
    }

    Counts counts;
    counts.shots = shots;
    const int reg = 1 << dist.n;
    for (size_t idx = 0; idx < hits.size(); ++idx) {
        if (!hits[idx]) continue;
        int a = static_cast<int>(idx >> dist.n);
        int b = static_cast<int>(idx) & (reg - 1);
        counts.map[render_outcome(a, b, dist.n, conv)] += hits[idx];
    }
    return counts;
}

OutcomeDistribution apply_noise(const OutcomeDistribution& dist, double epsilon,
                                double readout_flip) {
    OutcomeDistribution out = dist;
    const size_t size = out.probs.size();
    const double uniform = 1.0 / static_cast<double>(size);
    for (auto& p : out.probs) p = (1.0 - epsilon) * p + epsilon * uniform;
    if (readout_flip > 0.0) {
        std::vector<double> next(size);
        for (int bit = 0; bit < 2 * dist.n; ++bit) {
            const size_t mask = size_t{1} << bit;
            for (size_t idx = 0; idx < size; ++idx)
                next[idx] = (1.0 - readout_flip) * out.probs[idx] + readout_flip * out.probs[idx ^ mask];
            out.probs.swap(next);
        }
    }
    const double total = out.total();
    if (total > 0.0)
        for (auto& p : out.probs) p /= total;
    return out;
}

}  // namespace ecshor
