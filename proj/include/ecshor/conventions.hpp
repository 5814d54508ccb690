#pragma once

#include <string>
#include <vector>

namespace ecshor {

/// Which register the parser reads from the high half of the (post-flip)
/// bitstring. The raw classical string always renders msb-first with the
/// b register in the high classical bits, mirroring measure(a -> c[0:n)),
/// measure(b -> c[n:2n)).
enum class HalvesOrder { b_high, a_high };

/// The endianness/sign choices the whole pipeline hinges on. The raw
/// bitstring render order is fixed (classical-msb-first); everything else
/// is a knob searched by calibrate_conventions.
///
/// qft_b_conjugate applies the opposite exponent sign to register b's QFT.
/// With equal signs on both registers the interference ridge is v = +q*u
/// and the recovery map (-a)*b^-1 lands on -q or -q^-1 for every pure
/// relabeling of the measured bits; the conjugate-b variant (the form used
/// in Shor's discrete-log algorithm, which inverts one register) flips the
/// ridge to v = -q*u, under which recovery of the true scalar is possible.
struct ConventionConfig {
    bool qft_final_swaps = false;
    int qft_exponent_sign = +1;  // sign for register a's QFT
    bool qft_b_conjugate = true;
    HalvesOrder register_halves_order = HalvesOrder::b_high;
    bool postparse_endian_flip = true;

    bool operator==(const ConventionConfig&) const = default;

    /// Calibrated self-consistent preset: a noiseless attack on a
    /// consistent instance decodes every invertible outcome to the true k.
    static ConventionConfig consistent();

    /// Compat parse: same settings except the a value is read from the
    /// high half. Recovers q_index^-1 (23 -> 7).
    static ConventionConfig paper_compat();

    static ConventionConfig from_preset_name(const std::string& name);
    std::string describe() const;
};

/// Relative sign of the ridge relation v = ridge_sign * k_eff * u in QFT
/// output coordinates implied by the QFT signs.
inline int ridge_sign(const ConventionConfig& c) { return c.qft_b_conjugate ? -1 : +1; }

}  // namespace ecshor
