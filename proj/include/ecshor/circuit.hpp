#pragma once

#include <string>
#include <variant>
#include <vector>

#include "ecshor/conventions.hpp"
#include "ecshor/errors.hpp"

namespace ecshor {

enum class Reg { a, b, point };

/// Three disjoint contiguous n-qubit registers: a = [0,n), b = [n,2n),
/// point = [2n,3n); 2n classical bits.
struct RegisterLayout {
    int n = 5;

    int total_qubits() const { return 3 * n; }
    int classical_bits() const { return 2 * n; }
    int reg_offset(Reg r) const {
        switch (r) {
            case Reg::a: return 0;
            case Reg::b: return n;
            default: return 2 * n;
        }
    }
    bool operator==(const RegisterLayout&) const = default;
};

struct HadamardAll {
    Reg reg;
};

/// |x> -> |x + c mod 2^n> on the target register when the control qubit is 1.
struct ControlledAddConst {
    int control_qubit;  // absolute qubit index
    Reg target;
    int constant;  // 1 <= c < 2^n (c = 0 gates are never emitted)
};

struct QftOnRegister {
    Reg reg;
    bool include_final_swaps;
    int exponent_sign;  // +1 or -1
};

struct Barrier {};

struct MeasureRegister {
    Reg reg;
    int classical_offset;
};

using Gate = std::variant<HadamardAll, ControlledAddConst, QftOnRegister, Barrier, MeasureRegister>;

struct Circuit {
    RegisterLayout layout;
    ConventionConfig conventions;
    std::vector<Gate> gates;
};

/// The permutation x -> (x + c) mod 2^n as an index map.
std::vector<int> add_const_permutation(int c, int n);

/// Controlled constant-adders realizing |a>|b>|0> -> |a>|b>|a*p + b*q mod 2^n>:
/// for each bit i of a, add (p*2^i) mod 2^n; then the same for b with q.
/// Zero constants are skipped.
std::vector<Gate> build_oracle(const RegisterLayout& layout, int p_index, int q_index);

/// H(a), H(b), oracle, barrier, QFT(a), QFT(b), measure a -> c[0,n),
/// measure b -> c[n,2n). QFT flags come from the conventions; register b's
/// QFT sign is conjugated when the conventions say so.
Circuit build_shor_circuit(int n, int p_index, int q_index, const ConventionConfig& conventions);

/// One gate per line, e.g. `H a`, `CADD c=14 ctrl=b[1]`, `QFT a noswap`.
std::string dump(const Circuit& circuit);

}  // namespace ecshor
