#include "ecshor/circuit.hpp"

#include <sstream>

namespace ecshor {

namespace {

const char* reg_name(Reg r) {
    switch (r) {
        case Reg::a: return "a";
        case Reg::b: return "b";
        default: return "p";
    }
}

}  // namespace

std::vector<int> add_const_permutation(int c, int n) {
    const int size = 1 << n;
    std::vector<int> perm(size);
    for (int x = 0; x < size; ++x) perm[x] = (x + c) & (size - 1);
    return perm;
}

std::vector<Gate> build_oracle(const RegisterLayout& layout, int p_index, int q_index) {
    const int n = layout.n;
    const int mask = (1 << n) - 1;
    std::vector<Gate> gates;
    for (int i = 0; i < n; ++i) {
        int constant = (p_index << i) & mask;
        if (constant) gates.push_back(ControlledAddConst{layout.reg_offset(Reg::a) + i, Reg::point, constant});
    }
    for (int i = 0; i < n; ++i) {
        int constant = (q_index << i) & mask;
        if (constant) gates.push_back(ControlledAddConst{layout.reg_offset(Reg::b) + i, Reg::point, constant});
    }
    return gates;
}

Circuit build_shor_circuit(int n, int p_index, int q_index, const ConventionConfig& conv) {
    Circuit circuit;
    circuit.layout = RegisterLayout{n};
    circuit.conventions = conv;
    auto& g = circuit.gates;
    g.push_back(HadamardAll{Reg::a});
    g.push_back(HadamardAll{Reg::b});
    auto oracle = build_oracle(circuit.layout, p_index, q_index);
    g.insert(g.end(), oracle.begin(), oracle.end());
    g.push_back(Barrier{});
    const int sign = conv.qft_exponent_sign;
    g.push_back(QftOnRegister{Reg::a, conv.qft_final_swaps, sign});
    g.push_back(QftOnRegister{Reg::b, conv.qft_final_swaps, conv.qft_b_conjugate ? -sign : sign});
    g.push_back(MeasureRegister{Reg::a, 0});
    g.push_back(MeasureRegister{Reg::b, n});
    return circuit;
}

std::string dump(const Circuit& circuit) {
    std::ostringstream out;
    const int n = circuit.layout.n;
    for (const Gate& gate : circuit.gates) {
        std::visit(
            [&](const auto& g) {
                using T = std::decay_t<decltype(g)>;
                if constexpr (std::is_same_v<T, HadamardAll>) {
                    out << "H " << reg_name(g.reg);
                } else if constexpr (std::is_same_v<T, ControlledAddConst>) {
                    Reg ctrl_reg = g.control_qubit < n ? Reg::a : (g.control_qubit < 2 * n ? Reg::b : Reg::point);
                    int bit = g.control_qubit % n;
                    out << "CADD c=" << g.constant << " ctrl=" << reg_name(ctrl_reg) << "[" << bit << "]";
                } else if constexpr (std::is_same_v<T, QftOnRegister>) {
                    out << "QFT " << reg_name(g.reg) << (g.include_final_swaps ? " swap" : " noswap");
                    if (g.exponent_sign < 0) out << " inv";
                } else if constexpr (std::is_same_v<T, Barrier>) {
                    out << "BARRIER";
                } else if constexpr (std::is_same_v<T, MeasureRegister>) {
                    out << "M " << reg_name(g.reg) << "→c[" << g.classical_offset << ".."
                        << g.classical_offset + n << ")";
                }
            },
            gate);
        out << "\n";
    }
    return out.str();
}

}  // namespace ecshor
