#include "ecshor/pipeline.hpp"

#include <fstream>
#include <numeric>
#include <sstream>

#include "ecshor/calibration.hpp"
#include "ecshor/circuit.hpp"

namespace ecshor {

ConventionConfig RunConfig::effective_conventions() const {
    if (conventions) return *conventions;
    return compat_mode() ? ConventionConfig::paper_compat() : ConventionConfig::consistent();
}

std::optional<int> RunConfig::expected_k() const {
    const int order = 1 << n;
    if (compat_mode()) {
        if (std::gcd(*q_index, order) != 1) return std::nullopt;
        return static_cast<int>(mod_inverse(*q_index, order));
    }
    return secret_k;
}

EcdlpInstance build_instance(const RunConfig& config) {
    const int order = 1 << config.n;
    SubgroupEncoding enc;
    if (config.curve_fixture_path) {
        std::ifstream in(*config.curve_fixture_path, std::ios::binary);
        if (!in) throw Error("cannot open curve fixture: " + *config.curve_fixture_path);
        std::ostringstream buf;
        buf << in.rdbuf();
        enc = load_curve_fixture_json(buf.str());
        if (enc.order != order)
            throw Error("curve fixture order " + std::to_string(enc.order) + " != 2^n = " +
                        std::to_string(order));
    } else {
        const auto& dc = default_curve(order);
        enc = build_encoding(dc.curve, dc.generator, order);
    }

    EcdlpInstance inst;
    inst.p_index = config.p_index % order;

    if (config.compat_mode()) {
        inst.q_index = *config.q_index % order;
    } else {
        const int k = *config.secret_k % order;
        inst.secret_k = k;
        // Q = k*P on the actual curve, then back through the index table
        Point p_point = enc.table[inst.p_index];
        Point q_point = scalar_mul(enc.curve, k, p_point);
        inst.q_index = discrete_log_bruteforce(enc, q_point);
    }
    inst.encoding = std::move(enc);
    return inst;
}

AttackResult run_attack(const RunConfig& config) {
    if (config.secret_k.has_value() == config.q_index.has_value())
        throw Error("exactly one of secret_k (consistent) or q_index (paper-compat) must be set");
    if (config.shots < 1) throw Error("shots must be >= 1");
    if (config.n < 1 || config.n > 8) throw Error("n must be in [1, 8]");

    AttackResult result;
    result.conventions = config.effective_conventions();
    result.instance = build_instance(config);

    Circuit circuit =
        build_shor_circuit(config.n, result.instance.p_index, result.instance.q_index, result.conventions);
    result.distribution = run_exact(circuit);
    if (config.noise_eps > 0.0 || config.readout_flip > 0.0)
        result.distribution = apply_noise(result.distribution, config.noise_eps, config.readout_flip);
    result.counts = sample(result.distribution, config.shots, config.seed, result.conventions);
    result.pairs = parse_counts(result.counts, config.n, result.conventions);
    result.table = extract_candidates(result.pairs, 1 << config.n, config.top_n);
    result.k_true = config.expected_k();
    result.report = result.k_true ? success_check(result.table, *result.k_true) : SuccessReport{};

    ResultsDocument doc;
    doc.experiment = "ECDLP_" + std::to_string(1 << config.n) + "pts_Shors";
    doc.backend = "ecshor_statevector";
    doc.shots = config.shots;
    doc.counts = result.counts.map;
    if (config.calibration_csv_path) {
        std::ifstream in(*config.calibration_csv_path, std::ios::binary);
        if (!in) throw Error("cannot open calibration CSV: " + *config.calibration_csv_path);
        std::ostringstream buf;
        buf << in.rdbuf();
        doc.physical_qubits = rank_qubits(parse_calibration_csv(buf.str()), 3 * config.n);
    }
    ResultsExtensions ext;
    ext.n = config.n;
    ext.mode = config.compat_mode() ? "paper-compat" : "consistent";
    ext.p_index = result.instance.p_index;
    ext.q_index = result.instance.q_index;
    ext.secret_k = result.k_true;
    ext.seed = config.seed;
    ext.noise_eps = config.noise_eps;
    ext.readout_flip = config.readout_flip;
    ext.conventions = result.conventions;
    ext.version = "1";
    doc.extensions = ext;
    result.document = std::move(doc);
    return result;
}

}  // namespace ecshor
