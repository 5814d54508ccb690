#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "ecshor/analysis.hpp"
#include "ecshor/calibration.hpp"
#include "ecshor/circuit.hpp"
#include "ecshor/ecgroup.hpp"
#include "ecshor/pipeline.hpp"
#include "ecshor/postprocess.hpp"
#include "ecshor/results_io.hpp"
#include "ecshor/simulator.hpp"

namespace fs = std::filesystem;
using namespace ecshor;

namespace {

constexpr int kExitHit = 0;
constexpr int kExitConfigError = 2;
constexpr int kExitMiss = 3;

struct CommonOpts {
    int bits = 5;
    std::optional<int> k;
    std::optional<int> q_index;
    int p_index = 1;
    int64_t shots = 16384;
    uint64_t seed = 0;
    double noise_eps = 0.0;
    double readout_flip = 0.0;
    int top_n = 100;
    std::string preset;
    std::string out_dir = "out";
    std::string curve_fixture;
    std::string cal_csv;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--bits", o.bits, "Bits per register (register a/b width)")->default_val(5);
    auto* k_opt = cmd->add_option("--k", o.k, "Secret scalar (consistent mode)");
    auto* q_opt = cmd->add_option("--q-index", o.q_index, "Public-point index taken verbatim (paper-compat mode)");
    k_opt->excludes(q_opt);
    cmd->add_option("--p-index", o.p_index, "Generator index")->default_val(1);
    cmd->add_option("--shots", o.shots, "Measurement shots")->default_val(16384);
    cmd->add_option("--seed", o.seed, "Sampling seed")->default_val(0);
    cmd->add_option("--noise-eps", o.noise_eps, "Depolarizing mix fraction")->default_val(0.0);
    cmd->add_option("--readout-flip", o.readout_flip, "Per-bit readout flip probability")->default_val(0.0);
    cmd->add_option("--top", o.top_n, "Candidate table size")->default_val(100);
    cmd->add_option("--preset", o.preset, "Convention preset: consistent | paper-compat");
    cmd->add_option("--out", o.out_dir, "Output directory")->default_val("out");
    cmd->add_option("--curve", o.curve_fixture, "Curve fixture JSON path");
    cmd->add_option("--cal-csv", o.cal_csv, "Backend calibration CSV (ranked into metadata)");
}

RunConfig to_run_config(const CommonOpts& o) {
    RunConfig cfg;
    cfg.n = o.bits;
    cfg.secret_k = o.k;
    cfg.q_index = o.q_index;
    cfg.p_index = o.p_index;
    cfg.shots = o.shots;
    cfg.seed = o.seed;
    cfg.noise_eps = o.noise_eps;
    cfg.readout_flip = o.readout_flip;
    cfg.top_n = o.top_n;
    if (!o.preset.empty()) cfg.conventions = ConventionConfig::from_preset_name(o.preset);
    if (!o.curve_fixture.empty()) cfg.curve_fixture_path = o.curve_fixture;
    if (!o.cal_csv.empty()) cfg.calibration_csv_path = o.cal_csv;
    return cfg;
}

void write_text(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open for writing: " + path.string());
    out << text;
}

int cmd_attack(const CommonOpts& o) {
    if (!o.k && !o.q_index) throw Error("one of --k or --q-index is required");
    RunConfig cfg = to_run_config(o);
    AttackResult result = run_attack(cfg);

    fs::create_directories(o.out_dir);
    save_results(result.document, (fs::path(o.out_dir) / "results.json").string());
    int k_true = result.k_true.value_or(-1);
    write_text(fs::path(o.out_dir) / "candidates.csv", candidates_csv(result.table, k_true));
    write_text(fs::path(o.out_dir) / "curve.json", curve_fixture_json(result.instance.encoding));

    std::cout << "mode: " << (cfg.compat_mode() ? "paper-compat" : "consistent")
              << "  n=" << cfg.n << "  p_index=" << result.instance.p_index
              << "  q_index=" << result.instance.q_index << "  shots=" << cfg.shots
              << "  seed=" << cfg.seed << "\n";
    std::cout << "conventions: " << result.conventions.describe() << "\n\n";
    if (result.k_true) {
        if (result.report.found)
            std::cout << "SUCCESS - k = " << *result.k_true << " found in top " << cfg.top_n
                      << " results (rank " << result.report.rank << ")\n\n";
        else
            std::cout << "WARNING - k = " << *result.k_true << " NOT found in top " << cfg.top_n
                      << " results\n\n";
    } else {
        std::cout << "NOTE - q_index not invertible mod 2^n; no recovery target\n\n";
    }
    std::cout << format_report(result.table, k_true);
    std::cout << "\nwrote " << (fs::path(o.out_dir) / "results.json").string() << ", candidates.csv, curve.json\n";
    return result.report.found ? kExitHit : kExitMiss;
}

int cmd_analyze(const CommonOpts& o, const std::string& input, std::optional<int> k_flag) {
    ResultsDocument doc = load_results(input);
    const int n = counts_key_width_bits(doc);
    const int order = 1 << n;

    ConventionConfig conv = ConventionConfig::paper_compat();
    if (!o.preset.empty())
        conv = ConventionConfig::from_preset_name(o.preset);
    else if (doc.extensions)
        conv = doc.extensions->conventions;

    int k_target = 7;  // default target for documents lacking extensions
    if (k_flag) k_target = *k_flag;
    else if (doc.extensions && doc.extensions->secret_k) k_target = *doc.extensions->secret_k;

    auto pairs = parse_counts(doc.to_counts(), n, conv);
    auto table = extract_candidates(pairs, order, o.top_n);
    auto report = success_check(table, k_target);

    fs::create_directories(o.out_dir);
    write_text(fs::path(o.out_dir) / "candidates.csv", candidates_csv(table, k_target));
    write_figures(all_figures(pairs, order, k_target, conv), o.out_dir, doc.experiment);

    auto hist = aggregate_k_histogram(pairs, order);
    auto [inv_total, noninv_total] = efficiency_split(pairs, order);

    std::cout << "experiment: " << doc.experiment << "  backend: " << doc.backend
              << "  shots=" << doc.shots << "\n";
    std::cout << "conventions: " << conv.describe() << "\n\n";
    if (report.found)
        std::cout << "SUCCESS - k = " << k_target << " found in top " << o.top_n
                  << " results (rank " << report.rank << ")\n\n";
    else
        std::cout << "WARNING - k = " << k_target << " NOT found in top " << o.top_n << " results\n\n";
    std::cout << format_report(table, k_target);
    std::cout << "\nk-histogram total for k=" << k_target << ": " << hist[k_target] << "\n";
    std::cout << "invertible-b counts: " << inv_total << ", wasted: " << noninv_total << "\n";
    std::cout << "wrote candidates.csv and figures/ under " << o.out_dir << "\n";
    return report.found ? kExitHit : kExitMiss;
}

int cmd_exact(const CommonOpts& o) {
    if (!o.k && !o.q_index) throw Error("one of --k or --q-index is required");
    RunConfig cfg = to_run_config(o);
    ConventionConfig conv = cfg.effective_conventions();
    EcdlpInstance inst = build_instance(cfg);
    const int order = 1 << cfg.n;

    Circuit circuit = build_shor_circuit(cfg.n, inst.p_index, inst.q_index, conv);
    OutcomeDistribution exact = run_exact(circuit);

    std::optional<OutcomeDistribution> analytic;
    if (std::gcd(inst.p_index, order) == 1) {
        int k_eff = static_cast<int>(int64_t{inst.q_index} * mod_inverse(inst.p_index, order) % order);
        analytic = analytic_distribution(cfg.n, k_eff, conv);
    }

    auto dist_csv = [&](const OutcomeDistribution& d) {
        std::ostringstream out;
        out << "a,b,probability\n";
        for (int a = 0; a < order; ++a)
            for (int b = 0; b < order; ++b) {
                char buf[40];
                std::snprintf(buf, sizeof(buf), "%.17g", d.at(a, b));
                out << a << ',' << b << ',' << buf << '\n';
            }
        return out.str();
    };

    fs::create_directories(o.out_dir);
    write_text(fs::path(o.out_dir) / "exact.csv", dist_csv(exact));
    if (analytic) {
        write_text(fs::path(o.out_dir) / "analytic.csv", dist_csv(*analytic));
        double max_abs = 0.0;
        for (size_t i = 0; i < exact.probs.size(); ++i)
            max_abs = std::max(max_abs, std::abs(exact.probs[i] - analytic->probs[i]));
        std::cout << "max |exact - analytic| = " << max_abs << "\n";
    } else {
        std::cout << "p_index not invertible; analytic ridge skipped\n";
    }
    std::cout << "wrote exact distribution under " << o.out_dir << "\n";
    return 0;
}

int cmd_rank_qubits(const std::string& csv_path, int n) {
    std::ifstream in(csv_path, std::ios::binary);
    if (!in) throw Error("cannot open: " + csv_path);
    std::ostringstream buf;
    buf << in.rdbuf();
    auto ids = rank_qubits(parse_calibration_csv(buf.str()), n);
    std::cout << "Best physical qubits:";
    for (int id : ids) std::cout << ' ' << id;
    std::cout << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Shor-style ECDLP attack laboratory (exact statevector simulation)"};
    app.require_subcommand(1);

    CommonOpts attack_opts, analyze_opts, exact_opts;
    std::string analyze_input, rank_csv;
    std::optional<int> analyze_k;
    int rank_n = 15;

    auto* attack = app.add_subcommand("attack", "Run the full attack pipeline and persist results");
    add_common(attack, attack_opts);

    auto* analyze = app.add_subcommand("analyze", "Re-analyze a results JSON without re-simulation");
    analyze->add_option("input", analyze_input, "Results JSON path")->required();
    analyze->add_option("--k", analyze_k, "Recovery target (default: extensions, else 7)");
    analyze->add_option("--top", analyze_opts.top_n, "Candidate table size")->default_val(100);
    analyze->add_option("--preset", analyze_opts.preset, "Convention preset override");
    analyze->add_option("--out", analyze_opts.out_dir, "Output directory")->default_val("out");

    auto* exact = app.add_subcommand("exact", "Dump the exact and analytic outcome distributions");
    add_common(exact, exact_opts);

    auto* rank = app.add_subcommand("rank-qubits", "Rank physical qubits from a calibration CSV");
    rank->add_option("csv", rank_csv, "Calibration CSV path")->required();
    rank->add_option("-n,--n", rank_n, "How many qubits to pick")->default_val(15);

    try {
        app.parse(argc, argv);
        if (attack->parsed()) return cmd_attack(attack_opts);
        if (analyze->parsed()) return cmd_analyze(analyze_opts, analyze_input, analyze_k);
        if (exact->parsed()) return cmd_exact(exact_opts);
        if (rank->parsed()) return cmd_rank_qubits(rank_csv, rank_n);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitConfigError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfigError;
    }
    return kExitConfigError;
}
