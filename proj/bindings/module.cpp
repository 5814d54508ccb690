#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ecshor/analysis.hpp"
#include "ecshor/calibration.hpp"
#include "ecshor/circuit.hpp"
#include "ecshor/ecgroup.hpp"
#include "ecshor/pipeline.hpp"
#include "ecshor/postprocess.hpp"
#include "ecshor/results_io.hpp"
#include "ecshor/simulator.hpp"

namespace py = pybind11;
using namespace ecshor;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact-simulation laboratory for a Shor-style ECDLP attack";

    py::register_exception<Error>(m, "EcshorError");

    py::enum_<HalvesOrder>(m, "HalvesOrder")
        .value("b_high", HalvesOrder::b_high)
        .value("a_high", HalvesOrder::a_high);

    py::class_<ConventionConfig>(m, "ConventionConfig")
        .def(py::init<>())
        .def_readwrite("qft_final_swaps", &ConventionConfig::qft_final_swaps)
        .def_readwrite("qft_exponent_sign", &ConventionConfig::qft_exponent_sign)
        .def_readwrite("qft_b_conjugate", &ConventionConfig::qft_b_conjugate)
        .def_readwrite("register_halves_order", &ConventionConfig::register_halves_order)
        .def_readwrite("postparse_endian_flip", &ConventionConfig::postparse_endian_flip)
        .def_static("consistent", &ConventionConfig::consistent)
        .def_static("paper_compat", &ConventionConfig::paper_compat)
        .def_static("from_preset_name", &ConventionConfig::from_preset_name)
        .def("describe", &ConventionConfig::describe)
        .def("__eq__", [](const ConventionConfig& a, const ConventionConfig& b) { return a == b; })
        .def("__repr__", [](const ConventionConfig& c) {
            return "ConventionConfig(" + c.describe() + ")";
        });

    py::class_<CurveParams>(m, "CurveParams")
        .def(py::init([](int64_t p, int64_t a, int64_t b) { return CurveParams{p, a, b}; }),
             py::arg("p"), py::arg("a"), py::arg("b"))
        .def_readwrite("p", &CurveParams::p)
        .def_readwrite("a", &CurveParams::a)
        .def_readwrite("b", &CurveParams::b);

    py::class_<Point>(m, "Point")
        .def_static("inf", &Point::inf)
        .def_static("at", &Point::at, py::arg("x"), py::arg("y"))
        .def_readonly("infinity", &Point::infinity)
        .def_readonly("x", &Point::x)
        .def_readonly("y", &Point::y)
        .def("__eq__", [](const Point& a, const Point& b) { return a == b; })
        .def("__repr__", [](const Point& p) {
            if (p.infinity) return std::string("Point.inf()");
            return "Point(" + std::to_string(p.x) + ", " + std::to_string(p.y) + ")";
        });

    py::class_<SubgroupEncoding>(m, "SubgroupEncoding")
        .def_readonly("curve", &SubgroupEncoding::curve)
        .def_readonly("generator", &SubgroupEncoding::generator)
        .def_readonly("order", &SubgroupEncoding::order)
        .def_readonly("table", &SubgroupEncoding::table)
        .def("index_of", &SubgroupEncoding::index_of);

    m.def("point_add", &point_add);
    m.def("scalar_mul", &scalar_mul);
    m.def("is_on_curve", &is_on_curve);
    m.def("build_encoding", &build_encoding, py::arg("curve"), py::arg("generator"), py::arg("order"));
    m.def("discrete_log_bruteforce", &discrete_log_bruteforce);
    m.def(
        "default_curve",
        [](int order) {
            const auto& dc = default_curve(order);
            return py::make_tuple(dc.curve, dc.generator);
        },
        py::arg("order") = 32);
    m.def("curve_fixture_json", &curve_fixture_json);
    m.def("load_curve_fixture_json", &load_curve_fixture_json);

    py::class_<Circuit>(m, "Circuit")
        .def_property_readonly("n", [](const Circuit& c) { return c.layout.n; })
        .def_property_readonly("num_gates", [](const Circuit& c) { return c.gates.size(); })
        .def("dump", [](const Circuit& c) { return dump(c); });

    m.def("build_shor_circuit", &build_shor_circuit, py::arg("n"), py::arg("p_index"),
          py::arg("q_index"), py::arg("conventions"));

    py::class_<OutcomeDistribution>(m, "OutcomeDistribution")
        .def_readonly("n", &OutcomeDistribution::n)
        .def_readonly("probs", &OutcomeDistribution::probs)
        .def("at", [](const OutcomeDistribution& d, int a, int b) { return d.at(a, b); })
        .def("total", &OutcomeDistribution::total);

    py::class_<Counts>(m, "Counts")
        .def_readonly("shots", &Counts::shots)
        .def_readonly("map", &Counts::map);

    m.def("run_exact", &run_exact);
    m.def("analytic_distribution", &analytic_distribution, py::arg("n"), py::arg("k_eff"),
          py::arg("conv"));
    m.def("sample", &sample, py::arg("dist"), py::arg("shots"), py::arg("seed"), py::arg("conv"));
    m.def("apply_noise", &apply_noise, py::arg("dist"), py::arg("epsilon"), py::arg("readout_flip"));
    m.def("parse_bitstring", &parse_bitstring, py::arg("bits"), py::arg("n"), py::arg("conv"));
    m.def("render_outcome", &render_outcome, py::arg("a"), py::arg("b"), py::arg("n"),
          py::arg("conv"));
    m.def("calibrate_conventions", &calibrate_conventions, py::arg("n"));

    py::class_<AbPair>(m, "AbPair")
        .def_readonly("a", &AbPair::a)
        .def_readonly("b", &AbPair::b)
        .def_readonly("count", &AbPair::count);

    py::class_<Candidate>(m, "Candidate")
        .def_readonly("pair", &Candidate::pair)
        .def_readonly("k", &Candidate::k);

    py::class_<CandidateTable>(m, "CandidateTable")
        .def_readonly("entries", &CandidateTable::entries)
        .def_readonly("top_n", &CandidateTable::top_n);

    py::class_<SuccessReport>(m, "SuccessReport")
        .def_readonly("found", &SuccessReport::found)
        .def_readonly("rank", &SuccessReport::rank);

    m.def("mod_inverse", &mod_inverse, py::arg("b"), py::arg("n"));
    m.def(
        "parse_counts",
        [](const std::map<std::string, int64_t>& counts, int64_t shots, int n,
           const ConventionConfig& conv) {
            Counts c;
            c.shots = shots;
            c.map = counts;
            return parse_counts(c, n, conv);
        },
        py::arg("counts"), py::arg("shots"), py::arg("n"), py::arg("conv"));
    m.def("extract_candidates", &extract_candidates, py::arg("pairs"), py::arg("n_mod"),
          py::arg("top_n"));
    m.def("aggregate_k_histogram", &aggregate_k_histogram);
    m.def("success_check", &success_check);
    m.def("format_report", &format_report);
    m.def("candidates_csv", &candidates_csv);

    py::class_<RunConfig>(m, "RunConfig")
        .def(py::init<>())
        .def_readwrite("n", &RunConfig::n)
        .def_readwrite("secret_k", &RunConfig::secret_k)
        .def_readwrite("q_index", &RunConfig::q_index)
        .def_readwrite("p_index", &RunConfig::p_index)
        .def_readwrite("shots", &RunConfig::shots)
        .def_readwrite("seed", &RunConfig::seed)
        .def_readwrite("noise_eps", &RunConfig::noise_eps)
        .def_readwrite("readout_flip", &RunConfig::readout_flip)
        .def_readwrite("top_n", &RunConfig::top_n)
        .def_readwrite("conventions", &RunConfig::conventions)
        .def_readwrite("curve_fixture_path", &RunConfig::curve_fixture_path)
        .def_readwrite("calibration_csv_path", &RunConfig::calibration_csv_path)
        .def("expected_k", &RunConfig::expected_k);

    py::class_<AttackResult>(m, "AttackResult")
        .def_readonly("conventions", &AttackResult::conventions)
        .def_readonly("distribution", &AttackResult::distribution)
        .def_readonly("counts", &AttackResult::counts)
        .def_readonly("pairs", &AttackResult::pairs)
        .def_readonly("table", &AttackResult::table)
        .def_readonly("k_true", &AttackResult::k_true)
        .def_readonly("report", &AttackResult::report)
        .def_property_readonly("results_json",
                               [](const AttackResult& r) { return to_json(r.document); });

    m.def("run_attack", &run_attack, py::arg("config"));

    m.def("results_roundtrip", [](const std::string& text) { return to_json(from_json(text)); });

    py::class_<QubitCalRow>(m, "QubitCalRow")
        .def_readonly("qubit", &QubitCalRow::qubit)
        .def_readonly("sx_error", &QubitCalRow::sx_error)
        .def_readonly("t1_us", &QubitCalRow::t1_us)
        .def_readonly("t2_us", &QubitCalRow::t2_us);

    m.def("parse_calibration_csv", &parse_calibration_csv);
    m.def("rank_qubits", &rank_qubits, py::arg("rows"), py::arg("n"));
}
