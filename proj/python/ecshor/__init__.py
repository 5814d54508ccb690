"""Exact-simulation laboratory for a Shor-style ECDLP attack on a toy curve."""

import os as _os

# In-tree runs (ctest) point this at the build directory holding _core.
_core_dir = _os.environ.get("ECSHOR_CORE_DIR")
if _core_dir:
    __path__.append(_core_dir)

from ._core import (  # noqa: F401,E402
    AbPair,
    AttackResult,
    Candidate,
    CandidateTable,
    ConventionConfig,
    Counts,
    CurveParams,
    Circuit,
    EcshorError,
    HalvesOrder,
    OutcomeDistribution,
    Point,
    QubitCalRow,
    RunConfig,
    SubgroupEncoding,
    SuccessReport,
    aggregate_k_histogram,
    analytic_distribution,
    apply_noise,
    build_encoding,
    build_shor_circuit,
    calibrate_conventions,
    candidates_csv,
    curve_fixture_json,
    default_curve,
    discrete_log_bruteforce,
    extract_candidates,
    format_report,
    is_on_curve,
    load_curve_fixture_json,
    mod_inverse,
    parse_bitstring,
    parse_calibration_csv,
    parse_counts,
    point_add,
    rank_qubits,
    render_outcome,
    results_roundtrip,
    run_attack,
    run_exact,
    sample,
    scalar_mul,
    success_check,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
