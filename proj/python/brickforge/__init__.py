"""Euler brick construction, verification and bounded counterexample search."""

from brickforge._core import (
    Brick,
    BrickReport,
    CellDiff,
    Decomposition,
    LegPair,
    PerfectCuboid,
    PythTriple,
    ScanHit,
    ScanKind,
    ScanReport,
    TableId,
    TableReproduction,
    corollary1,
    corollary2,
    decompose,
    derived_brick,
    enumerate_primitive,
    euclid,
    gcd,
    gcd3,
    isqrt,
    lift_pair,
    make_leg_pair,
    make_triple,
    max_safe_w_bound,
    normalize,
    perfect_from_counterexample,
    perfect_from_parts,
    perfect_square,
    reproduce_all_tables,
    reproduce_table,
    scale,
    scan_conjecture1,
    scan_conjecture2,
    scan_corollary,
    scan_problem,
    scan_theorem,
    sounderson,
    theorem1,
    theorem2,
    theorem3,
    try_brick,
    v2,
    verify_brick,
)

__version__ = "0.1.0"

__all__ = [
    "Brick",
    "BrickReport",
    "CellDiff",
    "Decomposition",
    "LegPair",
    "PerfectCuboid",
    "PythTriple",
    "ScanHit",
    "ScanKind",
    "ScanReport",
    "TableId",
    "TableReproduction",
    "corollary1",
    "corollary2",
    "decompose",
    "derived_brick",
    "enumerate_primitive",
    "euclid",
    "gcd",
    "gcd3",
    "isqrt",
    "lift_pair",
    "make_leg_pair",
    "make_triple",
    "max_safe_w_bound",
    "normalize",
    "perfect_from_counterexample",
    "perfect_from_parts",
    "perfect_square",
    "reproduce_all_tables",
    "reproduce_table",
    "scale",
    "scan_conjecture1",
    "scan_conjecture2",
    "scan_corollary",
    "scan_problem",
    "scan_theorem",
    "sounderson",
    "theorem1",
    "theorem2",
    "theorem3",
    "try_brick",
    "v2",
    "verify_brick",
]
