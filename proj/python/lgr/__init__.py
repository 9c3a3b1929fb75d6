"""Layered-graph DP solvers (MIS, MVC, CVC, MDS, CDS) with exact counts."""

from ._lgr import (
    LayeredGraph,
    LgrError,
    check_witness,
    classify,
    gen_full,
    gen_llg,
    gen_path,
    gen_random,
    oracle_solve,
    parse,
    serialize,
    solve,
)

__all__ = [
    "LayeredGraph",
    "LgrError",
    "check_witness",
    "classify",
    "gen_full",
    "gen_llg",
    "gen_path",
    "gen_random",
    "oracle_solve",
    "parse",
    "serialize",
    "solve",
]
