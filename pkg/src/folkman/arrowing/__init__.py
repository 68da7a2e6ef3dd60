"""Deciding G -> (p, q): every blue/red edge coloring of G has a blue
p-clique or a red q-clique."""
from .backtrack import build_constraints, root_propagation, solve_backtrack
from .brute import (
    MAX_FREE_EDGES,
    OracleCapExceeded,
    brute_force_free_colorings,
    free_coloring_masks,
    iter_free_colorings,
)
from .cdcl import solve_cnf
from .cnf import CNF, dimacs_bytes, encode_cnf, read_dimacs, write_dimacs
from .coloring import (
    BLUE,
    RED,
    Color,
    EdgeColoring,
    PartialColoring,
    SideClause,
    SolveResult,
    SolveStats,
    Verdict,
    not_monochromatic,
)
from .external import DEFAULT_SOLVER, ExternalRun, run_external
from .neighborhood import copies_in, embeddings, neighborhood_clauses
from .solve import ENGINES, EngineDisagreement, arrows, solve
from .validate import (
    AUDIT,
    Violation,
    WitnessError,
    audit_witness,
    free_coloring_check,
    is_free,
    neighborhood_split,
)

__all__ = [
    "AUDIT", "BLUE", "CNF", "Color", "DEFAULT_SOLVER", "ENGINES", "ExternalRun", "EdgeColoring", "EngineDisagreement",
    "MAX_FREE_EDGES", "OracleCapExceeded", "PartialColoring", "RED", "SideClause",
    "SolveResult", "SolveStats", "Verdict", "Violation", "WitnessError", "arrows",
    "audit_witness", "brute_force_free_colorings", "build_constraints", "copies_in", "dimacs_bytes", "embeddings",
    "encode_cnf", "free_coloring_check", "free_coloring_masks", "is_free",
    "iter_free_colorings", "neighborhood_clauses", "neighborhood_split", "not_monochromatic", "read_dimacs",
    "root_propagation", "run_external", "solve", "solve_backtrack", "solve_cnf", "write_dimacs",
]
