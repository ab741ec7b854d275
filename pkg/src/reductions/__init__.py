"""Réductions courtes entre problèmes et registre de leurs contrats."""
from .exact_cover import exact_cover_from_assignment, sat2_to_3xce2, variable_gadgets, xce2_to_2lp
from .linear import le_to_xor2sat, lp_to_2lp, twolp_to_lp
from .matching import (
    QueryOutcome,
    ap2dm_to_dstcon_queries,
    degree_reducing_oracle,
    dstcon_to_ap2dm,
    layer_ids,
    query_graph,
)
from .normalize import (
    CONTRADICTION,
    is_contradiction,
    is_dstcon_normal,
    is_normalized_2sat3,
    normalize_2sat3,
    normalize_dstcon,
    reduce_degree_dstcon,
)
from .registry import REDUCTIONS, ReductionSpec, get_reduction, reduction, run_reduction
from .report import QueryLog, ReductionReport
from .vertex_cover import clause_slot, cover_from_assignment, cvc3_to_sat2, literal_vertex, sat2_to_2cvc3

__all__ = [
    "REDUCTIONS", "ReductionSpec", "get_reduction", "reduction", "run_reduction",
    "ReductionReport", "QueryLog", "QueryOutcome",
    "normalize_2sat3", "normalize_dstcon", "reduce_degree_dstcon",
    "CONTRADICTION", "is_contradiction", "is_normalized_2sat3", "is_dstcon_normal",
    "sat2_to_2cvc3", "cvc3_to_sat2", "cover_from_assignment", "literal_vertex", "clause_slot",
    "sat2_to_3xce2", "xce2_to_2lp", "variable_gadgets", "exact_cover_from_assignment",
    "lp_to_2lp", "twolp_to_lp", "le_to_xor2sat",
    "dstcon_to_ap2dm", "ap2dm_to_dstcon_queries", "degree_reducing_oracle",
    "layer_ids", "query_graph",
]
