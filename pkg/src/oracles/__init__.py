"""Oracles exhaustifs indépendants des réductions."""
from ..instances.types import (
    Ap2dmInstance,
    CnfFormula,
    Digraph,
    Instance,
    LinSystem,
    UGraph,
    XceInstance,
    XorSystem,
)
from .checkers import (
    check_assignment,
    check_checkered_cover,
    check_exact_cover,
    check_path,
    check_vector,
    check_witness,
    check_xor_assignment,
)
from .cover import solve_xce
from .graphs import solve_2cvc, solve_dstcon
from .linear import solve_lin, solve_xor2sat, solve_xor2sat_enum
from .matching import (
    is_linked_power,
    iter_perfect_matchings,
    linkage_symmetry,
    linked_pairs,
    solve_ap2dm,
)
from .result import OracleResult
from .sat import solve_2sat, solve_2sat_enum

ORACLES = {
    CnfFormula: solve_2sat,
    Digraph: solve_dstcon,
    UGraph: solve_2cvc,
    XceInstance: solve_xce,
    Ap2dmInstance: solve_ap2dm,
    LinSystem: solve_lin,
    XorSystem: solve_xor2sat,
}


def decide(instance: Instance, linkage: str = "chain") -> OracleResult:
    """Applique l'oracle associé au type de l'instance."""
    if isinstance(instance, Ap2dmInstance):
        return solve_ap2dm(instance, linkage=linkage)
    return ORACLES[type(instance)](instance)


__all__ = [
    "OracleResult", "ORACLES", "decide",
    "solve_2sat", "solve_2sat_enum", "solve_dstcon", "solve_2cvc", "solve_xce",
    "solve_ap2dm", "solve_lin", "solve_xor2sat", "solve_xor2sat_enum",
    "iter_perfect_matchings", "linked_pairs", "is_linked_power", "linkage_symmetry",
    "check_assignment", "check_path", "check_checkered_cover", "check_exact_cover",
    "check_vector", "check_xor_assignment", "check_witness",
]
