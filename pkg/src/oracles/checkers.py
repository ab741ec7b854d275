"""Vérificateurs autonomes des témoins produits par les oracles.

Chaque vérificateur relit l'instance de zéro : il ne partage aucun code avec
l'oracle dont il contrôle le témoin.
"""
from typing import Iterable, Optional, Sequence

from ..instances.types import (
    Ap2dmInstance,
    CnfFormula,
    Digraph,
    Instance,
    LinSystem,
    Parity,
    UGraph,
    XceInstance,
    XorSystem,
)
from .result import OracleResult


def check_assignment(f: CnfFormula, assignment: Sequence[bool]) -> bool:
    """`assignment[v - 1]` est la valeur de la variable v."""
    if len(assignment) != f.num_vars:
        return False
    for clause in f.clauses:
        if not any(assignment[abs(lit) - 1] == (lit > 0) for lit in clause):
            return False
    return True


def check_path(g: Digraph, path: Sequence[int]) -> bool:
    if not path or path[0] != g.s or path[-1] != g.t:
        return False
    edges = set(g.edges)
    return all((u, v) in edges for u, v in zip(path, path[1:]))


def check_checkered_cover(g: UGraph, cover: Iterable[int]) -> bool:
    """Couverture par sommets où toute arête doublement couverte est une prise."""
    inside = set(cover)
    degree = g.degrees()
    for u, v in g.edges:
        if u not in inside and v not in inside:
            return False
        if u in inside and v in inside and (degree[u] > 2 or degree[v] > 2):
            return False
    return True


def check_exact_cover(x: XceInstance, chosen: Iterable[int]) -> bool:
    """`chosen` contient des indices (base 1) d'ensembles de la collection."""
    counts = {}
    for index in chosen:
        if not 1 <= index <= x.num_sets:
            return False
        for element in x.sets[index - 1]:
            counts[element] = counts.get(element, 0) + 1
    exempt = set(x.exempt)
    for element in range(1, x.universe_size + 1):
        count = counts.get(element, 0)
        if element in exempt:
            if count > 1:
                return False
        elif count != 1:
            return False
    return True


def check_vector(s: LinSystem, vector: Sequence[int]) -> bool:
    if len(vector) != s.num_cols or any(bit not in (0, 1) for bit in vector):
        return False
    totals = [0] * s.num_rows
    for row, col, value in s.entries:
        totals[row - 1] += value * vector[col - 1]
    return all(s.row_satisfied(row, totals[row - 1]) for row in range(1, s.num_rows + 1))


def check_xor_assignment(x: XorSystem, vector: Sequence[int]) -> bool:
    if x.contradiction is not None or len(vector) != x.num_vars:
        return False
    for constraint in x.constraints:
        if isinstance(constraint, Parity):
            if vector[constraint.u - 1] ^ vector[constraint.v - 1] != constraint.c:
                return False
        elif vector[constraint.u - 1] != constraint.c:
            return False
    return True


def check_witness(instance: Instance, result: OracleResult) -> Optional[bool]:
    """Contrôle le témoin d'une réponse OUI ; None si rien n'est vérifiable."""
    if not result.answer or result.witness is None:
        return None
    if isinstance(instance, CnfFormula):
        return check_assignment(instance, result.witness)
    if isinstance(instance, Digraph):
        return check_path(instance, result.witness)
    if isinstance(instance, UGraph):
        return check_checkered_cover(instance, result.witness)
    if isinstance(instance, XceInstance):
        return check_exact_cover(instance, result.witness)
    if isinstance(instance, LinSystem):
        return check_vector(instance, result.witness)
    if isinstance(instance, XorSystem):
        return check_xor_assignment(instance, result.witness)
    if isinstance(instance, Ap2dmInstance):
        return None
    return None
