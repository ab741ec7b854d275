"""Réductions entre 2SAT₃ et 2CVC₃ (couverture par sommets 2-checkered).

Sens direct : une paire de sommets par variable (u⁽¹⁾ représente u, u⁽²⁾
représente ū), une paire par clause reliée par une prise, et une arête de
chaque case de clause vers le sommet du littéral qu'elle contient.
Numérotation : u_i⁽¹⁾ = 2i−1, u_i⁽²⁾ = 2i, puis c_j[1] = 2n+2j−1, c_j[2] = 2n+2j.
"""
import logging
from itertools import combinations
from typing import FrozenSet, Iterator, Sequence

from ..exceptions import PreconditionError
from ..instances.types import CnfFormula, UGraph
from .normalize import is_contradiction, is_normalized_2sat3
from .records import ClauseRecord, EdgeRecord, Header, Label, Record, collect
from .registry import reduction

logger = logging.getLogger(__name__)


def literal_vertex(lit: int) -> int:
    return 2 * abs(lit) - 1 if lit > 0 else 2 * abs(lit)


def clause_slot(num_vars: int, clause_index: int, slot: int) -> int:
    """Sommet c_j[slot], j et slot en base 1."""
    return 2 * num_vars + 2 * clause_index - 2 + slot


def _stream_k4() -> Iterator[Record]:
    yield Header("graph", 4)
    for u, v in combinations(range(1, 5), 2):
        yield EdgeRecord(u, v)


def _stream_sat2_to_2cvc3(f: CnfFormula) -> Iterator[Record]:
    n = f.num_vars
    yield Header("graph", 2 * (n + f.num_clauses))
    for i in range(1, n + 1):
        yield Label(2 * i - 1, f"u{i}(1)")
        yield Label(2 * i, f"u{i}(2)")
        yield EdgeRecord(2 * i - 1, 2 * i)
    for j, clause in enumerate(f.clauses, start=1):
        first, second = clause_slot(n, j, 1), clause_slot(n, j, 2)
        yield Label(first, f"c{j}[1]")
        yield Label(second, f"c{j}[2]")
        yield EdgeRecord(first, second)
        for slot, lit in zip((first, second), clause):
            yield EdgeRecord(slot, literal_vertex(lit))


@reduction(
    "sat2_to_2cvc3", source=CnfFormula, target=UGraph,
    in_param="m_vbl", out_param="m_ver", k1=8, k2=0,
    normalizer="normalize_2sat3", family={"problem": "2sat3"},
)
def sat2_to_2cvc3(f: CnfFormula) -> UGraph:
    """Construit le graphe de degré ≤ 3 associé à une formule normalisée.

    La contradiction canonique donne K₄, qui n'a pas de couverture 2-checkered.
    """
    if is_contradiction(f):
        return collect(_stream_k4())
    if not is_normalized_2sat3(f):
        raise PreconditionError("sat2_to_2cvc3 attend une formule normalisée (normalize_2sat3)")
    return collect(_stream_sat2_to_2cvc3(f))


def cover_from_assignment(f: CnfFormula, assignment: Sequence[bool]) -> FrozenSet[int]:
    """Couverture C_σ : littéraux faux, puis cases de clause vraies."""
    n = f.num_vars
    cover = set()
    for i in range(1, n + 1):
        cover.add(literal_vertex(-i) if assignment[i - 1] else literal_vertex(i))
    for j, clause in enumerate(f.clauses, start=1):
        for slot, lit in enumerate(clause, start=1):
            if assignment[abs(lit) - 1] == (lit > 0):
                cover.add(clause_slot(n, j, slot))
    return frozenset(cover)


def _stream_cvc3_to_sat2(g: UGraph) -> Iterator[Record]:
    degree = g.degrees()
    yield Header("cnf2", g.num_vertices)
    for u, v in g.edges:
        yield ClauseRecord((u, v))
        if degree[u] > 2 or degree[v] > 2:
            yield ClauseRecord((-u, -v))


@reduction(
    "cvc3_to_sat2", source=UGraph, target=CnfFormula,
    in_param="m_ver", out_param="m_vbl", k1=1, k2=0,
    family={"problem": "ugraph", "deg_bound": 3},
)
def cvc3_to_sat2(g: UGraph) -> CnfFormula:
    """Une variable par sommet ; u ∨ v sur une prise, u ↮ v sinon."""
    degree = g.degrees()
    too_high = [v for v, d in sorted(degree.items()) if d > 3]
    if too_high:
        raise PreconditionError(f"sommet {too_high[0]} de degré {degree[too_high[0]]} > 3")
    f = collect(_stream_cvc3_to_sat2(g))
    top = max(f.occurrences().values(), default=0)
    if top > 3:
        logger.debug(f"cvc3_to_sat2: jusqu'à {top} occurrences par variable (hors 2SAT₃)")
    return f
