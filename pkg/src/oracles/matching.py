"""Couplages parfaits et liaison pour AP2DM.

Un couplage parfait de M (paires triviales comprises) est vu comme une
permutation π de X : π[v] est le partenaire de v. La liaison « chaîne »
suit la définition littérale : v est lié à w s'il existe une chaîne
(v, z₁), (z₁, z₂), …, (z_t, w) de paires du couplage avec t impair, soit
w = π^(t+1)(v). La liaison « cycle » demande seulement que v et w soient
sur le même cycle de π.
"""
import logging
from typing import Iterator, List, NamedTuple, Optional, Set, Tuple

from .. import settings
from ..exceptions import BudgetExceededError, InvalidParameterError
from ..instances.types import Ap2dmInstance
from .result import OracleResult, no, yes

logger = logging.getLogger(__name__)

LINKAGES = ("chain", "cycle")

Permutation = Tuple[int, ...]


def iter_perfect_matchings(a: Ap2dmInstance) -> Iterator[Permutation]:
    """Énumère les couplages ; π[0] vaut 0 pour garder des indices en base 1."""
    n = a.universe_size
    partners = a.partners()
    image = [0] * (n + 1)
    taken = [False] * (n + 1)

    def assign(v: int) -> Iterator[Permutation]:
        if v > n:
            yield tuple(image)
            return
        for w in partners[v]:
            if not taken[w]:
                taken[w] = True
                image[v] = w
                yield from assign(v + 1)
                taken[w] = False
        image[v] = 0

    yield from assign(1)


def chain_linked_pairs(pi: Permutation) -> Set[Tuple[int, int]]:
    """Paires (v, w), v ≠ w, reliées par une chaîne d'intérieur impair."""
    n = len(pi) - 1
    linked = set()
    for v in range(1, n + 1):
        z = pi[v]
        for t in range(1, 2 * n):
            w = pi[z]
            if t % 2 == 1 and w != v:
                linked.add((v, w))
            z = w
    return linked


def cycle_linked_pairs(pi: Permutation) -> Set[Tuple[int, int]]:
    n = len(pi) - 1
    seen = [False] * (n + 1)
    linked = set()
    for start in range(1, n + 1):
        if seen[start]:
            continue
        cycle = []
        v = start
        while not seen[v]:
            seen[v] = True
            cycle.append(v)
            v = pi[v]
        linked.update((u, w) for u in cycle for w in cycle if u != w)
    return linked


def linked_pairs(pi: Permutation, linkage: str = "chain") -> Set[Tuple[int, int]]:
    if linkage == "chain":
        return chain_linked_pairs(pi)
    if linkage == "cycle":
        return cycle_linked_pairs(pi)
    raise InvalidParameterError(f"liaison inconnue: {linkage}")


def _compose(p: Permutation, q: Permutation) -> Permutation:
    """(p ∘ q)[v] = p[q[v]]"""
    return tuple(p[q[v]] for v in range(len(q)))


def is_linked_power(pi: Permutation, v: int, w: int) -> bool:
    """Vrai si w = π^k(v) pour un k pair, 2 ≤ k ≤ 2|X|."""
    n = len(pi) - 1
    square = _compose(pi, pi)
    power = square
    for _ in range(n):
        if power[v] == w:
            return True
        power = _compose(square, power)
    return False


def required_pairs(a: Ap2dmInstance) -> List[Tuple[int, int]]:
    """Paires ordonnées distinctes (v, w) dont au moins un élément est hors de R."""
    exempt = set(a.exempt)
    n = a.universe_size
    return [
        (v, w)
        for v in range(1, n + 1)
        for w in range(1, n + 1)
        if v != w and not (v in exempt and w in exempt)
    ]


def _check_budget(a: Ap2dmInstance):
    if a.universe_size > settings.AP2DM_BUDGET:
        raise BudgetExceededError(
            f"{a.universe_size} éléments > budget {settings.AP2DM_BUDGET}"
        )


def solve_ap2dm(a: Ap2dmInstance, linkage: str = "chain") -> OracleResult:
    """OUI si chaque paire requise est liée dans au moins un couplage parfait.

    Sur NON, le témoin est la première paire requise jamais liée.
    """
    _check_budget(a)
    if linkage not in LINKAGES:
        raise InvalidParameterError(f"liaison inconnue: {linkage}")
    required = required_pairs(a)
    pending = set(required)
    matchings = 0
    for pi in iter_perfect_matchings(a):
        if not pending:
            break
        matchings += 1
        pending -= linked_pairs(pi, linkage)
    if not pending:
        return yes(matchings, detail=f"{len(required)} paires liées")
    first: Optional[Tuple[int, int]] = next(p for p in required if p in pending)
    logger.debug(f"AP2DM: paire {first} jamais liée ({matchings} couplages)")
    return no(first, detail=f"{len(pending)} paire(s) non liée(s)")


class SymmetryStats(NamedTuple):
    matchings: int
    linked: int
    asymmetric: int


def linkage_symmetry(a: Ap2dmInstance, linkage: str = "chain") -> SymmetryStats:
    """Compte, sur tous les couplages, les liaisons dont l'inverse manque."""
    _check_budget(a)
    matchings = linked = asymmetric = 0
    for pi in iter_perfect_matchings(a):
        matchings += 1
        pairs = linked_pairs(pi, linkage)
        linked += len(pairs)
        asymmetric += sum(1 for v, w in pairs if (w, v) not in pairs)
    return SymmetryStats(matchings, linked, asymmetric)
