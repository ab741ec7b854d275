"""Normalisations supposées par les constructions.

- `normalize_2sat3` : formule exacte, propre, sans littéral supprimable.
- `normalize_dstcon` : extrémités de degré 1, degrés entrant et sortant ≤ 2,
  pas d'arc direct s → t.
- `reduce_degree_dstcon` : degré total ≤ 3 par éclatement de sommets.
"""
import logging
from collections import Counter
from typing import Dict, List, Optional, Tuple

from ..exceptions import PreconditionError
from ..instances.tags import Tags
from ..instances.types import CnfFormula, Digraph
from ..instances.validation import validate
from .registry import reduction

logger = logging.getLogger(__name__)

# Formule canonique insatisfiable renvoyée quand la propagation vide une clause.
CONTRADICTION = CnfFormula(1, ((1,), (-1,)))

NORMAL_2SAT3_TAGS = Tags(occ_bound=3, exact=True, clean=True, no_removable=True)


def is_contradiction(f: CnfFormula) -> bool:
    return f == CONTRADICTION


def is_normalized_2sat3(f: CnfFormula) -> bool:
    return not validate(f, NORMAL_2SAT3_TAGS)


def _simplify_clauses(clauses: List[List[int]]) -> Tuple[List[List[int]], bool]:
    """Supprime les tautologies et les littéraux répétés."""
    changed = False
    kept = []
    for clause in clauses:
        literals = list(dict.fromkeys(clause))
        if any(-lit in literals for lit in literals):
            changed = True
            continue
        if len(literals) < len(clause):
            changed = True
        kept.append(literals)
    return kept, changed


def _propagate(clauses: List[List[int]], lit: int) -> Optional[List[List[int]]]:
    """Affecte `lit` à vrai ; None si une clause devient vide."""
    result = []
    for clause in clauses:
        if lit in clause:
            continue
        if -lit in clause:
            rest = [other for other in clause if other != -lit]
            if not rest:
                return None
            result.append(rest)
        else:
            result.append(clause)
    return result


@reduction(
    "normalize_2sat3", source=CnfFormula, target=CnfFormula,
    in_param="m_vbl", out_param="m_vbl", k1=1, k2=0,
    family={"problem": "2sat3"},
)
def normalize_2sat3(f: CnfFormula) -> CnfFormula:
    """Point fixe de : tautologies, doublons, propagation unitaire, littéraux supprimables.

    Les variables restantes sont renumérotées dans l'ordre croissant.
    """
    over = [v for v in validate(f, Tags(occ_bound=3)) if v.code == "occ_bound"]
    if over:
        logger.warning(f"Formule hors de 2SAT₃ ({over[0]}), normalisation quand même")
    clauses = [list(clause) for clause in f.clauses]
    changed = True
    while changed:
        clauses, changed = _simplify_clauses(clauses)
        unit = next((clause[0] for clause in clauses if len(clause) == 1), None)
        if unit is not None:
            propagated = _propagate(clauses, unit)
            if propagated is None:
                logger.debug(f"Contradiction par propagation de {unit}")
                return CONTRADICTION
            clauses = propagated
            changed = True
            continue
        counts = Counter(lit for clause in clauses for lit in clause)
        removable = {lit for lit in counts if counts[-lit] == 0}
        if removable:
            clauses = [c for c in clauses if not any(lit in removable for lit in c)]
            changed = True
    survivors = sorted({abs(lit) for clause in clauses for lit in clause})
    renumber = {old: new for new, old in enumerate(survivors, start=1)}
    compacted = tuple(
        tuple(renumber[abs(lit)] * (1 if lit > 0 else -1) for lit in clause)
        for clause in clauses
    )
    return CnfFormula(len(survivors), compacted)


class _EdgeList:
    """Arcs modifiables d'un graphe orienté en cours de transformation."""

    def __init__(self, g: Digraph):
        self.size = g.num_vertices
        self.edges: List[Tuple[int, int]] = [(u, v) for u, v in g.edges if u != v]
        self.labels: Dict[int, str] = dict(g.labels or {})
        for v in range(1, self.size + 1):
            self.labels.setdefault(v, str(v))
        self.relays = Counter()

    def fresh(self, name: str) -> int:
        self.size += 1
        self.labels[self.size] = name
        return self.size

    def indegree(self, v: int) -> int:
        return sum(1 for _, w in self.edges if w == v)

    def outdegree(self, v: int) -> int:
        return sum(1 for u, _ in self.edges if u == v)

    def split_in(self, v: int):
        """Deux arcs entrants de v passent par un relais r → v."""
        first, second = [e for e in self.edges if e[1] == v][:2]
        self.relays[v] += 1
        relay = self.fresh(f"{self.labels[v]}.in{self.relays[v]}")
        self.edges.remove(first)
        self.edges.remove(second)
        self.edges += [(first[0], relay), (second[0], relay), (relay, v)]

    def split_out(self, v: int):
        """Deux arcs sortants de v partent d'un relais v → r."""
        first, second = [e for e in self.edges if e[0] == v][:2]
        self.relays[v] += 1
        relay = self.fresh(f"{self.labels[v]}.out{self.relays[v]}")
        self.edges.remove(first)
        self.edges.remove(second)
        self.edges += [(v, relay), (relay, first[1]), (relay, second[1])]

    def build(self, s: int, t: int) -> Digraph:
        return Digraph(self.size, tuple(self.edges), s, t, self.labels)


def is_dstcon_normal(g: Digraph) -> bool:
    """Forme attendue par la construction vers AP2DM."""
    indeg, outdeg = g.in_degrees(), g.out_degrees()
    if g.s == g.t or (g.s, g.t) in set(g.edges):
        return False
    if indeg[g.s] != 0 or outdeg[g.s] != 1 or indeg[g.t] != 1 or outdeg[g.t] != 0:
        return False
    if any(u == v for u, v in g.edges):
        return False
    return all(indeg[v] <= 2 and outdeg[v] <= 2 for v in range(1, g.num_vertices + 1))


@reduction(
    "normalize_dstcon", source=Digraph, target=Digraph,
    in_param="m_ver", out_param="m_ver", k1=4, k2=4,
    family={"problem": "digraph", "deg_bound": 3},
)
def normalize_dstcon(g: Digraph) -> Digraph:
    """Met le graphe dans la forme de `is_dstcon_normal`, accessibilité préservée.

    Une extrémité déjà de degré 1 dans le bon sens est conservée ; sinon un
    sommet frais s′ → s (ou t → t′) la remplace.
    """
    work = _EdgeList(g)
    s, t = g.s, g.t
    if not (work.indegree(s) == 0 and work.outdegree(s) == 1):
        fresh = work.fresh("s'")
        work.edges.append((fresh, s))
        s = fresh
    if not (work.indegree(t) == 1 and work.outdegree(t) == 0):
        fresh = work.fresh("t'")
        work.edges.append((t, fresh))
        t = fresh
    v = 1
    while v <= work.size:
        while work.indegree(v) > 2:
            work.split_in(v)
        while work.outdegree(v) > 2:
            work.split_out(v)
        v += 1
    if (s, t) in work.edges:
        mid = work.fresh("mid")
        work.edges.remove((s, t))
        work.edges += [(s, mid), (mid, t)]
    result = work.build(s, t)
    logger.debug(f"normalize_dstcon: {g.num_vertices} → {result.num_vertices} sommets")
    return result


@reduction(
    "reduce_degree_dstcon", source=Digraph, target=Digraph,
    in_param="m_ver", out_param="m_ver", k1=2, k2=0,
    family={"problem": "digraph", "deg_bound": 4},
)
def reduce_degree_dstcon(g: Digraph, target: int = 3) -> Digraph:
    """Éclate les sommets jusqu'à un degré total ≤ `target` partout.

    k₁ = 2 tient tant que le degré total reste ≤ 4 ; au-delà le rapport
    signale le dépassement.
    """
    if target < 3:
        raise PreconditionError(f"degré cible {target} < 3")
    work = _EdgeList(g)
    v = 1
    while v <= work.size:
        while work.indegree(v) + work.outdegree(v) > target:
            if work.indegree(v) >= 2:
                work.split_in(v)
            else:
                work.split_out(v)
        v += 1
    return work.build(g.s, g.t)
