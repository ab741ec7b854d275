"""Vérification des invariants des instances.

Les violations sont des données : `validate` ne lève jamais d'exception et
retourne la liste (vide si l'instance est conforme).
"""
import logging
from collections import Counter
from typing import List, Optional

import networkx as nx

from .. import settings
from .tags import Tags, Violation
from .types import (
    Ap2dmInstance,
    CnfFormula,
    Digraph,
    Instance,
    LinMode,
    LinSystem,
    UGraph,
    XceInstance,
    XorSystem,
)

logger = logging.getLogger(__name__)


def edge_count_violations(num_vertices: int, num_edges: int, deg_bound: int) -> List[Violation]:
    """Contrôle m_ver ≤ 2·m_edg et 2·m_edg ≤ k·m_ver sur un graphe connexe."""
    violations = []
    if num_vertices > 2 * num_edges:
        violations.append(Violation(
            code="edge_count_vertices",
            message=f"m_ver={num_vertices} > 2·m_edg={2 * num_edges}",
            witness=(num_vertices, num_edges),
        ))
    if 2 * num_edges > deg_bound * num_vertices:
        violations.append(Violation(
            code="edge_count_edges",
            message=f"m_edg={num_edges} > {deg_bound}·m_ver/2",
            witness=(num_vertices, num_edges),
        ))
    return violations


def _validate_cnf(f: CnfFormula, tags: Tags) -> List[Violation]:
    violations = []
    if tags.occ_bound is not None:
        for var, count in sorted(f.occurrences().items()):
            if count > tags.occ_bound:
                violations.append(Violation(
                    code="occ_bound",
                    message=f"variable {var} apparaît {count} fois (borne {tags.occ_bound})",
                    witness=(var, count),
                ))
    for index, clause in enumerate(f.clauses, start=1):
        if tags.exact and len(clause) != 2:
            violations.append(Violation(
                code="exact",
                message=f"clause {index} a {len(clause)} littéral(aux)",
                witness=(index,),
            ))
        if tags.clean and len({abs(lit) for lit in clause}) != len(clause):
            violations.append(Violation(
                code="clean",
                message=f"clause {index} répète une variable",
                witness=(index,),
            ))
    if tags.no_removable:
        counts = f.literal_counts()
        for lit in sorted(counts, key=lambda l: (abs(l), -l)):
            if counts[-lit] == 0:
                violations.append(Violation(
                    code="removable",
                    message=f"littéral {lit} supprimable",
                    witness=(lit,),
                ))
    return violations


def _validate_digraph(g: Digraph, tags: Tags) -> List[Violation]:
    violations = []
    if not tags.allow_self_loops:
        for u, v in g.edges:
            if u == v:
                violations.append(Violation(
                    code="self_loop", message=f"boucle sur {u}", witness=(u,)
                ))
    indeg, outdeg = g.in_degrees(), g.out_degrees()
    for v in range(1, g.num_vertices + 1):
        if tags.deg_bound is not None and indeg[v] + outdeg[v] > tags.deg_bound:
            violations.append(Violation(
                code="deg_bound",
                message=f"sommet {v} de degré {indeg[v] + outdeg[v]}",
                witness=(v, indeg[v] + outdeg[v]),
            ))
        if tags.in_bound is not None and indeg[v] > tags.in_bound:
            violations.append(Violation(
                code="in_bound", message=f"sommet {v} de degré entrant {indeg[v]}",
                witness=(v, indeg[v]),
            ))
        if tags.out_bound is not None and outdeg[v] > tags.out_bound:
            violations.append(Violation(
                code="out_bound", message=f"sommet {v} de degré sortant {outdeg[v]}",
                witness=(v, outdeg[v]),
            ))
    if tags.deg_bound is not None and g.num_edges >= 1:
        if nx.is_weakly_connected(g.to_networkx()):
            violations.extend(edge_count_violations(g.num_vertices, g.num_edges, tags.deg_bound))
    return violations


def _validate_ugraph(g: UGraph, tags: Tags) -> List[Violation]:
    violations = []
    if tags.deg_bound is not None:
        for v, d in sorted(g.degrees().items()):
            if d > tags.deg_bound:
                violations.append(Violation(
                    code="deg_bound", message=f"sommet {v} de degré {d}", witness=(v, d)
                ))
        if g.num_edges >= 1 and nx.is_connected(g.to_networkx()):
            violations.extend(edge_count_violations(g.num_vertices, g.num_edges, tags.deg_bound))
    return violations


def _validate_xce(x: XceInstance, tags: Tags) -> List[Violation]:
    violations = []
    for index, subset in enumerate(x.sets, start=1):
        if tags.set_bound is not None and len(subset) > tags.set_bound:
            violations.append(Violation(
                code="set_size",
                message=f"ensemble {index} de taille {len(subset)}",
                witness=(index, len(subset)),
            ))
    if tags.overlap_bound is not None:
        for element, cost in sorted(x.overlapping_costs().items()):
            if cost > tags.overlap_bound:
                violations.append(Violation(
                    code="overlap",
                    message=f"élément {element} de coût de recouvrement {cost}",
                    witness=(element, cost),
                ))
    return violations


def _validate_ap2dm(a: Ap2dmInstance, tags: Tags) -> List[Violation]:
    violations = []
    if tags.overlap_bound is not None:
        # la paire triviale compte pour 1 de chaque côté
        outgoing = Counter(u for u, _ in a.pairs)
        incoming = Counter(v for _, v in a.pairs)
        for v in range(1, a.universe_size + 1):
            for side, counts in (("sortant", outgoing), ("entrant", incoming)):
                if counts[v] + 1 > tags.overlap_bound:
                    violations.append(Violation(
                        code="overlap",
                        message=f"élément {v} : {counts[v] + 1} paires côté {side}",
                        witness=(v, counts[v] + 1),
                    ))
    if tags.connectivity is not None:
        exempt = set(a.exempt)
        out_free = Counter(u for u, v in a.pairs if u in exempt and v not in exempt)
        in_free = Counter(v for u, v in a.pairs if v in exempt and u not in exempt)
        for v in a.exempt:
            for side, count in (("sortant", out_free[v]), ("entrant", in_free[v])):
                bad = count == 0 if tags.connectivity == "at_least_one" else count != 1
                if bad:
                    violations.append(Violation(
                        code="connectivity",
                        message=f"élément exempté {v} : {count} partenaire(s) {side} hors de R",
                        witness=(v, count),
                    ))
    return violations


def _validate_lin(s: LinSystem, tags: Tags) -> List[Violation]:
    violations = []
    for row, coefficients in s.rows().items():
        if len(coefficients) > tags.row_bound:
            violations.append(Violation(
                code="row_nonzeros",
                message=f"ligne {row} avec {len(coefficients)} coefficients non nuls",
                witness=(row, len(coefficients)),
            ))
    bound = tags.col_bound if tags.col_bound is not None else s.col_bound
    if bound is not None:
        for col, count in sorted(s.column_counts().items()):
            if count > bound:
                violations.append(Violation(
                    code="col_bound",
                    message=f"colonne {col} avec {count} coefficients non nuls (borne {bound})",
                    witness=(col, count),
                ))
    values = [v for _, _, v in s.entries] + list(s.lower) + list(s.upper or ())
    for value in values:
        if not settings.ENTRY_MIN <= value <= settings.ENTRY_MAX:
            violations.append(Violation(
                code="entry_width", message=f"valeur {value} hors de 63 bits signés"
            ))
    if s.mode is LinMode.BAND and s.upper is None:
        violations.append(Violation(code="band_missing", message="bornes supérieures absentes"))
    return violations


def _validate_xor(x: XorSystem, tags: Tags) -> List[Violation]:
    return []


_VALIDATORS = {
    CnfFormula: _validate_cnf,
    Digraph: _validate_digraph,
    UGraph: _validate_ugraph,
    XceInstance: _validate_xce,
    Ap2dmInstance: _validate_ap2dm,
    LinSystem: _validate_lin,
    XorSystem: _validate_xor,
}


def validate(instance: Instance, tags: Optional[Tags] = None) -> List[Violation]:
    """Retourne toutes les violations des invariants demandés par `tags`."""
    tags = tags or Tags()
    violations = _VALIDATORS[type(instance)](instance, tags)
    for violation in violations:
        logger.debug(f"Violation {type(instance).__name__}: {violation}")
    return violations


def is_valid(instance: Instance, tags: Optional[Tags] = None) -> bool:
    return not validate(instance, tags)
