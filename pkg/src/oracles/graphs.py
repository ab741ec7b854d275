"""Oracles sur les graphes : accessibilité orientée et couverture 2-checkered."""
import logging
from typing import Dict, List, Set

import networkx as nx

from .. import settings
from ..exceptions import BudgetExceededError
from ..instances.types import Digraph, UGraph
from .result import OracleResult, no, yes

logger = logging.getLogger(__name__)


def solve_dstcon(g: Digraph) -> OracleResult:
    """Parcours en largeur depuis s ; le témoin est un plus court chemin."""
    if g.s == g.t:
        return yes([g.s])
    graph = g.to_networkx()
    if not nx.has_path(graph, g.s, g.t):
        return no()
    return yes(nx.shortest_path(graph, g.s, g.t))


def _search_component(order: List[int], neighbors: Dict[int, Set[int]],
                      grips: Set[tuple], state: Dict[int, bool], index: int = 0) -> bool:
    if index == len(order):
        return True
    v = order[index]
    for inside in (True, False):
        consistent = True
        for w in neighbors[v]:
            if w not in state:
                continue
            if not inside and not state[w]:
                consistent = False
                break
            if inside and state[w] and (min(v, w), max(v, w)) not in grips:
                consistent = False
                break
        if consistent:
            state[v] = inside
            if _search_component(order, neighbors, grips, state, index + 1):
                return True
            del state[v]
    return False


def solve_2cvc(g: UGraph) -> OracleResult:
    """Recherche d'une couverture 2-checkered, composante par composante.

    Les sommets sont affectés dans l'ordre du parcours en largeur, chaque choix
    étant confronté aux voisins déjà affectés.
    """
    if g.num_vertices > settings.CVC_BUDGET:
        raise BudgetExceededError(
            f"{g.num_vertices} sommets > budget {settings.CVC_BUDGET}"
        )
    graph = g.to_networkx()
    grips = set(g.grips())
    neighbors = {v: set(graph.neighbors(v)) for v in graph.nodes}
    cover = set()
    for component in sorted(nx.connected_components(graph), key=min):
        if len(component) == 1:
            continue
        order = list(nx.bfs_tree(graph, min(component)).nodes)
        state: Dict[int, bool] = {}
        if not _search_component(order, neighbors, grips, state):
            logger.debug(f"Composante sans couverture 2-checkered: {sorted(component)[:5]}...")
            return no(detail=f"composante de {min(component)} sans couverture")
        cover.update(v for v, inside in state.items() if inside)
    return yes(frozenset(cover))
