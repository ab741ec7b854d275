"""Décision de 2SAT : composantes fortement connexes et énumération."""
import logging

import networkx as nx

from .. import settings
from ..exceptions import BudgetExceededError, ClauseWidthError
from ..instances.types import CnfFormula
from .result import OracleResult, no, yes

logger = logging.getLogger(__name__)


def _check_width(f: CnfFormula):
    for index, clause in enumerate(f.clauses, start=1):
        if len(clause) > 2:
            raise ClauseWidthError(f"clause {index} de largeur {len(clause)}")


def implication_graph(f: CnfFormula) -> nx.DiGraph:
    """Graphe d'implication : la clause (a ∨ b) donne ¬a → b et ¬b → a."""
    graph = nx.DiGraph()
    for var in range(1, f.num_vars + 1):
        graph.add_node(var)
        graph.add_node(-var)
    for clause in f.clauses:
        a, b = clause if len(clause) == 2 else (clause[0], clause[0])
        graph.add_edge(-a, b)
        graph.add_edge(-b, a)
    return graph


def solve_2sat(f: CnfFormula) -> OracleResult:
    """Décide la satisfiabilité par les CFC du graphe d'implication."""
    _check_width(f)
    graph = implication_graph(f)
    condensed = nx.condensation(graph)
    component = condensed.graph['mapping']
    for var in range(1, f.num_vars + 1):
        if component[var] == component[-var]:
            return no(detail=f"x{var} et ¬x{var} dans la même composante")
    position = {c: i for i, c in enumerate(nx.topological_sort(condensed))}
    assignment = tuple(
        position[component[var]] > position[component[-var]]
        for var in range(1, f.num_vars + 1)
    )
    return yes(assignment)


def solve_2sat_enum(f: CnfFormula) -> OracleResult:
    """Décide la satisfiabilité par énumération des 2^n affectations."""
    _check_width(f)
    if f.num_vars > settings.SAT_ENUM_BUDGET:
        raise BudgetExceededError(
            f"{f.num_vars} variables > budget {settings.SAT_ENUM_BUDGET}"
        )
    checks = [tuple((abs(lit) - 1, lit > 0) for lit in clause) for clause in f.clauses]
    for mask in range(1 << f.num_vars):
        if all(any(((mask >> bit) & 1) == want for bit, want in clause) for clause in checks):
            return yes(tuple(bool((mask >> bit) & 1) for bit in range(f.num_vars)))
    return no()
