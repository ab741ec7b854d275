"""Couverture exacte avec exemption, par retour arrière guidé par les éléments."""
from typing import Dict, List, Optional, Set

from .. import settings
from ..exceptions import BudgetExceededError
from ..instances.types import XceInstance
from .result import OracleResult, no, yes


def solve_xce(x: XceInstance) -> OracleResult:
    """Cherche D ⊆ C couvrant X−R exactement une fois et R au plus une fois.

    À chaque étape on choisit l'élément non exempté non couvert qui a le moins
    d'ensembles encore utilisables, comme dans l'algorithme X.
    """
    if x.num_sets > settings.XCE_BUDGET:
        raise BudgetExceededError(f"{x.num_sets} ensembles > budget {settings.XCE_BUDGET}")
    exempt = set(x.exempt)
    containing: Dict[int, List[int]] = {e: [] for e in range(1, x.universe_size + 1)}
    for index, subset in enumerate(x.sets):
        for element in subset:
            containing[element].append(index)
    required = [e for e in range(1, x.universe_size + 1) if e not in exempt]
    used: Set[int] = set()
    chosen: List[int] = []

    def usable(index: int) -> bool:
        return not any(element in used for element in x.sets[index])

    def search() -> bool:
        best: Optional[List[int]] = None
        for element in required:
            if element in used:
                continue
            candidates = [i for i in containing[element] if usable(i)]
            if best is None or len(candidates) < len(best):
                best = candidates
                if not candidates:
                    return False
        if best is None:
            return True
        for index in best:
            used.update(x.sets[index])
            chosen.append(index)
            if search():
                return True
            chosen.pop()
            used.difference_update(x.sets[index])
        return False

    if search():
        return yes(tuple(sorted(i + 1 for i in chosen)))
    return no()
