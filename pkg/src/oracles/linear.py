"""Faisabilité {0,1} des systèmes linéaires creux et des systèmes ⊕2SAT."""
import logging
from typing import Dict, List, Tuple

from .. import settings
from ..exceptions import BudgetExceededError
from ..instances.types import LinSystem, Parity, XorSystem
from .result import OracleResult, no, yes

logger = logging.getLogger(__name__)


def solve_lin(s: LinSystem) -> OracleResult:
    """Recherche exhaustive sur {0,1}^n en arithmétique entière exacte.

    Chaque ligne est contrôlée dès que sa dernière colonne est fixée ; les
    colonnes sans coefficient restent à 0.
    """
    if s.num_cols > settings.LIN_BUDGET:
        raise BudgetExceededError(f"{s.num_cols} colonnes > budget {settings.LIN_BUDGET}")
    rows = s.rows()
    for row, coefficients in rows.items():
        if not coefficients and not s.row_satisfied(row, 0):
            return no(detail=f"ligne {row} vide et insatisfaite")
    closing: Dict[int, List[int]] = {}
    for row, coefficients in rows.items():
        if coefficients:
            closing.setdefault(max(col for col, _ in coefficients), []).append(row)
    columns = sorted({col for _, col, _ in s.entries})
    values = [0] * (s.num_cols + 1)

    def rows_hold(col: int) -> bool:
        for row in closing.get(col, ()):
            total = sum(value * values[c] for c, value in rows[row])
            if not s.row_satisfied(row, total):
                return False
        return True

    def search(index: int) -> bool:
        if index == len(columns):
            return True
        col = columns[index]
        for bit in (0, 1):
            values[col] = bit
            if rows_hold(col) and search(index + 1):
                return True
        values[col] = 0
        return False

    if search(0):
        return yes(tuple(values[1:]))
    return no()


class ParityUnionFind:
    """Union-find avec parité relative à la racine ; le nœud 0 vaut faux."""

    def __init__(self, size: int):
        self.parent = list(range(size + 1))
        self.parity = [0] * (size + 1)

    def find(self, x: int) -> Tuple[int, int]:
        path = []
        while self.parent[x] != x:
            path.append(x)
            x = self.parent[x]
        root = x
        # compression : la parité de chaque nœud devient relative à la racine
        for node in reversed(path):
            parent = self.parent[node]
            if parent != root:
                self.parity[node] ^= self.parity[parent]
            self.parent[node] = root
        return root, (self.parity[path[0]] if path else 0)

    def union(self, a: int, b: int, c: int) -> bool:
        """Impose x_a ⊕ x_b = c ; faux en cas de conflit."""
        root_a, parity_a = self.find(a)
        root_b, parity_b = self.find(b)
        if root_a == root_b:
            return parity_a ^ parity_b == c
        self.parent[root_a] = root_b
        self.parity[root_a] = parity_a ^ parity_b ^ c
        return True


def solve_xor2sat(x: XorSystem) -> OracleResult:
    if x.contradiction is not None:
        return no(detail=f"ligne {x.contradiction} sans solution")
    forest = ParityUnionFind(x.num_vars)
    for index, constraint in enumerate(x.constraints, start=1):
        if isinstance(constraint, Parity):
            consistent = forest.union(constraint.u, constraint.v, constraint.c)
        else:
            consistent = forest.union(constraint.u, 0, constraint.c)
        if not consistent:
            return no(detail=f"conflit de parité à la contrainte {index}")
    zero_root, zero_parity = forest.find(0)
    vector = []
    for var in range(1, x.num_vars + 1):
        root, parity = forest.find(var)
        vector.append(parity ^ (zero_parity if root == zero_root else 0))
    return yes(tuple(vector))


def solve_xor2sat_enum(x: XorSystem) -> OracleResult:
    if x.num_vars > settings.XOR_ENUM_BUDGET:
        raise BudgetExceededError(f"{x.num_vars} variables > budget {settings.XOR_ENUM_BUDGET}")
    if x.contradiction is not None:
        return no()
    for mask in range(1 << x.num_vars):
        ok = True
        for constraint in x.constraints:
            bit_u = (mask >> (constraint.u - 1)) & 1
            if isinstance(constraint, Parity):
                ok = bit_u ^ ((mask >> (constraint.v - 1)) & 1) == constraint.c
            else:
                ok = bit_u == constraint.c
            if not ok:
                break
        if ok:
            return yes(tuple((mask >> bit) & 1 for bit in range(x.num_vars)))
    return no()
