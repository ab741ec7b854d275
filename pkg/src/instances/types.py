"""Types d'instances des problèmes de décision.

Toutes les instances sont immuables (dataclasses gelées contenant des tuples)
et numérotent leurs objets à partir de 1. Un littéral est un entier signé :
``+i`` pour la variable i, ``-i`` pour sa négation.
"""
from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, FrozenSet, Optional, Tuple, Union

import networkx as nx

from ..exceptions import InstanceError

Literal = int
Clause = Tuple[Literal, ...]
Edge = Tuple[int, int]


def _check_range(value: int, upper: int, what: str):
    if not 1 <= value <= upper:
        raise InstanceError(f"{what} {value} hors de [1, {upper}]")


@dataclass(frozen=True)
class CnfFormula:
    """Formule 2CNF : `num_vars` variables, clauses dans l'ordre d'entrée."""

    num_vars: int
    clauses: Tuple[Clause, ...] = ()

    def __post_init__(self):
        if self.num_vars < 0:
            raise InstanceError(f"nombre de variables négatif: {self.num_vars}")
        object.__setattr__(self, 'clauses', tuple(tuple(c) for c in self.clauses))
        for clause in self.clauses:
            if not clause:
                raise InstanceError("clause vide")
            for lit in clause:
                if lit == 0:
                    raise InstanceError("littéral nul")
                _check_range(abs(lit), self.num_vars, "variable")

    @property
    def num_clauses(self) -> int:
        return len(self.clauses)

    def occurrences(self) -> Counter:
        """Nombre d'occurrences de chaque variable, toutes polarités."""
        return Counter(abs(lit) for clause in self.clauses for lit in clause)

    def literal_counts(self) -> Counter:
        return Counter(lit for clause in self.clauses for lit in clause)


@dataclass(frozen=True)
class Digraph:
    """Graphe orienté avec source `s` et cible `t`."""

    num_vertices: int
    edges: Tuple[Edge, ...]
    s: int
    t: int
    labels: Optional[Dict[int, str]] = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, 'edges', tuple((int(u), int(v)) for u, v in self.edges))
        if self.num_vertices < 1:
            raise InstanceError("un graphe orienté doit avoir au moins un sommet")
        seen = set()
        for u, v in self.edges:
            _check_range(u, self.num_vertices, "sommet")
            _check_range(v, self.num_vertices, "sommet")
            if (u, v) in seen:
                raise InstanceError(f"arc en double: ({u}, {v})")
            seen.add((u, v))
        _check_range(self.s, self.num_vertices, "source")
        _check_range(self.t, self.num_vertices, "cible")

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def in_degrees(self) -> Counter:
        return Counter(v for _, v in self.edges)

    def out_degrees(self) -> Counter:
        return Counter(u for u, _ in self.edges)

    def to_networkx(self) -> nx.DiGraph:
        graph = nx.DiGraph()
        graph.add_nodes_from(range(1, self.num_vertices + 1))
        graph.add_edges_from(self.edges)
        return graph


@dataclass(frozen=True)
class UGraph:
    """Graphe non orienté simple ; chaque arête est stockée (u, v) avec u < v."""

    num_vertices: int
    edges: Tuple[Edge, ...] = ()
    labels: Optional[Dict[int, str]] = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if self.num_vertices < 0:
            raise InstanceError(f"nombre de sommets négatif: {self.num_vertices}")
        normalized = []
        seen = set()
        for u, v in self.edges:
            u, v = int(u), int(v)
            if u == v:
                raise InstanceError(f"boucle sur le sommet {u}")
            _check_range(u, self.num_vertices, "sommet")
            _check_range(v, self.num_vertices, "sommet")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise InstanceError(f"arête en double: {key}")
            seen.add(key)
            normalized.append(key)
        object.__setattr__(self, 'edges', tuple(normalized))

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def degrees(self) -> Counter:
        counts = Counter()
        for u, v in self.edges:
            counts[u] += 1
            counts[v] += 1
        return counts

    def grips(self) -> FrozenSet[Edge]:
        """Arêtes dont les deux extrémités ont un degré au plus 2."""
        deg = self.degrees()
        return frozenset(e for e in self.edges if deg[e[0]] <= 2 and deg[e[1]] <= 2)

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(1, self.num_vertices + 1))
        graph.add_edges_from(self.edges)
        return graph


@dataclass(frozen=True)
class XceInstance:
    """Univers 1..|X|, ensemble exempté R, collection C (ordre d'entrée)."""

    universe_size: int
    exempt: Tuple[int, ...] = ()
    sets: Tuple[Tuple[int, ...], ...] = ()
    labels: Optional[Dict[int, str]] = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if self.universe_size < 0:
            raise InstanceError(f"taille d'univers négative: {self.universe_size}")
        exempt = tuple(sorted(set(self.exempt)))
        for x in exempt:
            _check_range(x, self.universe_size, "élément exempté")
        sets = []
        for subset in self.sets:
            members = tuple(sorted(subset))
            if not members:
                raise InstanceError("ensemble vide dans la collection")
            if len(set(members)) != len(members):
                raise InstanceError(f"élément répété dans l'ensemble {members}")
            for x in members:
                _check_range(x, self.universe_size, "élément")
            sets.append(members)
        object.__setattr__(self, 'exempt', exempt)
        object.__setattr__(self, 'sets', tuple(sets))

    @property
    def num_sets(self) -> int:
        return len(self.sets)

    def overlapping_costs(self) -> Counter:
        return Counter(x for subset in self.sets for x in subset)


@dataclass(frozen=True)
class Ap2dmInstance:
    """Univers 1..|X|, exemption R, paires non triviales de M.

    Les paires triviales (v, v) sont implicites.
    """

    universe_size: int
    exempt: Tuple[int, ...] = ()
    pairs: Tuple[Edge, ...] = ()
    labels: Optional[Dict[int, str]] = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if self.universe_size < 0:
            raise InstanceError(f"taille d'univers négative: {self.universe_size}")
        exempt = tuple(sorted(set(self.exempt)))
        for x in exempt:
            _check_range(x, self.universe_size, "élément exempté")
        seen = set()
        pairs = []
        for u, v in self.pairs:
            u, v = int(u), int(v)
            if u == v:
                raise InstanceError(f"paire triviale explicite ({u}, {v})")
            _check_range(u, self.universe_size, "élément")
            _check_range(v, self.universe_size, "élément")
            if (u, v) in seen:
                raise InstanceError(f"paire en double: ({u}, {v})")
            seen.add((u, v))
            pairs.append((u, v))
        object.__setattr__(self, 'exempt', exempt)
        object.__setattr__(self, 'pairs', tuple(pairs))

    def partners(self) -> Dict[int, Tuple[int, ...]]:
        """Partenaires autorisés de chaque élément, paire triviale comprise."""
        out = {v: [v] for v in range(1, self.universe_size + 1)}
        for u, v in self.pairs:
            out[u].append(v)
        return {v: tuple(ws) for v, ws in out.items()}


class LinMode(str, Enum):
    GEQ = "geq"
    BAND = "band"
    EQ = "eq"


@dataclass(frozen=True)
class LinSystem:
    """Système {0,1} creux : triplets (ligne, colonne, valeur) non nuls.

    `lower` porte b (GEQ, EQ) ou b₂ (BAND) ; `upper` porte b₁ en mode BAND.
    `col_bound` vaut None quand aucune borne de colonne n'est déclarée.
    """

    mode: LinMode
    num_rows: int
    num_cols: int
    entries: Tuple[Tuple[int, int, int], ...] = ()
    lower: Tuple[int, ...] = ()
    upper: Optional[Tuple[int, ...]] = None
    col_bound: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, 'mode', LinMode(self.mode))
        if self.num_rows < 0 or self.num_cols < 0:
            raise InstanceError("dimensions négatives")
        seen = set()
        entries = []
        for row, col, value in self.entries:
            row, col, value = int(row), int(col), int(value)
            _check_range(row, self.num_rows, "ligne")
            _check_range(col, self.num_cols, "colonne")
            if value == 0:
                raise InstanceError(f"coefficient nul en ({row}, {col})")
            if (row, col) in seen:
                raise InstanceError(f"coefficient en double en ({row}, {col})")
            seen.add((row, col))
            entries.append((row, col, value))
        object.__setattr__(self, 'entries', tuple(entries))
        lower = tuple(int(b) for b in self.lower)
        if len(lower) != self.num_rows:
            raise InstanceError(f"{len(lower)} bornes inférieures pour {self.num_rows} lignes")
        object.__setattr__(self, 'lower', lower)
        if self.mode is LinMode.BAND:
            if self.upper is None or len(self.upper) != self.num_rows:
                raise InstanceError("le mode band exige une borne supérieure par ligne")
            object.__setattr__(self, 'upper', tuple(int(b) for b in self.upper))
        elif self.upper is not None:
            raise InstanceError(f"bornes supérieures interdites en mode {self.mode.value}")

    def rows(self) -> Dict[int, Tuple[Tuple[int, int], ...]]:
        """Coefficients (colonne, valeur) de chaque ligne, dans l'ordre des triplets."""
        rows = {i: [] for i in range(1, self.num_rows + 1)}
        for row, col, value in self.entries:
            rows[row].append((col, value))
        return {i: tuple(r) for i, r in rows.items()}

    def column_counts(self) -> Counter:
        return Counter(col for _, col, _ in self.entries)

    def row_satisfied(self, row: int, value: int) -> bool:
        index = row - 1
        if self.mode is LinMode.GEQ:
            return value >= self.lower[index]
        if self.mode is LinMode.EQ:
            return value == self.lower[index]
        return self.lower[index] <= value <= self.upper[index]


@dataclass(frozen=True)
class Parity:
    """x_u ⊕ x_v = c"""

    u: int
    v: int
    c: int


@dataclass(frozen=True)
class Unit:
    """x_u = c"""

    u: int
    c: int


@dataclass(frozen=True)
class XorSystem:
    """Système ⊕2SAT.

    `contradiction` porte l'indice de la ligne source sans solution quand la
    traduction d'un système linéaire a rencontré une équation impossible.
    """

    num_vars: int
    constraints: Tuple[Union[Parity, Unit], ...] = ()
    contradiction: Optional[int] = None

    def __post_init__(self):
        if self.num_vars < 0:
            raise InstanceError(f"nombre de variables négatif: {self.num_vars}")
        object.__setattr__(self, 'constraints', tuple(self.constraints))
        for constraint in self.constraints:
            if constraint.c not in (0, 1):
                raise InstanceError(f"constante de parité invalide: {constraint.c}")
            _check_range(constraint.u, self.num_vars, "variable")
            if isinstance(constraint, Parity):
                _check_range(constraint.v, self.num_vars, "variable")


Instance = Union[CnfFormula, Digraph, UGraph, XceInstance, Ap2dmInstance, LinSystem, XorSystem]
