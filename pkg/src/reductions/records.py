"""Enregistrements émis par les réductions et collecteur qui les assemble.

Une réduction est un générateur : elle émet un en-tête puis les objets de
l'instance produite dans l'ordre de construction, sans garder la sortie en
mémoire. Le collecteur, côté appelant, construit l'instance finale.
"""
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Tuple, Union

from ..exceptions import InstanceError
from ..instances.types import (
    Ap2dmInstance,
    CnfFormula,
    Digraph,
    Instance,
    LinMode,
    LinSystem,
    Parity,
    UGraph,
    Unit,
    XceInstance,
    XorSystem,
)


@dataclass(frozen=True)
class Header:
    kind: str
    size: int
    rows: int = 0
    mode: Optional[LinMode] = None
    col_bound: Optional[int] = None


@dataclass(frozen=True)
class Label:
    ident: int
    name: str


@dataclass(frozen=True)
class ClauseRecord:
    literals: Tuple[int, ...]


@dataclass(frozen=True)
class EdgeRecord:
    u: int
    v: int


@dataclass(frozen=True)
class Endpoints:
    s: int
    t: int


@dataclass(frozen=True)
class Exempt:
    ident: int


@dataclass(frozen=True)
class SubsetRecord:
    elements: Tuple[int, ...]


@dataclass(frozen=True)
class PairRecord:
    u: int
    v: int


@dataclass(frozen=True)
class EntryRecord:
    row: int
    col: int
    value: int


@dataclass(frozen=True)
class BoundsRecord:
    row: int
    lower: int
    upper: Optional[int] = None


@dataclass(frozen=True)
class Contradiction:
    row: int


Record = Union[
    Header, Label, ClauseRecord, EdgeRecord, Endpoints, Exempt, SubsetRecord,
    PairRecord, EntryRecord, BoundsRecord, Contradiction, Parity, Unit,
]


class InstanceCollector:
    """Assemble une instance à partir d'un flux d'enregistrements."""

    def __init__(self):
        self.header: Optional[Header] = None
        self.labels: Dict[int, str] = {}
        self.items: List = []
        self.exempt: List[int] = []
        self.endpoints: Optional[Endpoints] = None
        self.lower: Dict[int, int] = {}
        self.upper: Dict[int, int] = {}
        self.contradiction: Optional[int] = None

    def feed(self, record: Record):
        if isinstance(record, Header):
            if self.header is not None:
                raise InstanceError("en-tête émis deux fois")
            self.header = record
            return
        if self.header is None:
            raise InstanceError("enregistrement reçu avant l'en-tête")
        if isinstance(record, Label):
            self.labels[record.ident] = record.name
        elif isinstance(record, Exempt):
            self.exempt.append(record.ident)
        elif isinstance(record, Endpoints):
            self.endpoints = record
        elif isinstance(record, BoundsRecord):
            self.lower[record.row] = record.lower
            if record.upper is not None:
                self.upper[record.row] = record.upper
        elif isinstance(record, Contradiction):
            if self.contradiction is None:
                self.contradiction = record.row
        else:
            self.items.append(record)

    def build(self) -> Instance:
        header = self.header
        if header is None:
            raise InstanceError("flux sans en-tête")
        labels = self.labels or None
        if header.kind == "cnf2":
            return CnfFormula(header.size, tuple(r.literals for r in self.items))
        if header.kind == "graph":
            return UGraph(header.size, tuple((r.u, r.v) for r in self.items), labels)
        if header.kind == "digraph":
            if self.endpoints is None:
                raise InstanceError("graphe orienté sans extrémités")
            edges = tuple((r.u, r.v) for r in self.items)
            return Digraph(header.size, edges, self.endpoints.s, self.endpoints.t, labels)
        if header.kind == "xce":
            sets = tuple(r.elements for r in self.items)
            return XceInstance(header.size, tuple(self.exempt), sets, labels)
        if header.kind == "ap2dm":
            pairs = tuple((r.u, r.v) for r in self.items)
            return Ap2dmInstance(header.size, tuple(self.exempt), pairs, labels)
        if header.kind == "lin":
            rows = range(1, header.rows + 1)
            upper = None
            if header.mode is LinMode.BAND:
                upper = tuple(self.upper.get(row, 0) for row in rows)
            return LinSystem(
                mode=header.mode,
                num_rows=header.rows,
                num_cols=header.size,
                entries=tuple((r.row, r.col, r.value) for r in self.items),
                lower=tuple(self.lower.get(row, 0) for row in rows),
                upper=upper,
                col_bound=header.col_bound,
            )
        if header.kind == "xor":
            return XorSystem(header.size, tuple(self.items), self.contradiction)
        raise InstanceError(f"type de sortie inconnu: {header.kind}")


def collect(stream: Iterable[Record]) -> Instance:
    collector = InstanceCollector()
    for record in stream:
        collector.feed(record)
    return collector.build()
