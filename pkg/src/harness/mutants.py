"""Réductions volontairement faussées.

Chaque mutant reprend une réduction correcte avec une seule altération ; une
campagne de vérification doit trouver au moins un contre-exemple.
"""
from dataclasses import replace
from typing import Iterable, Iterator

from ..instances.types import CnfFormula, LinSystem, Parity, UGraph, XceInstance, XorSystem
from ..reductions.exact_cover import _stream_sat2_to_3xce2, _stream_xce2_to_2lp
from ..reductions.linear import _stream_le_to_xor2sat, _stream_twolp_to_lp
from ..reductions.normalize import is_contradiction
from ..reductions.records import BoundsRecord, ClauseRecord, EntryRecord, Exempt, Header, Record, collect
from ..reductions.registry import reduction


def _strict_exempt(records: Iterable[Record]) -> Iterator[Record]:
    for record in records:
        if isinstance(record, BoundsRecord) and record.lower == 0:
            yield BoundsRecord(record.row, 1, record.upper)
        else:
            yield record


def _uncoupled(records: Iterable[Record], num_rows: int) -> Iterator[Record]:
    # seules les 2m premières lignes subsistent
    for record in records:
        if isinstance(record, Header):
            yield replace(record, rows=2 * num_rows)
        elif isinstance(record, (EntryRecord, BoundsRecord)) and record.row > 2 * num_rows:
            continue
        else:
            yield record


def _flip_equalities(records: Iterable[Record]) -> Iterator[Record]:
    for record in records:
        if isinstance(record, Parity) and record.c == 0:
            yield Parity(record.u, record.v, 1)
        else:
            yield record


def _stream_cvc3_to_sat2_flip(g: UGraph) -> Iterator[Record]:
    degree = g.degrees()
    yield Header("cnf2", g.num_vertices)
    for u, v in g.edges:
        yield ClauseRecord((u, v))
        if degree[u] > 2 or degree[v] > 2:
            # (u ∨ v̄) au lieu de (ū ∨ v̄) : la formule devient toujours satisfiable
            yield ClauseRecord((u, -v))


@reduction(
    "mutant_cvc3_to_sat2_flip", source=UGraph, target=CnfFormula,
    in_param="m_ver", out_param="m_vbl", k1=1, k2=0,
    family={"problem": "ugraph", "deg_bound": 3},
)
def mutant_cvc3_to_sat2_flip(g: UGraph) -> CnfFormula:
    return collect(_stream_cvc3_to_sat2_flip(g))


@reduction(
    "mutant_xce2_to_2lp_strict_exempt", source=XceInstance, target=LinSystem,
    in_param="m_set", out_param="m_row", k1=1, k2=0,
    family={"problem": "xce", "overlap_bound": 2},
)
def mutant_xce2_to_2lp_strict_exempt(x: XceInstance) -> LinSystem:
    """Les éléments exemptés doivent aussi être couverts exactement une fois."""
    return collect(_strict_exempt(_stream_xce2_to_2lp(x)))


@reduction(
    "mutant_sat2_to_3xce2_no_exemption", source=CnfFormula, target=XceInstance,
    in_param="m_vbl", out_param="m_set", k1=6, k2=0,
    normalizer="normalize_2sat3", family={"problem": "2sat3", "shape": "normal"},
)
def mutant_sat2_to_3xce2_no_exemption(f: CnfFormula) -> XceInstance:
    if is_contradiction(f):
        return XceInstance(1)
    return collect(r for r in _stream_sat2_to_3xce2(f) if not isinstance(r, Exempt))


@reduction(
    "mutant_twolp_to_lp_uncoupled", source=LinSystem, target=LinSystem,
    in_param="m_col", out_param="m_col", k1=6, k2=0,
    family={"problem": "lin_band", "col_bound": 3},
)
def mutant_twolp_to_lp_uncoupled(s: LinSystem) -> LinSystem:
    """Les deux copies des variables ne sont plus liées."""
    return collect(_uncoupled(_stream_twolp_to_lp(s), s.num_rows))


@reduction(
    "mutant_le_to_xor2sat_parity", source=LinSystem, target=XorSystem,
    in_param="m_row", out_param="m_vbl", k1=1, k2=0,
    family={"problem": "lin_eq", "col_bound": 3},
)
def mutant_le_to_xor2sat_parity(s: LinSystem) -> XorSystem:
    """Une égalité x_u = x_v devient x_u ≠ x_v."""
    return collect(_flip_equalities(_stream_le_to_xor2sat(s)))
