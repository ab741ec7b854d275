"""Réductions entre programmes linéaires {0,1} creux et vers ⊕2SAT."""
import logging
from itertools import product
from typing import Iterator, List, Tuple

from ..exceptions import PreconditionError
from ..instances.types import LinMode, LinSystem, Parity, Unit, XorSystem
from .records import BoundsRecord, Contradiction, EntryRecord, Header, Record, collect
from .registry import reduction

logger = logging.getLogger(__name__)


def _require_mode(s: LinSystem, mode: LinMode, name: str):
    if s.mode is not mode:
        raise PreconditionError(f"{name} attend un système {mode.value}, reçu {s.mode.value}")


def _stream_lp_to_2lp(s: LinSystem) -> Iterator[Record]:
    yield Header("lin", s.num_cols, rows=s.num_rows, mode=LinMode.BAND, col_bound=s.col_bound)
    for row, col, value in s.entries:
        yield EntryRecord(row, col, value)
    for row, coefficients in s.rows().items():
        ceiling = sum(abs(value) for _, value in coefficients)
        yield BoundsRecord(row, s.lower[row - 1], ceiling)


@reduction(
    "lp_to_2lp", source=LinSystem, target=LinSystem,
    in_param="m_col", out_param="m_col", k1=1, k2=0,
    family={"problem": "lin_geq", "col_bound": 3},
)
def lp_to_2lp(s: LinSystem) -> LinSystem:
    """Ax ≥ b devient b ≤ Ax ≤ Σ|a_ij|, plafond toujours atteint."""
    _require_mode(s, LinMode.GEQ, "lp_to_2lp")
    return collect(_stream_lp_to_2lp(s))


def _stream_twolp_to_lp(s: LinSystem) -> Iterator[Record]:
    used = sorted({col for _, col, _ in s.entries})
    index = {col: new for new, col in enumerate(used, start=1)}
    m, n = s.num_rows, len(used)
    top = max(s.column_counts().values(), default=0)
    bound = (s.col_bound if s.col_bound is not None else top) + 2
    yield Header("lin", 2 * n, rows=2 * m + 2 * n, mode=LinMode.GEQ, col_bound=bound)
    for row, col, value in s.entries:
        yield EntryRecord(row, index[col], value)
    for row in range(1, m + 1):
        yield BoundsRecord(row, s.lower[row - 1])
    for row, col, value in s.entries:
        yield EntryRecord(m + row, n + index[col], -value)
    for row in range(1, m + 1):
        yield BoundsRecord(m + row, -s.upper[row - 1])
    for j in range(1, n + 1):
        # y_j = y_{n+j} en deux inégalités à deux variables
        yield EntryRecord(2 * m + 2 * j - 1, j, 1)
        yield EntryRecord(2 * m + 2 * j - 1, n + j, -1)
        yield BoundsRecord(2 * m + 2 * j - 1, 0)
        yield EntryRecord(2 * m + 2 * j, n + j, 1)
        yield EntryRecord(2 * m + 2 * j, j, -1)
        yield BoundsRecord(2 * m + 2 * j, 0)


@reduction(
    "twolp_to_lp", source=LinSystem, target=LinSystem,
    in_param="m_col", out_param="m_col", k1=6, k2=0,
    family={"problem": "lin_band", "col_bound": 3},
)
def twolp_to_lp(s: LinSystem) -> LinSystem:
    """b₂ ≤ Ax ≤ b₁ devient un système ≥ sur deux copies couplées des variables.

    Les colonnes sans coefficient sont d'abord retirées ; la sortie a
    (2m + 2n′) lignes et 2n′ colonnes.
    """
    _require_mode(s, LinMode.BAND, "twolp_to_lp")
    return collect(_stream_twolp_to_lp(s))


def _solutions(coefficients: List[Tuple[int, int]], b: int) -> List[Tuple[int, ...]]:
    return [
        bits for bits in product((0, 1), repeat=len(coefficients))
        if sum(value * bit for (_, value), bit in zip(coefficients, bits)) == b
    ]


def _stream_le_to_xor2sat(s: LinSystem) -> Iterator[Record]:
    yield Header("xor", s.num_cols)
    for row, coefficients in s.rows().items():
        if len(coefficients) > 2:
            raise PreconditionError(f"ligne {row} avec {len(coefficients)} coefficients non nuls")
        solutions = _solutions(list(coefficients), s.lower[row - 1])
        if not solutions:
            logger.debug(f"le_to_xor2sat: ligne {row} sans solution")
            yield Contradiction(row)
            continue
        if len(solutions) == 2 ** len(coefficients):
            continue
        columns = [col for col, _ in coefficients]
        if len(solutions) == 1:
            for col, bit in zip(columns, solutions[0]):
                yield Unit(col, bit)
            continue
        # deux solutions sur deux variables
        first, second = solutions
        if first[0] == second[0]:
            yield Unit(columns[0], first[0])
        elif first[1] == second[1]:
            yield Unit(columns[1], first[1])
        else:
            yield Parity(columns[0], columns[1], first[0] ^ first[1])


@reduction(
    "le_to_xor2sat", source=LinSystem, target=XorSystem,
    in_param="m_row", out_param="m_vbl", k1=1, k2=0,
    family={"problem": "lin_eq", "col_bound": 3},
)
def le_to_xor2sat(s: LinSystem) -> XorSystem:
    """Traduit chaque équation à une ou deux variables par son ensemble de solutions."""
    _require_mode(s, LinMode.EQ, "le_to_xor2sat")
    return collect(_stream_le_to_xor2sat(s))
