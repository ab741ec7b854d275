"""Réductions 2SAT₃ → 3XCE₂ et XCE₂ → 2LP.

Univers construit par `sat2_to_3xce2` (identifiants denses, dans l'ordre) :
  - X₁ : une occurrence z[j] par case de clause, 2(j−1)+case ; exemptée ;
  - X₂ : s_j = 2m + j ;
  - X₃ : les étiquettes t_i[1], t_i[2] réellement utilisées, par variable.
Collection : les paires A_j pour chaque clause, puis les ensembles B_i.
"""
import logging
from dataclasses import dataclass
from typing import Dict, Iterator, List, Sequence, Tuple

from ..exceptions import PreconditionError
from ..instances.tags import Tags
from ..instances.types import CnfFormula, LinMode, LinSystem, XceInstance
from ..instances.validation import validate
from .normalize import is_contradiction, is_normalized_2sat3
from .records import BoundsRecord, EntryRecord, Exempt, Header, Label, Record, SubsetRecord, collect
from .registry import reduction

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class VariableGadget:
    """Ensembles B_i d'une variable ; `kind` vaut '+', '-' ou '*'."""

    var: int
    kind: str
    tags: Tuple[int, ...]
    sets: Tuple[Tuple[int, ...], ...]


def _occurrence(j: int, slot: int) -> int:
    return 2 * (j - 1) + slot


def _literal_name(lit: int) -> str:
    return f"{'~' if lit < 0 else ''}x{abs(lit)}"


def variable_gadgets(f: CnfFormula) -> List[VariableGadget]:
    """Classe chaque variable (V⁽⁺⁾, V⁽⁻⁾, V⁽*⁾) et construit ses ensembles B_i."""
    m = f.num_clauses
    where: Dict[int, List[int]] = {}
    for j, clause in enumerate(f.clauses, start=1):
        for slot, lit in enumerate(clause, start=1):
            where.setdefault(lit, []).append(_occurrence(j, slot))
    next_tag = 3 * m + 1
    gadgets = []
    for var in range(1, f.num_vars + 1):
        pos, neg = where.get(var, []), where.get(-var, [])
        if (len(pos), len(neg)) == (2, 1):
            kind, twice, once = '+', pos, neg
        elif (len(pos), len(neg)) == (1, 2):
            kind, twice, once = '-', neg, pos
        elif (len(pos), len(neg)) == (1, 1):
            t1 = next_tag
            next_tag += 1
            gadgets.append(VariableGadget(var, '*', (t1,), ((pos[0], t1), (neg[0], t1))))
            continue
        else:
            raise PreconditionError(
                f"variable {var} : {len(pos)} occurrence(s) positive(s), {len(neg)} négative(s)"
            )
        t1, t2 = next_tag, next_tag + 1
        next_tag += 2
        sets = ((twice[0], t1), (twice[1], t2), (once[0], t1, t2))
        gadgets.append(VariableGadget(var, kind, (t1, t2), sets))
    return gadgets


def _stream_sat2_to_3xce2(f: CnfFormula) -> Iterator[Record]:
    m = f.num_clauses
    gadgets = variable_gadgets(f)
    yield Header("xce", 3 * m + sum(len(g.tags) for g in gadgets))
    for j, clause in enumerate(f.clauses, start=1):
        for slot, lit in enumerate(clause, start=1):
            element = _occurrence(j, slot)
            yield Label(element, f"{_literal_name(lit)}[{j}]")
            yield Exempt(element)
    for j in range(1, m + 1):
        yield Label(2 * m + j, f"s{j}")
    for gadget in gadgets:
        for k, tag in enumerate(gadget.tags, start=1):
            yield Label(tag, f"t{gadget.var}[{k}]")
    for j in range(1, m + 1):
        yield SubsetRecord((_occurrence(j, 1), 2 * m + j))
        yield SubsetRecord((_occurrence(j, 2), 2 * m + j))
    for gadget in gadgets:
        for subset in gadget.sets:
            yield SubsetRecord(subset)


def _stream_uncoverable() -> Iterator[Record]:
    yield Header("xce", 1)


@reduction(
    "sat2_to_3xce2", source=CnfFormula, target=XceInstance,
    in_param="m_vbl", out_param="m_set", k1=6, k2=0,
    normalizer="normalize_2sat3", family={"problem": "2sat3", "shape": "normal"},
)
def sat2_to_3xce2(f: CnfFormula) -> XceInstance:
    """Formule normalisée → instance de couverture exacte 2-recouvrante.

    La contradiction canonique donne l'univers {1} sans ensemble.
    """
    if is_contradiction(f):
        return collect(_stream_uncoverable())
    if not is_normalized_2sat3(f):
        raise PreconditionError("sat2_to_3xce2 attend une formule normalisée (normalize_2sat3)")
    return collect(_stream_sat2_to_3xce2(f))


def exact_cover_from_assignment(f: CnfFormula, assignment: Sequence[bool]) -> Tuple[int, ...]:
    """Indices (base 1) d'une couverture exacte tirée d'une affectation satisfaisante.

    Chaque clause retient sa première case vraie ; chaque variable bloque les
    occurrences de son littéral faux.
    """
    m = f.num_clauses
    chosen = []
    for j, clause in enumerate(f.clauses, start=1):
        slot = next(s for s, lit in enumerate(clause, start=1)
                    if assignment[abs(lit) - 1] == (lit > 0))
        chosen.append(2 * (j - 1) + slot)
    index = 2 * m
    for gadget in variable_gadgets(f):
        value = assignment[gadget.var - 1]
        if gadget.kind == '*':
            # le premier ensemble bloque x, le second bloque ¬x
            chosen.append(index + (2 if value else 1))
        else:
            twice_true = value if gadget.kind == '+' else not value
            chosen.extend([index + 3] if twice_true else [index + 1, index + 2])
        index += len(gadget.sets)
    return tuple(sorted(chosen))


def _stream_xce2_to_2lp(x: XceInstance) -> Iterator[Record]:
    yield Header("lin", x.num_sets, rows=x.universe_size, mode=LinMode.BAND, col_bound=3)
    exempt = set(x.exempt)
    containing: Dict[int, List[int]] = {}
    for index, subset in enumerate(x.sets, start=1):
        for element in subset:
            containing.setdefault(element, []).append(index)
    for element in range(1, x.universe_size + 1):
        for index in containing.get(element, []):
            yield EntryRecord(element, index, 1)
        if element in exempt:
            yield BoundsRecord(element, 0, 1)
        else:
            if not containing.get(element):
                logger.debug(f"xce2_to_2lp: élément {element} non couvrable, réponse NON")
            yield BoundsRecord(element, 1, 1)


@reduction(
    "xce2_to_2lp", source=XceInstance, target=LinSystem,
    in_param="m_set", out_param="m_row", k1=1, k2=0,
    family={"problem": "xce", "overlap_bound": 2},
)
def xce2_to_2lp(x: XceInstance) -> LinSystem:
    """Une colonne par ensemble (x_j = 1 ssi C_j est choisi), une ligne par élément.

    Un élément non exempté sans ensemble donne une ligne vide 1 ≤ 0 ≤ 1,
    donc un système infaisable.
    """
    overlaps = [v for v in validate(x, Tags(overlap_bound=2)) if v.code == "overlap"]
    if overlaps:
        raise PreconditionError(f"instance non 2-recouvrante: {overlaps[0]}")
    return collect(_stream_xce2_to_2lp(x))
