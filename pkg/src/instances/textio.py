"""Lecture et écriture des instances au format texte ligne à ligne.

Chaque fichier contient une instance ; les lignes commençant par '#' et les
lignes vides sont ignorées. La première ligne utile est l'en-tête ``p <type>``.
"""
from pathlib import Path
from typing import Callable, Dict, Iterator, List, Optional, Tuple, Type, Union

from .. import settings
from ..exceptions import InstanceError, ParseError
from .types import (
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

KINDS: Dict[str, type] = {
    "cnf2": CnfFormula,
    "digraph": Digraph,
    "graph": UGraph,
    "xce": XceInstance,
    "ap2dm": Ap2dmInstance,
    "lin": LinSystem,
    "xor": XorSystem,
}
KIND_OF: Dict[type, str] = {cls: kind for kind, cls in KINDS.items()}

Line = Tuple[int, List[str]]


def _lines(text: str) -> Iterator[Line]:
    for line_no, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith('#'):
            continue
        yield line_no, stripped.split()


def _int(token: str, line_no: int) -> int:
    try:
        value = int(token)
    except ValueError:
        raise ParseError(f"entier attendu, lu '{token}'", line_no) from None
    if not settings.ENTRY_MIN <= value <= settings.ENTRY_MAX:
        raise ParseError(f"valeur {value} hors de 63 bits signés", line_no)
    return value


def _ints(tokens: List[str], line_no: int) -> List[int]:
    return [_int(tok, line_no) for tok in tokens]


def _expect_count(tokens: List[str], count: int, line_no: int, tag: str):
    if len(tokens) != count:
        raise ParseError(f"ligne '{tag}' : {count - 1} valeur(s) attendue(s)", line_no)


def _in_range(value: int, upper: int, line_no: int, what: str):
    if not 1 <= value <= upper:
        raise ParseError(f"{what} {value} hors de [1, {upper}]", line_no)


def _parse_cnf(header: List[int], body: List[Line]) -> CnfFormula:
    num_vars, num_clauses = header
    clauses = []
    for line_no, tokens in body:
        values = _ints(tokens, line_no)
        if not values or values[-1] != 0:
            raise ParseError("une clause doit se terminer par 0", line_no)
        literals = values[:-1]
        if not literals or 0 in literals:
            raise ParseError("clause vide ou littéral nul", line_no)
        for lit in literals:
            _in_range(abs(lit), num_vars, line_no, "variable")
        clauses.append(tuple(literals))
    if len(clauses) != num_clauses:
        raise ParseError(f"{num_clauses} clauses annoncées, {len(clauses)} lues")
    return CnfFormula(num_vars, tuple(clauses))


def _parse_edges(header: List[int], body: List[Line], directed: bool):
    num_vertices, num_edges = header
    edges, seen = [], set()
    s = t = None
    for line_no, tokens in body:
        tag = tokens[0]
        if tag == 'e':
            _expect_count(tokens, 3, line_no, tag)
            u, v = _ints(tokens[1:], line_no)
            _in_range(u, num_vertices, line_no, "sommet")
            _in_range(v, num_vertices, line_no, "sommet")
            if not directed and not u < v:
                raise ParseError(f"arête ({u}, {v}) : u < v attendu", line_no)
            if (u, v) in seen:
                raise ParseError(f"arête en double ({u}, {v})", line_no)
            seen.add((u, v))
            edges.append((u, v))
        elif directed and tag in ('s', 't'):
            _expect_count(tokens, 2, line_no, tag)
            value = _int(tokens[1], line_no)
            _in_range(value, num_vertices, line_no, "sommet")
            if tag == 's':
                if s is not None:
                    raise ParseError("source déclarée deux fois", line_no)
                s = value
            else:
                if t is not None:
                    raise ParseError("cible déclarée deux fois", line_no)
                t = value
        else:
            raise ParseError(f"ligne inconnue '{tag}'", line_no)
    if len(edges) != num_edges:
        raise ParseError(f"{num_edges} arêtes annoncées, {len(edges)} lues")
    if not directed:
        return UGraph(num_vertices, tuple(edges))
    if s is None or t is None:
        raise ParseError("source ou cible manquante")
    return Digraph(num_vertices, tuple(edges), s, t)


def _parse_exempt(tokens: List[str], line_no: int, size: int, seen_r: bool) -> Tuple[int, ...]:
    if seen_r:
        raise ParseError("ligne 'r' répétée", line_no)
    ids = _ints(tokens[1:], line_no)
    for x in ids:
        _in_range(x, size, line_no, "élément")
    if len(set(ids)) != len(ids):
        raise ParseError("élément exempté répété", line_no)
    return tuple(ids)


def _parse_xce(header: List[int], body: List[Line]) -> XceInstance:
    size, num_sets = header
    exempt: Optional[Tuple[int, ...]] = None
    sets = []
    for line_no, tokens in body:
        tag = tokens[0]
        if tag == 'r':
            exempt = _parse_exempt(tokens, line_no, size, exempt is not None)
        elif tag == 'c':
            ids = _ints(tokens[1:], line_no)
            if not 1 <= len(ids) <= 3:
                raise ParseError("un ensemble contient 1 à 3 éléments", line_no)
            for x in ids:
                _in_range(x, size, line_no, "élément")
            if len(set(ids)) != len(ids):
                raise ParseError("élément répété dans l'ensemble", line_no)
            sets.append(tuple(ids))
        else:
            raise ParseError(f"ligne inconnue '{tag}'", line_no)
    if len(sets) != num_sets:
        raise ParseError(f"{num_sets} ensembles annoncés, {len(sets)} lus")
    return XceInstance(size, exempt or (), tuple(sets))


def _parse_ap2dm(header: List[int], body: List[Line]) -> Ap2dmInstance:
    (size,) = header
    exempt: Optional[Tuple[int, ...]] = None
    pairs, seen = [], set()
    for line_no, tokens in body:
        tag = tokens[0]
        if tag == 'r':
            exempt = _parse_exempt(tokens, line_no, size, exempt is not None)
        elif tag == 'm':
            _expect_count(tokens, 3, line_no, tag)
            u, v = _ints(tokens[1:], line_no)
            _in_range(u, size, line_no, "élément")
            _in_range(v, size, line_no, "élément")
            if u == v:
                raise ParseError("les paires triviales sont implicites", line_no)
            if (u, v) in seen:
                raise ParseError(f"paire en double ({u}, {v})", line_no)
            seen.add((u, v))
            pairs.append((u, v))
        else:
            raise ParseError(f"ligne inconnue '{tag}'", line_no)
    return Ap2dmInstance(size, exempt or (), tuple(pairs))


def _parse_lin(mode: LinMode, header: List[int], body: List[Line]) -> LinSystem:
    num_rows, num_cols, bound = header
    entries, seen = [], set()
    lower: Dict[int, int] = {}
    upper: Dict[int, int] = {}
    for line_no, tokens in body:
        tag = tokens[0]
        if tag == 'a':
            _expect_count(tokens, 4, line_no, tag)
            row, col, value = _ints(tokens[1:], line_no)
            _in_range(row, num_rows, line_no, "ligne")
            _in_range(col, num_cols, line_no, "colonne")
            if value == 0:
                raise ParseError("coefficient nul", line_no)
            if (row, col) in seen:
                raise ParseError(f"coefficient en double ({row}, {col})", line_no)
            seen.add((row, col))
            entries.append((row, col, value))
        elif tag in ('b', 'B'):
            _expect_count(tokens, 3, line_no, tag)
            row, value = _ints(tokens[1:], line_no)
            _in_range(row, num_rows, line_no, "ligne")
            target = lower if tag == 'b' else upper
            if tag == 'B' and mode is not LinMode.BAND:
                raise ParseError("borne 'B' hors du mode band", line_no)
            if row in target:
                raise ParseError(f"borne '{tag}' répétée pour la ligne {row}", line_no)
            target[row] = value
        else:
            raise ParseError(f"ligne inconnue '{tag}'", line_no)
    upper_bounds = None
    if mode is LinMode.BAND:
        missing = [row for row in range(1, num_rows + 1) if row not in upper]
        if missing:
            raise ParseError(f"borne 'B' manquante pour la ligne {missing[0]}")
        upper_bounds = tuple(upper[row] for row in range(1, num_rows + 1))
    return LinSystem(
        mode=mode,
        num_rows=num_rows,
        num_cols=num_cols,
        entries=tuple(entries),
        lower=tuple(lower.get(row, 0) for row in range(1, num_rows + 1)),
        upper=upper_bounds,
        col_bound=bound or None,
    )


def _parse_xor(header: List[int], body: List[Line]) -> XorSystem:
    num_vars, num_constraints = header
    constraints = []
    contradiction = None
    for line_no, tokens in body:
        tag = tokens[0]
        if tag == 'x':
            _expect_count(tokens, 4, line_no, tag)
            u, v, c = _ints(tokens[1:], line_no)
            _in_range(u, num_vars, line_no, "variable")
            _in_range(v, num_vars, line_no, "variable")
            if c not in (0, 1):
                raise ParseError("constante 0 ou 1 attendue", line_no)
            constraints.append(Parity(u, v, c))
        elif tag == 'u':
            _expect_count(tokens, 3, line_no, tag)
            u, c = _ints(tokens[1:], line_no)
            _in_range(u, num_vars, line_no, "variable")
            if c not in (0, 1):
                raise ParseError("constante 0 ou 1 attendue", line_no)
            constraints.append(Unit(u, c))
        elif tag == 'f':
            _expect_count(tokens, 2, line_no, tag)
            contradiction = _int(tokens[1], line_no)
        else:
            raise ParseError(f"ligne inconnue '{tag}'", line_no)
    if len(constraints) != num_constraints:
        raise ParseError(f"{num_constraints} contraintes annoncées, {len(constraints)} lues")
    return XorSystem(num_vars, tuple(constraints), contradiction)


_HEADER_SIZES = {"cnf2": 2, "digraph": 2, "graph": 2, "xce": 2, "ap2dm": 1, "lin": 4, "xor": 2}


def parse(text: str, expected: Optional[Type] = None) -> Instance:
    """Lit une instance ; `expected` restreint le type accepté."""
    lines = list(_lines(text))
    if not lines:
        raise ParseError("en-tête 'p' manquant")
    line_no, header = lines[0]
    if header[0] != 'p' or len(header) < 2 or header[1] not in KINDS:
        raise ParseError("en-tête 'p <type> ...' invalide", line_no)
    kind = header[1]
    cls = KINDS[kind]
    if expected is not None and cls is not expected:
        raise ParseError(f"type {kind} lu, {KIND_OF.get(expected, expected)} attendu", line_no)
    if len(header) != 2 + _HEADER_SIZES[kind]:
        raise ParseError(f"en-tête {kind} : {_HEADER_SIZES[kind]} champ(s) attendu(s)", line_no)
    body = lines[1:]
    try:
        if kind == "lin":
            try:
                mode = LinMode(header[2])
            except ValueError:
                raise ParseError(f"mode inconnu '{header[2]}'", line_no) from None
            numbers = _ints(header[3:], line_no)
            if min(numbers) < 0:
                raise ParseError("dimensions négatives", line_no)
            return _parse_lin(mode, numbers, body)
        numbers = _ints(header[2:], line_no)
        if min(numbers) < 0:
            raise ParseError("taille négative", line_no)
        if kind == "cnf2":
            return _parse_cnf(numbers, body)
        if kind in ("digraph", "graph"):
            return _parse_edges(numbers, body, directed=(kind == "digraph"))
        if kind == "xce":
            return _parse_xce(numbers, body)
        if kind == "ap2dm":
            return _parse_ap2dm(numbers, body)
        return _parse_xor(numbers, body)
    except InstanceError as exc:
        raise ParseError(str(exc)) from exc


def _join(prefix: str, values) -> str:
    return " ".join([prefix, *map(str, values)])


def _serialize_cnf(f: CnfFormula) -> List[str]:
    lines = [f"p cnf2 {f.num_vars} {f.num_clauses}"]
    lines += [" ".join(map(str, (*clause, 0))) for clause in f.clauses]
    return lines


def _serialize_digraph(g: Digraph) -> List[str]:
    lines = [f"p digraph {g.num_vertices} {g.num_edges}"]
    lines += [f"e {u} {v}" for u, v in g.edges]
    return lines + [f"s {g.s}", f"t {g.t}"]


def _serialize_ugraph(g: UGraph) -> List[str]:
    return [f"p graph {g.num_vertices} {g.num_edges}"] + [f"e {u} {v}" for u, v in g.edges]


def _serialize_xce(x: XceInstance) -> List[str]:
    lines = [f"p xce {x.universe_size} {x.num_sets}", _join("r", x.exempt)]
    return lines + [_join("c", subset) for subset in x.sets]


def _serialize_ap2dm(a: Ap2dmInstance) -> List[str]:
    lines = [f"p ap2dm {a.universe_size}", _join("r", a.exempt)]
    return lines + [f"m {u} {v}" for u, v in a.pairs]


def _serialize_lin(s: LinSystem) -> List[str]:
    lines = [f"p lin {s.mode.value} {s.num_rows} {s.num_cols} {s.col_bound or 0}"]
    lines += [f"a {row} {col} {value}" for row, col, value in s.entries]
    lines += [f"b {row} {b}" for row, b in enumerate(s.lower, start=1)]
    if s.mode is LinMode.BAND:
        lines += [f"B {row} {b}" for row, b in enumerate(s.upper, start=1)]
    return lines


def _serialize_xor(x: XorSystem) -> List[str]:
    lines = [f"p xor {x.num_vars} {len(x.constraints)}"]
    for constraint in x.constraints:
        if isinstance(constraint, Parity):
            lines.append(f"x {constraint.u} {constraint.v} {constraint.c}")
        else:
            lines.append(f"u {constraint.u} {constraint.c}")
    if x.contradiction is not None:
        lines.append(f"f {x.contradiction}")
    return lines


_SERIALIZERS: Dict[type, Callable[..., List[str]]] = {
    CnfFormula: _serialize_cnf,
    Digraph: _serialize_digraph,
    UGraph: _serialize_ugraph,
    XceInstance: _serialize_xce,
    Ap2dmInstance: _serialize_ap2dm,
    LinSystem: _serialize_lin,
    XorSystem: _serialize_xor,
}


def serialize(instance: Instance) -> str:
    """Texte canonique de l'instance, terminé par un saut de ligne."""
    return "\n".join(_SERIALIZERS[type(instance)](instance)) + "\n"


def read_instance(path: Union[str, Path], expected: Optional[Type] = None) -> Instance:
    return parse(Path(path).read_text(encoding="utf-8"), expected)


def write_instance(instance: Instance, path: Union[str, Path]) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(serialize(instance), encoding="utf-8")
    return path
