"""Générateurs d'instances aléatoires, déterministes en la graine.

Le tirage utilise `numpy.random.default_rng(seed)` (PCG64). Les bornes
d'occurrences, de degré et de recouvrement sont respectées par construction,
en consommant des crédits par objet, sans rejet. Avec probabilité `sat_bias`,
une solution (affectation, chemin, couverture, vecteur) est plantée.
"""
import logging
from collections import Counter
from itertools import combinations, permutations
from typing import Callable, Dict, List, Tuple

import numpy as np

from ..exceptions import GeneratorConstraintError
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
from .genspec import GenSpec

logger = logging.getLogger(__name__)

# motifs (occurrences positives, négatives) d'une variable en forme normale
NORMAL_PATTERNS = ((1, 1), (2, 1), (1, 2))

MIN_SIZES = {"dstcon_normal": 3, "ap2dm_image": 3}


def min_size(spec: GenSpec) -> int:
    if spec.problem == "2sat3" and spec.shape == "normal":
        return 2
    return MIN_SIZES.get(spec.problem, 1)


def trial_spec(base: GenSpec, index: int) -> GenSpec:
    """Spécification de l'essai `index` : tailles cycliques, graine base + index."""
    low = min_size(base)
    high = max(base.size, low)
    size = low + index % (high - low + 1)
    return base.model_copy(update={"size": size, "seed": (base.seed + index) % 2 ** 64})


def _planted(spec: GenSpec, rng: np.random.Generator) -> bool:
    return bool(rng.random() < spec.sat_bias)


def _generate_2sat3(spec: GenSpec, rng: np.random.Generator) -> CnfFormula:
    if spec.shape == "normal":
        return _generate_2sat3_normal(spec, rng)
    n = spec.size
    limit = spec.occ_bound * n // 2
    if spec.clauses is not None and spec.clauses > limit:
        raise GeneratorConstraintError(
            f"{spec.clauses} clauses > ⌊{spec.occ_bound}·{n}/2⌋ = {limit}"
        )
    if spec.clauses is not None:
        m = spec.clauses
    else:
        m = int(rng.integers(min(max(1, n // 2), limit), limit + 1))
    planted = _planted(spec, rng)
    sigma = rng.integers(0, 2, size=n + 1).astype(bool)
    credits = np.full(n + 1, spec.occ_bound)
    credits[0] = 0
    clauses = []
    for _ in range(m):
        available = np.flatnonzero(credits > 0)
        if len(available) == 0:
            break
        width = 1 if len(available) == 1 or rng.random() < 0.15 else 2
        chosen = rng.choice(available, size=width, replace=False)
        signs = rng.integers(0, 2, size=width)
        clause = [int(v) if sign else -int(v) for v, sign in zip(chosen, signs)]
        if planted and not any(sigma[abs(lit)] == (lit > 0) for lit in clause):
            clause[0] = -clause[0]
        credits[chosen] -= 1
        clauses.append(tuple(clause))
    return CnfFormula(n, tuple(clauses))


def _generate_2sat3_normal(spec: GenSpec, rng: np.random.Generator) -> CnfFormula:
    n = spec.size
    if n < 2:
        raise GeneratorConstraintError("la forme normale demande au moins 2 variables")
    choices = NORMAL_PATTERNS if spec.occ_bound >= 3 else NORMAL_PATTERNS[:1]
    patterns = [choices[int(k)] for k in rng.integers(0, len(choices), size=n)]
    if sum(p + q for p, q in patterns) % 2:
        if (1, 1) in patterns:
            patterns[patterns.index((1, 1))] = (2, 1)
        else:
            patterns[0] = (1, 1)
    literals = []
    for var, (pos, neg) in enumerate(patterns, start=1):
        literals += [var] * pos + [-var] * neg
    for _ in range(200):
        order = [literals[int(k)] for k in rng.permutation(len(literals))]
        clauses = list(zip(order[0::2], order[1::2]))
        if all(abs(a) != abs(b) for a, b in clauses):
            return CnfFormula(n, tuple(clauses))
    raise GeneratorConstraintError(f"aucun appariement propre trouvé pour {n} variables")


def _generate_ugraph(spec: GenSpec, rng: np.random.Generator) -> UGraph:
    n, bound = spec.size, spec.deg_bound
    planted = _planted(spec, rng)
    inside = rng.random(n + 1) < 0.5
    target = int(rng.integers(n // 2, bound * n // 2 + 1))
    candidates = list(combinations(range(1, n + 1), 2))
    degree = Counter()
    edges = []
    for k in rng.permutation(len(candidates)):
        if len(edges) >= target:
            break
        u, v = candidates[int(k)]
        if degree[u] < bound and degree[v] < bound:
            edges.append((u, v))
            degree[u] += 1
            degree[v] += 1
    if planted:
        # la couverture plantée couvre tout et ses arêtes internes sont des prises
        edges = [(u, v) for u, v in edges if inside[u] or inside[v]]
        degree = Counter(x for e in edges for x in e)
        edges = [
            (u, v) for u, v in edges
            if not (inside[u] and inside[v]) or (degree[u] <= 2 and degree[v] <= 2)
        ]
    return UGraph(n, tuple(edges))


def _generate_digraph(spec: GenSpec, rng: np.random.Generator) -> Digraph:
    n, bound = spec.size, spec.deg_bound
    if n == 1:
        return Digraph(1, (), 1, 1)
    s, t = (int(v) for v in rng.choice(np.arange(1, n + 1), size=2, replace=False))
    planted = _planted(spec, rng)
    degree = Counter()
    edges: List[Tuple[int, int]] = []

    def add(u: int, v: int):
        if u != v and (u, v) not in edges and degree[u] < bound and degree[v] < bound:
            edges.append((u, v))
            degree[u] += 1
            degree[v] += 1

    if planted:
        inner = [int(v) for v in rng.permutation(np.arange(1, n + 1)) if v not in (s, t)]
        path = [s] + inner[:int(rng.integers(0, len(inner) + 1))] + [t]
        for u, v in zip(path, path[1:]):
            add(u, v)
    target = int(rng.integers(n // 2, bound * n // 2 + 1))
    candidates = list(permutations(range(1, n + 1), 2))
    for k in rng.permutation(len(candidates)):
        if len(edges) >= target:
            break
        add(*candidates[int(k)])
    return Digraph(n, tuple(edges), s, t)


def _generate_dstcon_normal(spec: GenSpec, rng: np.random.Generator) -> Digraph:
    """Graphe déjà normalisé : intermédiaires 1..n−2, s = n−1, t = n."""
    n = spec.size
    if n < 3:
        raise GeneratorConstraintError("un graphe normalisé a au moins 3 sommets")
    s, t = n - 1, n
    inner = list(range(1, n - 1))
    planted = _planted(spec, rng)
    indeg, outdeg = Counter(), Counter()
    edges: List[Tuple[int, int]] = []

    def add(u: int, v: int):
        if u != v and (u, v) not in edges and outdeg[u] < 2 and indeg[v] < 2:
            edges.append((u, v))
            outdeg[u] += 1
            indeg[v] += 1

    if planted:
        order = [int(v) for v in rng.permutation(inner)]
        path = order[:int(rng.integers(1, len(inner) + 1))]
        add(s, path[0])
        add(path[-1], t)
        for u, v in zip(path, path[1:]):
            add(u, v)
    else:
        add(s, int(rng.choice(inner)))
        add(int(rng.choice(inner)), t)
    candidates = list(permutations(inner, 2))
    target = len(edges) + int(rng.integers(0, len(inner) + 1))
    for k in rng.permutation(len(candidates)):
        if len(edges) >= target:
            break
        add(*candidates[int(k)])
    labels = {v: f"v{v}" for v in inner}
    labels.update({s: "s", t: "t"})
    return Digraph(n, tuple(edges), s, t, labels)


def _generate_xce(spec: GenSpec, rng: np.random.Generator) -> XceInstance:
    n = spec.size
    bound = spec.overlap_bound or 2
    universe = list(range(1, n + 1))
    exempt = [x for x, draw in zip(universe, rng.random(n)) if draw < spec.exemption_density]
    credits = Counter({x: bound for x in universe})
    sets: List[Tuple[int, ...]] = []
    if _planted(spec, rng):
        keep = rng.random(n) < 0.5
        order = [int(x) for x in rng.permutation(universe) if x not in exempt or keep[int(x) - 1]]
        i = 0
        while i < len(order):
            block = tuple(order[i:i + int(rng.integers(1, 4))])
            sets.append(block)
            credits.subtract(block)
            i += len(block)
    for _ in range(int(rng.integers(0, n + 1))):
        available = [x for x in universe if credits[x] > 0]
        if not available:
            break
        width = min(int(rng.integers(1, 4)), len(available))
        block = tuple(int(x) for x in rng.choice(available, size=width, replace=False))
        sets.append(block)
        credits.subtract(block)
    sets = [sets[int(k)] for k in rng.permutation(len(sets))]
    return XceInstance(n, tuple(exempt), tuple(sets))


def _generate_ap2dm(spec: GenSpec, rng: np.random.Generator) -> Ap2dmInstance:
    n = spec.size
    bound = spec.overlap_bound or 4
    if bound < 2:
        raise GeneratorConstraintError("AP2DM demande overlap_bound ≥ 2 pour relier R")
    r = min(int(rng.binomial(n, spec.exemption_density)), n // 2)
    exempt = sorted(int(x) for x in rng.choice(np.arange(1, n + 1), size=r, replace=False))
    free = [x for x in range(1, n + 1) if x not in exempt]
    # la paire triviale consomme un crédit de chaque côté
    out_credit = Counter({x: bound - 1 for x in range(1, n + 1)})
    in_credit = Counter(out_credit)
    pairs: List[Tuple[int, int]] = []

    def add(u: int, v: int):
        if u != v and (u, v) not in pairs and out_credit[u] > 0 and in_credit[v] > 0:
            pairs.append((u, v))
            out_credit[u] -= 1
            in_credit[v] -= 1

    for i, e in enumerate(exempt):
        add(e, free[i % len(free)])
        add(free[(i + 1) % len(free)], e)
    for _ in range(int(rng.integers(0, n * (bound - 1) + 1))):
        u, v = (int(x) for x in rng.integers(1, n + 1, size=2))
        add(u, v)
    return Ap2dmInstance(n, tuple(exempt), tuple(pairs))


def _generate_ap2dm_image(spec: GenSpec, rng: np.random.Generator) -> Ap2dmInstance:
    from ..reductions.matching import dstcon_to_ap2dm

    return dstcon_to_ap2dm(_generate_dstcon_normal(spec, rng))


def _generate_lin(spec: GenSpec, rng: np.random.Generator, mode: LinMode) -> LinSystem:
    n = spec.size
    m = spec.clauses if spec.clauses is not None else int(rng.integers(max(1, n // 2), n + 2))
    planted = _planted(spec, rng)
    x = rng.integers(0, 2, size=n + 1)
    credits = Counter({c: spec.col_bound for c in range(1, n + 1)})
    entries, lower, upper = [], [], []
    for row in range(1, m + 1):
        available = [c for c in range(1, n + 1) if credits[c] > 0]
        width = min(int(rng.integers(1, 3)), len(available))
        cols = sorted(int(c) for c in rng.choice(available, size=width, replace=False)) if width else []
        values = [int(rng.integers(1, 4)) * (1 if rng.random() < 0.5 else -1) for _ in cols]
        for col, value in zip(cols, values):
            entries.append((row, col, value))
            credits[col] -= 1
        low = sum(v for v in values if v < 0)
        high = sum(v for v in values if v > 0)
        actual = sum(v * int(x[c]) for c, v in zip(cols, values))
        if mode is LinMode.BAND:
            if planted:
                b2 = actual - int(rng.integers(0, 2))
                b1 = actual + int(rng.integers(0, 2))
            else:
                b2 = int(rng.integers(low, high + 2))
                b1 = b2 + int(rng.integers(0, 2))
            lower.append(b2)
            upper.append(b1)
        elif mode is LinMode.EQ:
            lower.append(actual if planted else int(rng.integers(low, high + 2)))
        else:
            lower.append(actual - int(rng.integers(0, 2)) if planted else int(rng.integers(low, high + 2)))
    return LinSystem(
        mode=mode, num_rows=m, num_cols=n, entries=tuple(entries), lower=tuple(lower),
        upper=tuple(upper) if mode is LinMode.BAND else None, col_bound=spec.col_bound,
    )


def _generate_xor(spec: GenSpec, rng: np.random.Generator) -> XorSystem:
    n = spec.size
    m = spec.clauses if spec.clauses is not None else int(rng.integers(0, 2 * n + 1))
    planted = _planted(spec, rng)
    sigma = rng.integers(0, 2, size=n + 1)
    constraints = []
    for _ in range(m):
        if n >= 2 and rng.random() < 0.8:
            u, v = (int(x) for x in rng.choice(np.arange(1, n + 1), size=2, replace=False))
            c = int(sigma[u] ^ sigma[v]) if planted else int(rng.integers(0, 2))
            constraints.append(Parity(u, v, c))
        else:
            u = int(rng.integers(1, n + 1))
            c = int(sigma[u]) if planted else int(rng.integers(0, 2))
            constraints.append(Unit(u, c))
    return XorSystem(n, tuple(constraints))


GENERATORS: Dict[str, Callable[[GenSpec, np.random.Generator], Instance]] = {
    "2sat3": _generate_2sat3,
    "ugraph": _generate_ugraph,
    "digraph": _generate_digraph,
    "dstcon_normal": _generate_dstcon_normal,
    "xce": _generate_xce,
    "ap2dm": _generate_ap2dm,
    "ap2dm_image": _generate_ap2dm_image,
    "lin_geq": lambda spec, rng: _generate_lin(spec, rng, LinMode.GEQ),
    "lin_band": lambda spec, rng: _generate_lin(spec, rng, LinMode.BAND),
    "lin_eq": lambda spec, rng: _generate_lin(spec, rng, LinMode.EQ),
    "xor": _generate_xor,
}


def generate(spec: GenSpec) -> Instance:
    """Instance déterministe pour `spec` (même spec, même graine, même instance)."""
    rng = np.random.default_rng(spec.seed)
    instance = GENERATORS[spec.problem](spec, rng)
    logger.debug(f"Instance {spec.problem} générée (taille {spec.size}, graine {spec.seed})")
    return instance
