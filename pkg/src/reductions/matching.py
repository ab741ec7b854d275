"""DSTCON → AP2DM et réduction de Turing AP2DM → DSTCON.

Univers de `dstcon_to_ap2dm` pour V⁽⁻⁾ = (v₁, …, v_n), sommets hors s et t
triés par identifiant : s = 1, t = 2, puis les couches
[v_i, 0] = 2+i, [v_i, 1] = 2+n+i, [v_i, 2] = 2+2n+i. La couche 0 est exemptée.
"""
import logging
from dataclasses import dataclass
from typing import Callable, Dict, Iterator, List, Optional, Tuple

from ..exceptions import PreconditionError
from ..instances.types import Ap2dmInstance, Digraph
from ..oracles.graphs import solve_dstcon
from ..oracles.matching import required_pairs
from .normalize import is_dstcon_normal, reduce_degree_dstcon
from .records import Exempt, Header, Label, PairRecord, Record, collect
from .registry import reduction
from .report import QueryLog, ReductionReport

logger = logging.getLogger(__name__)

Pair = Tuple[int, int]


def layer_ids(g: Digraph) -> Dict[Tuple[int, int], int]:
    """Identifiant de [v, l] pour chaque sommet intermédiaire v et couche l."""
    inner = [v for v in range(1, g.num_vertices + 1) if v not in (g.s, g.t)]
    n = len(inner)
    return {(v, layer): 2 + layer * n + i
            for i, v in enumerate(inner, start=1) for layer in range(3)}


def _pair_families(g: Digraph, ids: Dict[Tuple[int, int], int]) -> List[Pair]:
    s, t = 1, 2
    inner = [v for v in range(1, g.num_vertices + 1) if v not in (g.s, g.t)]
    pairs: List[Pair] = []
    # M₀ : E restreint aux sommets intermédiaires, couche 0
    for u, v in g.edges:
        if u in (g.s, g.t) or v in (g.s, g.t):
            continue
        pairs.append((ids[(u, 0)], ids[(v, 0)]))
    # M₁, M₂ : chaînes dans les deux sens sur les couches 1 et 2
    for layer in (1, 2):
        for here, there in zip(inner, inner[1:]):
            pairs.append((ids[(here, layer)], ids[(there, layer)]))
            pairs.append((ids[(there, layer)], ids[(here, layer)]))
    # M₃ : [v,2] → [v,0] → [v,1]
    for v in inner:
        pairs.append((ids[(v, 2)], ids[(v, 0)]))
        pairs.append((ids[(v, 0)], ids[(v, 1)]))
    # M₄ : retours vers s et départs depuis t aux bouts des chaînes
    first, last = inner[0], inner[-1]
    pairs += [(ids[(first, 1)], s), (ids[(last, 1)], s), (t, ids[(first, 2)]), (t, ids[(last, 2)])]
    # M₅ : attaches de s et t
    for u, v in g.edges:
        if u == g.s:
            pairs.append((s, ids[(v, 0)]))
        if v == g.t:
            pairs.append((ids[(u, 0)], t))
    return list(dict.fromkeys(pairs))


def _stream_dstcon_to_ap2dm(g: Digraph) -> Iterator[Record]:
    ids = layer_ids(g)
    n = len(ids) // 3
    yield Header("ap2dm", 3 * n + 2)
    yield Label(1, "s")
    yield Label(2, "t")
    names = g.labels or {}
    for (v, layer), ident in sorted(ids.items(), key=lambda item: item[1]):
        yield Label(ident, f"[{names.get(v, f'v{v}')},{layer}]")
        if layer == 0:
            yield Exempt(ident)
    for u, v in _pair_families(g, ids):
        yield PairRecord(u, v)


@reduction(
    "dstcon_to_ap2dm", source=Digraph, target=Ap2dmInstance,
    in_param="m_ver", out_param="m_set", k1=3, k2=2,
    normalizer="normalize_dstcon", family={"problem": "dstcon_normal"},
)
def dstcon_to_ap2dm(g: Digraph) -> Ap2dmInstance:
    """Graphe normalisé → instance AP2DM sur {s, t} ∪ trois couches de V⁽⁻⁾."""
    if not is_dstcon_normal(g):
        raise PreconditionError("dstcon_to_ap2dm attend un graphe normalisé (normalize_dstcon)")
    return collect(_stream_dstcon_to_ap2dm(g))


def query_graph(a: Ap2dmInstance) -> Digraph:
    """V = X, E = paires non triviales ; s et t sont fixés à chaque question."""
    return Digraph(a.universe_size, a.pairs, 1, 1, a.labels)


@dataclass
class QueryOutcome:
    answer: bool
    report: ReductionReport
    failing_pair: Optional[Pair] = None

    def __bool__(self) -> bool:
        return self.answer


DstconOracle = Callable[[Digraph], object]


@reduction(
    "ap2dm_to_dstcon_queries", source=Ap2dmInstance, target=None,
    in_param="m_set", out_param="m_ver", k1=1, k2=0,
    family={"problem": "ap2dm_image"}, turing=True,
)
def ap2dm_to_dstcon_queries(a: Ap2dmInstance, oracle: DstconOracle = solve_dstcon) -> QueryOutcome:
    """Décide AP2DM avec un oracle DSTCON sur le graphe des paires.

    Chaque paire requise (u, v) demande les questions (G, u, v) et (G, v, u).
    Une question déjà posée n'est pas répétée ; l'exploration s'arrête à la
    première paire en échec.
    """
    report = ReductionReport(
        name="ap2dm_to_dstcon_queries",
        in_param="m_set", in_value=max(a.universe_size, 1),
        out_param="m_ver", out_value=a.universe_size,
        k1=1, k2=0, turing=True,
    )
    pairs = required_pairs(a)
    if not pairs:
        return QueryOutcome(True, report)
    base = query_graph(a)
    answers: Dict[Pair, bool] = {}

    def ask(u: int, v: int) -> bool:
        if (u, v) not in answers:
            query = Digraph(base.num_vertices, base.edges, u, v, base.labels)
            answer = bool(oracle(query))
            answers[(u, v)] = answer
            log = QueryLog(index=len(report.queries) + 1, u=u, v=v,
                           size=query.num_vertices, answer=answer)
            report.queries.append(log)
            logger.debug(f"question {log.index}: ({u}, {v}) taille {log.size} → {answer}")
        return answers[(u, v)]

    for u, v in pairs:
        if not (ask(u, v) and ask(v, u)):
            logger.debug(f"ap2dm_to_dstcon_queries: paire ({u}, {v}) en échec")
            return QueryOutcome(False, report, (u, v))
    return QueryOutcome(True, report)


def degree_reducing_oracle(oracle: DstconOracle = solve_dstcon) -> DstconOracle:
    """Oracle qui ramène chaque graphe de question au degré 3 avant de répondre."""

    def reduced(g: Digraph):
        return oracle(reduce_degree_dstcon(g))

    return reduced
