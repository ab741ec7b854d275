"""Écriture au format DOT des instances en forme de graphe."""
from typing import List

from ..exceptions import InstanceError
from ..instances.types import Ap2dmInstance, Digraph, Instance, UGraph


def _quote(text: str) -> str:
    return '"' + text.replace('"', '\\"') + '"'


def _nodes(size: int, labels, lines: List[str], shapes=None):
    labels = labels or {}
    shapes = shapes or {}
    for v in range(1, size + 1):
        attrs = [f"label={_quote(labels.get(v, str(v)))}"]
        if v in shapes:
            attrs.append(f"shape={shapes[v]}")
        lines.append(f"  {v} [{', '.join(attrs)}];")


def to_dot(instance: Instance) -> str:
    """Texte DOT ; s et t d'un graphe orienté sont doublement cerclés, R est en boîtes."""
    if isinstance(instance, UGraph):
        lines = ["graph G {"]
        _nodes(instance.num_vertices, instance.labels, lines)
        lines += [f"  {u} -- {v};" for u, v in instance.edges]
    elif isinstance(instance, Digraph):
        lines = ["digraph G {"]
        _nodes(instance.num_vertices, instance.labels, lines,
               {instance.s: "doublecircle", instance.t: "doublecircle"})
        lines += [f"  {u} -> {v};" for u, v in instance.edges]
    elif isinstance(instance, Ap2dmInstance):
        lines = ["digraph M {"]
        _nodes(instance.universe_size, instance.labels, lines,
               {x: "box" for x in instance.exempt})
        lines += [f"  {u} -> {v};" for u, v in instance.pairs]
    else:
        raise InstanceError(f"pas de rendu DOT pour {type(instance).__name__}")
    lines.append("}")
    return "\n".join(lines) + "\n"
