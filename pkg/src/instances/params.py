"""Paramètres de taille des instances.

Les valeurs sont ramenées à max(valeur, 1) pour rester dans ℕ⁺, y compris
pour les instances vides.
"""
from typing import Callable, Dict, Tuple

from ..exceptions import InvalidParameterError
from .types import (
    Ap2dmInstance,
    CnfFormula,
    Digraph,
    Instance,
    LinSystem,
    UGraph,
    XceInstance,
    XorSystem,
)

PARAMETER_NAMES = ("m_vbl", "m_cls", "m_ver", "m_edg", "m_set", "m_row", "m_col")

# m_row compte les colonnes et m_col les lignes, conformément à la définition
# littérale des programmes linéaires creux.
_PARAMETERS: Dict[Tuple[type, str], Callable] = {
    (CnfFormula, "m_vbl"): lambda f: f.num_vars,
    (CnfFormula, "m_cls"): lambda f: f.num_clauses,
    (Digraph, "m_ver"): lambda g: g.num_vertices,
    (Digraph, "m_edg"): lambda g: g.num_edges,
    (UGraph, "m_ver"): lambda g: g.num_vertices,
    (UGraph, "m_edg"): lambda g: g.num_edges,
    (XceInstance, "m_set"): lambda x: x.num_sets,
    (Ap2dmInstance, "m_set"): lambda a: a.universe_size,
    (LinSystem, "m_row"): lambda s: s.num_cols,
    (LinSystem, "m_col"): lambda s: s.num_rows,
    (XorSystem, "m_vbl"): lambda x: x.num_vars,
    (XorSystem, "m_cls"): lambda x: len(x.constraints),
}


def raw_size_param(instance: Instance, name: str) -> int:
    """Valeur brute du paramètre, sans plancher à 1."""
    getter = _PARAMETERS.get((type(instance), name))
    if getter is None:
        raise InvalidParameterError(
            f"paramètre {name} non défini pour {type(instance).__name__}"
        )
    return getter(instance)


def size_param(instance: Instance, name: str) -> int:
    return max(raw_size_param(instance, name), 1)


def parameters_for(instance: Instance) -> Tuple[str, ...]:
    return tuple(name for (cls, name) in _PARAMETERS if cls is type(instance))
