"""Instances des problèmes : types, paramètres de taille, validation, format texte."""
from .params import PARAMETER_NAMES, parameters_for, raw_size_param, size_param
from .tags import Tags, Violation
from .textio import parse, read_instance, serialize, write_instance
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
from .validation import is_valid, validate

__all__ = [
    "Ap2dmInstance", "CnfFormula", "Digraph", "Instance", "LinMode", "LinSystem",
    "Parity", "UGraph", "Unit", "XceInstance", "XorSystem", "Tags", "Violation",
    "PARAMETER_NAMES", "parameters_for", "raw_size_param", "size_param",
    "parse", "serialize", "read_instance", "write_instance", "validate", "is_valid",
]
