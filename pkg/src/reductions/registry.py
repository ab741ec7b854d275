"""Registre des réductions et de leurs contrats de brièveté.

Chaque réduction est déclarée avec `@reduction(...)` : nom, types source et
cible, paramètres de taille comparés et constantes (k₁, k₂). L'appel de la
fonction décorée calcule le rapport et signale tout dépassement.
"""
import functools
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational
from typing import Any, Callable, Dict, Optional, Tuple

from ..exceptions import UnknownReductionError
from ..instances.params import size_param
from ..instances.types import Instance
from .report import ReductionReport

logger = logging.getLogger(__name__)


@dataclass
class ReductionSpec:
    name: str
    func: Callable
    source: type
    target: Optional[type]
    in_param: str
    out_param: str
    k1: Fraction
    k2: Fraction
    normalizer: Optional[str] = None
    family: Dict[str, Any] = field(default_factory=dict)
    turing: bool = False

    def report_for(self, instance: Instance, output: Instance) -> ReductionReport:
        return ReductionReport(
            name=self.name,
            in_param=self.in_param,
            in_value=size_param(instance, self.in_param),
            out_param=self.out_param,
            out_value=size_param(output, self.out_param),
            k1=self.k1,
            k2=self.k2,
        )


REDUCTIONS: Dict[str, ReductionSpec] = {}


def reduction(name: str, *, source: type, target: Optional[type], in_param: str,
              out_param: str, k1: Rational, k2: Rational, normalizer: Optional[str] = None,
              family: Optional[Dict[str, Any]] = None, turing: bool = False):
    """Enregistre une réduction et vérifie sa brièveté à chaque appel."""

    def decorator(func: Callable) -> Callable:
        spec = ReductionSpec(
            name=name, func=func, source=source, target=target,
            in_param=in_param, out_param=out_param, k1=Fraction(k1), k2=Fraction(k2),
            normalizer=normalizer, family=dict(family or {}), turing=turing,
        )
        REDUCTIONS[name] = spec

        if turing:
            return func

        @functools.wraps(func)
        def wrapper(instance, *args, **kwargs):
            output = func(instance, *args, **kwargs)
            report = spec.report_for(instance, output)
            if not report.shortness_ok:
                logger.warning(
                    f"❌ {name}: {report.out_param}={report.out_value} > "
                    f"{report.k1}·{report.in_value}+{report.k2}"
                )
            return output

        wrapper.spec = spec
        return wrapper

    return decorator


def get_reduction(name: str) -> ReductionSpec:
    load_reductions()
    try:
        return REDUCTIONS[name]
    except KeyError:
        known = ", ".join(sorted(REDUCTIONS))
        raise UnknownReductionError(f"réduction inconnue '{name}' (connues: {known})") from None


def run_reduction(name: str, instance: Instance, **kwargs) -> Tuple[Any, ReductionReport]:
    """Applique la réduction `name` et retourne (sortie, rapport).

    Pour une réduction de Turing, la sortie est le `QueryOutcome`.
    """
    spec = get_reduction(name)
    if spec.turing:
        outcome = spec.func(instance, **kwargs)
        return outcome, outcome.report
    output = spec.func(instance, **kwargs)
    report = spec.report_for(instance, output)
    if not report.shortness_ok:
        logger.warning(f"❌ {name}: contrat de brièveté violé ({report.out_value} > {report.bound})")
    return output, report


def load_reductions():
    # les modules s'enregistrent à l'import
    from . import exact_cover, linear, matching, normalize, vertex_cover  # noqa: F401
    from ..harness import mutants  # noqa: F401
