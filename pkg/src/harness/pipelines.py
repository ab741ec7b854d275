"""Étapes d'un essai de vérification.

Chaque étape reçoit l'essai en cours, le complète et le renvoie, comme un
pipeline d'items. Une étape écarte l'essai en levant `TrialDropped` (essai
compté comme ignoré). L'ordre d'exécution vient de `settings.VERIFY_PIPELINES`.
"""
import importlib
import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Optional

from itemadapter import ItemAdapter

from .. import settings
from ..exceptions import BudgetExceededError, PreconditionError, TrialDropped
from ..oracles import check_witness, decide
from ..reductions.registry import ReductionSpec, get_reduction, run_reduction
from .generators import generate
from .genspec import GenSpec

logger = logging.getLogger(__name__)


@dataclass
class TrialItem:
    index: int
    gen_spec: GenSpec
    source: Any = None
    normalized: Any = None
    output: Any = None
    report: Any = None
    source_answer: Optional[bool] = None
    target_answer: Optional[bool] = None
    witness_ok: Optional[bool] = None
    equivalent: Optional[bool] = None
    dropped: Optional[str] = None

    @property
    def seed(self) -> int:
        return self.gen_spec.seed


@dataclass
class TrialContext:
    reduction: ReductionSpec
    linkage: str = "chain"


class GenerateStage:
    """Étape 1 : génère l'instance source."""

    def process_item(self, item, context):
        adapter = ItemAdapter(item)
        adapter['source'] = generate(adapter['gen_spec'])
        return item


class NormalizeStage:
    """Étape 2 : applique la normalisation attendue par la réduction."""

    def process_item(self, item, context):
        adapter = ItemAdapter(item)
        name = context.reduction.normalizer
        if name:
            adapter['normalized'] = get_reduction(name).func(adapter['source'])
        else:
            adapter['normalized'] = adapter['source']
        return item


class ReduceStage:
    """Étape 3 : applique la réduction et garde son rapport."""

    def process_item(self, item, context):
        adapter = ItemAdapter(item)
        try:
            output, report = run_reduction(context.reduction.name, adapter['normalized'])
        except PreconditionError as e:
            logger.warning(f"Essai {adapter['index']} écarté: {e}")
            raise TrialDropped(str(e)) from e
        adapter['output'] = output
        adapter['report'] = report
        return item


class SourceOracleStage:
    """Étape 4 : décide l'instance source."""

    def process_item(self, item, context):
        adapter = ItemAdapter(item)
        try:
            adapter['source_answer'] = decide(adapter['source'], linkage=context.linkage).answer
        except BudgetExceededError as e:
            raise TrialDropped(f"source hors budget: {e}") from e
        return item


class TargetOracleStage:
    """Étape 5 : décide l'instance produite et revérifie son témoin."""

    def process_item(self, item, context):
        adapter = ItemAdapter(item)
        try:
            result = decide(adapter['output'], linkage=context.linkage)
        except BudgetExceededError as e:
            raise TrialDropped(f"sortie hors budget: {e}") from e
        adapter['target_answer'] = result.answer
        adapter['witness_ok'] = check_witness(adapter['output'], result)
        return item


class CompareStage:
    """Étape 6 : compare les deux réponses."""

    def process_item(self, item, context):
        adapter = ItemAdapter(item)
        adapter['equivalent'] = adapter['source_answer'] == adapter['target_answer']
        if not adapter['equivalent']:
            logger.debug(
                f"Essai {adapter['index']}: source {adapter['source_answer']}, "
                f"sortie {adapter['target_answer']}"
            )
        return item


def load_stages(pipelines: Optional[Dict[str, int]] = None) -> List:
    """Instancie les étapes par priorité croissante."""
    pipelines = settings.VERIFY_PIPELINES if pipelines is None else pipelines
    stages = []
    for path, _ in sorted(pipelines.items(), key=lambda entry: entry[1]):
        module_name, class_name = path.rsplit('.', 1)
        stages.append(getattr(importlib.import_module(module_name), class_name)())
    return stages


def run_trial(name: str, gen_spec: GenSpec, index: int, linkage: str = "chain") -> TrialItem:
    """Exécute un essai complet ; fonction de module pour les processus ouvriers."""
    context = TrialContext(reduction=get_reduction(name), linkage=linkage)
    item = TrialItem(index=index, gen_spec=gen_spec)
    for stage in load_stages():
        try:
            stage.process_item(item, context)
        except TrialDropped as e:
            item.dropped = str(e)
            break
    return item
