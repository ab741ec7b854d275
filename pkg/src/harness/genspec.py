"""Modèles du harnais : paramètres de génération et résultats de vérification."""
from typing import Dict, List, Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field

from ..reductions.report import Constant

Problem = Literal[
    "2sat3", "ugraph", "digraph", "dstcon_normal", "xce", "ap2dm", "ap2dm_image",
    "lin_geq", "lin_band", "lin_eq", "xor",
]


class GenSpec(BaseModel):
    """Demande de génération d'une instance.

    `size` compte les variables (2sat3, xor), les sommets (graphes), les
    éléments de l'univers (xce, ap2dm) ou les colonnes (systèmes linéaires).
    """

    model_config = ConfigDict(frozen=True)

    problem: Problem
    size: int = Field(default=8, ge=1)
    clauses: Optional[int] = Field(default=None, ge=0)
    occ_bound: int = Field(default=3, ge=1)
    deg_bound: int = Field(default=3, ge=1)
    overlap_bound: Optional[int] = Field(default=None, ge=1)
    col_bound: int = Field(default=3, ge=1)
    exemption_density: float = Field(default=0.3, ge=0.0, le=1.0)
    sat_bias: float = Field(default=0.5, ge=0.0, le=1.0)
    shape: Literal["any", "normal"] = "any"
    seed: int = Field(default=0, ge=0, lt=2 ** 64)


class Counterexample(BaseModel):
    seed: int
    file: str


class VerifyResult(BaseModel):
    """Bilan d'une campagne de vérification ; seul `wall_time` varie d'une exécution à l'autre."""

    name: str
    trials: int = 0
    skipped: int = 0
    equivalence_failures: List[Counterexample] = Field(default_factory=list)
    shortness_failures: int = 0
    witness_failures: int = 0
    max_ratio: float = 0.0
    wall_time: float = 0.0
    findings: List[str] = Field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.equivalence_failures and not self.shortness_failures and not self.witness_failures

    def serialize(self) -> str:
        lines = [
            f"VERIFY\t{self.name}",
            f"TRIALS\t{self.trials}",
            f"SKIPPED\t{self.skipped}",
            f"EQUIV_FAILURES\t{len(self.equivalence_failures)}",
            f"SHORT_FAILURES\t{self.shortness_failures}",
            f"WITNESS_FAILURES\t{self.witness_failures}",
            f"MAX_RATIO\t{self.max_ratio:.6f}",
            f"WALL_TIME\t{self.wall_time:.3f}",
        ]
        for finding in self.findings:
            lines.append(f"FINDING\t{finding}")
        for failure in self.equivalence_failures:
            lines.append(f"COUNTEREXAMPLE\t{failure.seed}\t{failure.file}")
        return "\n".join(lines) + "\n"


class FitResult(BaseModel):
    """Ajustement des constantes de brièveté sur les couples (entrée, sortie) observés."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    name: str
    in_param: str
    out_param: str
    declared_k1: Constant
    declared_k2: Constant
    fitted_k1: int
    fitted_k2: int
    max_ratio: float
    observations: List[Tuple[int, int]] = Field(default_factory=list)
    histogram: Dict[str, int] = Field(default_factory=dict)

    def serialize(self) -> str:
        lines = [
            f"FIT\t{self.name}",
            f"PARAMS\t{self.in_param}\t{self.out_param}",
            f"DECLARED\tK1 {self.declared_k1}\tK2 {self.declared_k2}",
            f"FITTED\tK1 {self.fitted_k1}\tK2 {self.fitted_k2}",
            f"MAX_RATIO\t{self.max_ratio:.6f}",
        ]
        for bucket, count in sorted(self.histogram.items()):
            lines.append(f"RATIO\t{bucket}\t{count}")
        return "\n".join(lines) + "\n"
