"""Rapport de réduction : paramètres observés et contrat de brièveté."""
from fractions import Fraction
from typing import Annotated, List

from pydantic import BaseModel, BeforeValidator, ConfigDict, Field, computed_field


def _as_constant(value) -> Fraction:
    constant = Fraction(value)
    if constant < 0:
        raise ValueError(f"constante négative: {value}")
    return constant


# k₁ et k₂ sont rationnels (k₁ = 3/2 pour une réduction par exemple)
Constant = Annotated[Fraction, BeforeValidator(_as_constant)]


class QueryLog(BaseModel):
    """Une question posée à l'oracle par une réduction de Turing."""

    index: int
    u: int
    v: int
    size: int
    answer: bool


class ReductionReport(BaseModel):
    """Contrat m₂(f(x)) ≤ k₁·m₁(x) + k₂ et valeurs observées."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    name: str
    in_param: str
    in_value: int = Field(ge=1)
    out_param: str
    out_value: int = Field(ge=0)
    k1: Constant
    k2: Constant
    turing: bool = False
    queries: List[QueryLog] = Field(default_factory=list)

    @property
    def bound(self) -> Fraction:
        return self.k1 * self.in_value + self.k2

    @computed_field
    @property
    def shortness_ok(self) -> bool:
        if self.turing:
            return all(q.size <= self.bound for q in self.queries)
        return self.out_value <= self.bound

    def ratio(self) -> float:
        """(sortie − k₂) / (k₁ · entrée), la quantité bornée par 1."""
        if self.k1 == 0:
            return 0.0
        values = [q.size for q in self.queries] if self.turing else [self.out_value]
        if not values:
            return 0.0
        return float(max((value - self.k2) / (self.k1 * self.in_value) for value in values))

    def serialize(self) -> str:
        lines = ["\t".join([
            "REDUCE", self.name,
            "IN", f"{self.in_param}={self.in_value}",
            "OUT", f"{self.out_param}={self.out_value}",
            "K1", str(self.k1), "K2", str(self.k2),
            "SHORT", "ok" if self.shortness_ok else "FAIL",
        ])]
        for query in self.queries:
            lines.append("\t".join([
                "QUERY", str(query.index), "SIZE", str(query.size),
                "ANSWER", "y" if query.answer else "n",
            ]))
        return "\n".join(lines) + "\n"
