"""Résultat commun des oracles."""
from dataclasses import dataclass
from typing import Any, Optional


@dataclass(frozen=True)
class OracleResult:
    """Réponse OUI/NON d'un oracle, avec témoin éventuel."""

    answer: bool
    witness: Any = None
    detail: Optional[str] = None

    def __bool__(self):
        return self.answer

    @property
    def verdict(self) -> str:
        return "YES" if self.answer else "NO"


def yes(witness: Any = None, detail: Optional[str] = None) -> OracleResult:
    return OracleResult(True, witness, detail)


def no(witness: Any = None, detail: Optional[str] = None) -> OracleResult:
    return OracleResult(False, witness, detail)
