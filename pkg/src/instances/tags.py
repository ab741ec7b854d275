"""Étiquettes de contraintes et violations signalées par `validate`."""
from typing import Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field


class Tags(BaseModel):
    """Restrictions structurelles à vérifier sur une instance.

    Un champ à None n'est pas vérifié.
    """

    model_config = ConfigDict(frozen=True)

    occ_bound: Optional[int] = Field(default=None, ge=0)
    exact: bool = False
    clean: bool = False
    no_removable: bool = False
    deg_bound: Optional[int] = Field(default=None, ge=0)
    in_bound: Optional[int] = Field(default=None, ge=0)
    out_bound: Optional[int] = Field(default=None, ge=0)
    allow_self_loops: bool = False
    set_bound: Optional[int] = Field(default=3, ge=1)
    overlap_bound: Optional[int] = Field(default=None, ge=0)
    col_bound: Optional[int] = Field(default=None, ge=0)
    row_bound: int = Field(default=2, ge=0)
    connectivity: Optional[Literal["at_least_one", "exactly_one"]] = "at_least_one"


class Violation(BaseModel):
    """Invariant violé, avec un témoin qui localise la faute."""

    model_config = ConfigDict(frozen=True)

    code: str
    message: str
    witness: Tuple[int, ...] = ()

    def __str__(self):
        return f"{self.code}: {self.message}"
