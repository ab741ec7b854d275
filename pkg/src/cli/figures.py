"""Instances de référence des trois exemples illustrés."""
from ..instances.types import CnfFormula, Digraph

# (x₁ ∨ x̄₂) ∧ (x₂ ∨ x₁) ∧ (x̄₁ ∨ x₃) ∧ (x₂ ∨ x̄₃)
FIG1_FORMULA = CnfFormula(3, ((1, -2), (2, 1), (-1, 3), (2, -3)))

# {u₁⁽²⁾, u₂⁽²⁾, u₃⁽²⁾, c₁[1], c₂[1], c₂[2], c₃[2], c₄[1]} dans la numérotation de sat2_to_2cvc3
FIG1_COVER = frozenset({2, 4, 6, 7, 9, 10, 12, 13})

# (x₁ ∨ x̄₂) ∧ (x₁ ∨ x₃) ∧ (x₂ ∨ x̄₃) ∧ (x̄₁ ∨ x̄₃) : x₁ ∈ V⁽⁺⁾, x₂ ∈ V⁽*⁾, x₃ ∈ V⁽⁻⁾
FIG2_FORMULA = CnfFormula(3, ((1, -2), (1, 3), (2, -3), (-1, -3)))

# s → v₂ → v₄ → v₃ → t, plus v₃ → v₂ ; v₁ isolé
FIG3_GRAPH = Digraph(
    6,
    ((5, 2), (3, 2), (2, 4), (4, 3), (3, 6)),
    5,
    6,
    {1: "v1", 2: "v2", 3: "v3", 4: "v4", 5: "s", 6: "t"},
)

FIGURES = {
    "fig1": (FIG1_FORMULA, "sat2_to_2cvc3"),
    "fig2": (FIG2_FORMULA, "sat2_to_3xce2"),
    "fig3": (FIG3_GRAPH, "dstcon_to_ap2dm"),
}
