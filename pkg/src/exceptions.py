"""Exceptions typées du projet."""
from typing import Optional


class RedlabError(Exception):
    """Erreur de base de redlab."""


class InstanceError(RedlabError, ValueError):
    """Instance mal formée (indice hors bornes, forme invalide)."""


class ParseError(RedlabError):
    """Texte d'instance invalide."""

    def __init__(self, message: str, line_no: Optional[int] = None):
        self.line_no = line_no
        if line_no is not None:
            message = f"ligne {line_no}: {message}"
        super().__init__(message)


class InvalidParameterError(RedlabError):
    """Paramètre de taille inconnu pour ce type d'instance."""


class ClauseWidthError(RedlabError):
    """Clause de plus de deux littéraux."""


class BudgetExceededError(RedlabError):
    """Instance trop grande pour l'oracle exhaustif."""


class PreconditionError(RedlabError):
    """Précondition d'une réduction non respectée."""


class GeneratorConstraintError(RedlabError):
    """Combinaison de contraintes impossible à générer."""


class UnknownReductionError(RedlabError, KeyError):
    """Nom de réduction absent du registre."""

    def __str__(self):
        return str(self.args[0]) if self.args else ""


class TrialDropped(RedlabError):
    """Essai écarté par une étape du pipeline de vérification."""
