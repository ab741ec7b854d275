"""Module de gestion de la base de données."""
from .connection import DatabaseConnection
from .run_repository import RunRepository

__all__ = ['DatabaseConnection', 'RunRepository']
