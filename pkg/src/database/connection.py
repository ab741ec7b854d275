"""Gestion de la connexion à la base des campagnes de vérification."""
import sqlite3
from pathlib import Path
from typing import Optional, Union

from .. import settings

SCHEMA = '''
    CREATE TABLE IF NOT EXISTS runs (
        id INTEGER PRIMARY KEY AUTOINCREMENT,
        reduction TEXT NOT NULL,
        trials INTEGER,
        skipped INTEGER,
        equivalence_failures INTEGER,
        shortness_failures INTEGER,
        witness_failures INTEGER,
        max_ratio REAL,
        wall_time REAL,
        created_at TEXT DEFAULT CURRENT_TIMESTAMP
    );
    CREATE TABLE IF NOT EXISTS counterexamples (
        id INTEGER PRIMARY KEY AUTOINCREMENT,
        run_id INTEGER NOT NULL REFERENCES runs(id),
        seed INTEGER,
        file TEXT
    );
'''


class DatabaseConnection:
    """Classe pour gérer la connexion SQLite."""

    def __init__(self, db_path: Optional[Union[str, Path]] = None):
        if db_path is None:
            db_path = settings.DEFAULT_DB_PATH
        self.db_path = str(db_path)
        self._ensure_db_exists()

    def _ensure_db_exists(self):
        """Crée le dossier et le schéma au premier usage."""
        Path(self.db_path).parent.mkdir(parents=True, exist_ok=True)
        conn = sqlite3.connect(self.db_path)
        conn.executescript(SCHEMA)
        conn.commit()
        conn.close()

    def get_connection(self):
        """Retourne une connexion à la base."""
        conn = sqlite3.connect(self.db_path)
        conn.row_factory = sqlite3.Row
        return conn
