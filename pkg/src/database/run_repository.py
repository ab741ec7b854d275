"""Repository pour l'historique des campagnes de vérification."""
import logging
from pathlib import Path
from typing import Dict, List, Optional, Union

from ..harness.genspec import VerifyResult
from .connection import DatabaseConnection

logger = logging.getLogger(__name__)


class RunRepository:
    """Classe pour enregistrer et relire les campagnes."""

    def __init__(self, db_path: Optional[Union[str, Path]] = None):
        self.db = DatabaseConnection(db_path)

    def save_result(self, result: VerifyResult) -> int:
        """Enregistre un bilan et ses contre-exemples ; retourne l'ID du run."""
        conn = self.db.get_connection()
        cursor = conn.execute(
            '''
            INSERT INTO runs (reduction, trials, skipped, equivalence_failures,
                              shortness_failures, witness_failures, max_ratio, wall_time)
            VALUES (?, ?, ?, ?, ?, ?, ?, ?)
            ''',
            (
                result.name, result.trials, result.skipped, len(result.equivalence_failures),
                result.shortness_failures, result.witness_failures, result.max_ratio,
                result.wall_time,
            )
        )
        run_id = cursor.lastrowid
        conn.executemany(
            "INSERT INTO counterexamples (run_id, seed, file) VALUES (?, ?, ?)",
            [(run_id, c.seed, c.file) for c in result.equivalence_failures]
        )
        conn.commit()
        conn.close()
        logger.info(f"✅ Run {run_id} enregistré ({result.name})")
        return run_id

    def get_runs(self, limit: int = 20, reduction: Optional[str] = None) -> List[Dict]:
        """Récupère les derniers runs, du plus récent au plus ancien."""
        conn = self.db.get_connection()
        query = "SELECT * FROM runs WHERE 1=1"
        params = []
        if reduction:
            query += " AND reduction = ?"
            params.append(reduction)
        query += " ORDER BY id DESC LIMIT ?"
        params.append(limit)
        cursor = conn.execute(query, params)
        runs = [dict(row) for row in cursor.fetchall()]
        conn.close()
        return runs

    def get_run(self, run_id: int) -> Optional[Dict]:
        """Récupère un run par son ID."""
        conn = self.db.get_connection()
        cursor = conn.execute("SELECT * FROM runs WHERE id = ?", (run_id,))
        run = cursor.fetchone()
        conn.close()
        return dict(run) if run else None

    def get_counterexamples(self, run_id: int) -> List[Dict]:
        conn = self.db.get_connection()
        cursor = conn.execute(
            "SELECT seed, file FROM counterexamples WHERE run_id = ? ORDER BY id",
            (run_id,)
        )
        rows = [dict(row) for row in cursor.fetchall()]
        conn.close()
        return rows

    def get_failure_summary(self) -> List[Dict]:
        """Totaux par réduction : runs, essais et échecs cumulés."""
        conn = self.db.get_connection()
        cursor = conn.execute('''
            SELECT
                reduction,
                COUNT(*) as nb_runs,
                SUM(trials) as total_trials,
                SUM(equivalence_failures) as total_equivalence_failures,
                SUM(shortness_failures) as total_shortness_failures,
                MAX(max_ratio) as max_ratio
            FROM runs
            GROUP BY reduction
            ORDER BY reduction
        ''')
        summary = [dict(row) for row in cursor.fetchall()]
        conn.close()
        return summary
