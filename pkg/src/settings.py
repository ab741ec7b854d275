# Paramètres du projet redlab
#
# Constantes lues par les oracles, le harnais de vérification et la CLI.
# Seul REDLAB_WORKERS dépend de l'environnement.

import os
from pathlib import Path

PROJECT_NAME = "redlab"

PROJECT_ROOT = Path(__file__).parent.parent

LOG_LEVEL = "INFO"

# Budgets des oracles exhaustifs
SAT_ENUM_BUDGET = 24      # variables, énumération des affectations
XOR_ENUM_BUDGET = 20      # variables, énumération ⊕2SAT
CVC_BUDGET = 64           # sommets, recherche de couverture 2-checkered
XCE_BUDGET = 64           # ensembles, recherche de couverture exacte
LIN_BUDGET = 24           # colonnes, recherche {0,1}
AP2DM_BUDGET = 14         # éléments, énumération des couplages parfaits (exemple fig3 : 14)

# Bornes des entrées des systèmes linéaires (entiers signés 63 bits)
ENTRY_MIN = -(2 ** 63)
ENTRY_MAX = 2 ** 63 - 1

# Étapes d'un essai de vérification, exécutées par priorité croissante
VERIFY_PIPELINES = {
    'src.harness.pipelines.GenerateStage': 100,
    'src.harness.pipelines.NormalizeStage': 200,
    'src.harness.pipelines.ReduceStage': 300,
    'src.harness.pipelines.SourceOracleStage': 400,
    'src.harness.pipelines.TargetOracleStage': 500,
    'src.harness.pipelines.CompareStage': 600,
}

# Parallélisme des essais
REDLAB_WORKERS = int(os.environ.get("REDLAB_WORKERS", "1") or "1")

DEFAULT_TRIALS = 1000
DEFAULT_SEED = 1
DEFAULT_RUN_DIR = PROJECT_ROOT / "runs"
DEFAULT_DB_PATH = PROJECT_ROOT / "data" / "runs.db"

# Taille maximale par défaut des instances générées, par réduction
DEFAULT_MAX_SIZES = {
    'sat2_to_2cvc3': 10,
    'cvc3_to_sat2': 14,
    'sat2_to_3xce2': 10,
    'xce2_to_2lp': 9,
    'lp_to_2lp': 12,
    'twolp_to_lp': 12,
    'le_to_xor2sat': 12,
    'normalize_2sat3': 10,
    'normalize_dstcon': 10,
    'reduce_degree_dstcon': 10,
    'dstcon_to_ap2dm': 5,
    'ap2dm_to_dstcon_queries': 5,
}
