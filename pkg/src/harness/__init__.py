"""Harnais de vérification : génération, essais, campagnes et mutants."""
from .generators import GENERATORS, generate, min_size, trial_spec
from .genspec import Counterexample, FitResult, GenSpec, VerifyResult
from .pipelines import TrialItem, load_stages, run_trial
from .verify import (
    CROSSCHECKS,
    crosscheck_oracles,
    fit_shortness,
    tightest_constants,
    verify_m_reduction,
    verify_T_reduction,
)

__all__ = [
    "GenSpec", "VerifyResult", "FitResult", "Counterexample", "TrialItem",
    "GENERATORS", "generate", "min_size", "trial_spec", "load_stages", "run_trial",
    "CROSSCHECKS", "verify_m_reduction", "verify_T_reduction", "fit_shortness",
    "crosscheck_oracles", "tightest_constants",
]
