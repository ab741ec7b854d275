"""Campagnes de vérification des réductions et des oracles.

Un contre-exemple n'interrompt rien : toutes les demandes d'essais sont
exécutées, puis le bilan est rendu. Chaque instance fautive est écrite dans
le dossier de run sous le nom `<réduction>-<graine>.txt`.
"""
import logging
import math
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from itertools import repeat
from pathlib import Path
from typing import List, Optional, Tuple, Union

from .. import settings
from ..exceptions import BudgetExceededError, InvalidParameterError, PreconditionError, UnknownReductionError
from ..instances.textio import write_instance
from ..instances.types import Instance
from ..oracles import check_assignment, check_xor_assignment
from ..oracles.graphs import solve_dstcon
from ..oracles.linear import solve_xor2sat, solve_xor2sat_enum
from ..oracles.matching import chain_linked_pairs, is_linked_power, iter_perfect_matchings, solve_ap2dm
from ..oracles.sat import solve_2sat, solve_2sat_enum
from ..reductions.matching import ap2dm_to_dstcon_queries, degree_reducing_oracle
from ..reductions.registry import ReductionSpec, get_reduction, run_reduction
from .generators import generate, trial_spec
from .genspec import Counterexample, FitResult, GenSpec, VerifyResult
from .pipelines import run_trial

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]

CROSSCHECKS = ("2sat", "xor", "linkage")


def default_size(name: str) -> int:
    """Taille maximale par défaut ; un mutant hérite de celle de sa réduction."""
    if name in settings.DEFAULT_MAX_SIZES:
        return settings.DEFAULT_MAX_SIZES[name]
    for base, size in settings.DEFAULT_MAX_SIZES.items():
        if base in name:
            return size
    return 8


def default_gen_spec(spec: ReductionSpec, max_size: Optional[int] = None,
                     seed: int = settings.DEFAULT_SEED) -> GenSpec:
    return GenSpec(**spec.family, size=max_size or default_size(spec.name), seed=seed)


def _write_counterexample(run_dir: PathLike, name: str, seed: int, instance: Instance) -> str:
    path = write_instance(instance, Path(run_dir) / f"{name}-{seed}.txt")
    return str(path)


def _log_summary(result: VerifyResult):
    if result.ok:
        logger.info(
            f"✅ {result.name}: {result.trials} essais, {result.skipped} ignoré(s), aucun échec"
        )
    else:
        logger.warning(
            f"❌ {result.name}: {len(result.equivalence_failures)} échec(s) d'équivalence, "
            f"{result.shortness_failures} de brièveté, {result.witness_failures} de témoin"
        )


def verify_m_reduction(name: str, gen_spec: Optional[GenSpec] = None,
                       trials: int = settings.DEFAULT_TRIALS, *, max_size: Optional[int] = None,
                       seed: int = settings.DEFAULT_SEED, workers: Optional[int] = None,
                       run_dir: PathLike = settings.DEFAULT_RUN_DIR,
                       linkage: str = "chain") -> VerifyResult:
    """Compare les oracles de part et d'autre de la réduction sur `trials` essais.

    Les essais sont indépendants ; avec plusieurs ouvriers ils tournent dans
    un pool de processus et le résultat est identique à l'exécution séquentielle.
    """
    spec = get_reduction(name)
    if spec.turing:
        return verify_T_reduction(gen_spec, trials, max_size=max_size, seed=seed,
                                  linkage=linkage, run_dir=run_dir)
    base = gen_spec or default_gen_spec(spec, max_size, seed)
    workers = settings.REDLAB_WORKERS if workers is None else workers
    started = time.perf_counter()
    specs = [trial_spec(base, index) for index in range(trials)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            items = list(pool.map(run_trial, repeat(name), specs, range(trials), repeat(linkage)))
    else:
        items = [run_trial(name, trial, index, linkage) for index, trial in enumerate(specs)]

    skipped = shortness = witness = 0
    failures: List[Counterexample] = []
    ratios = []
    for item in sorted(items, key=lambda trial: trial.index):
        if item.dropped:
            skipped += 1
            continue
        ratios.append(item.report.ratio())
        if not item.report.shortness_ok:
            shortness += 1
        if item.witness_ok is False:
            witness += 1
        if not item.equivalent:
            path = _write_counterexample(run_dir, name, item.seed, item.source)
            failures.append(Counterexample(seed=item.seed, file=path))

    result = VerifyResult(
        name=name, trials=trials, skipped=skipped, equivalence_failures=failures,
        shortness_failures=shortness, witness_failures=witness,
        max_ratio=max(ratios, default=0.0), wall_time=time.perf_counter() - started,
    )
    _log_summary(result)
    return result


def verify_T_reduction(gen_spec: Optional[GenSpec] = None, trials: int = settings.DEFAULT_TRIALS,
                       *, max_size: Optional[int] = None, seed: int = settings.DEFAULT_SEED,
                       linkage: str = "chain", family: str = "dstcon",
                       degree_reduce: bool = False,
                       run_dir: PathLike = settings.DEFAULT_RUN_DIR) -> VerifyResult:
    """Compare la réduction de Turing (oracle BFS) à `solve_ap2dm`.

    Famille "dstcon" : images de graphes normalisés, un désaccord est un échec.
    Famille "random" : instances 4-recouvrantes quelconques, un désaccord est
    consigné comme constat.
    """
    name = "ap2dm_to_dstcon_queries"
    if gen_spec is None:
        if family == "dstcon":
            gen_spec = GenSpec(problem="ap2dm_image", size=max_size or default_size(name), seed=seed)
        elif family == "random":
            gen_spec = GenSpec(problem="ap2dm", size=max_size or 8, overlap_bound=4, seed=seed)
        else:
            raise InvalidParameterError(f"famille inconnue: {family}")
    oracle = degree_reducing_oracle(solve_dstcon) if degree_reduce else solve_dstcon
    started = time.perf_counter()
    skipped = shortness = 0
    failures: List[Counterexample] = []
    findings: List[str] = []
    ratios = []
    for index in range(trials):
        trial = trial_spec(gen_spec, index)
        a = generate(trial)
        try:
            expected = solve_ap2dm(a, linkage=linkage)
        except BudgetExceededError as e:
            logger.warning(f"Essai {index} écarté: {e}")
            skipped += 1
            continue
        outcome = ap2dm_to_dstcon_queries(a, oracle=oracle)
        report = outcome.report
        ratios.append(report.ratio())
        if not report.shortness_ok:
            shortness += 1
        if outcome.answer == expected.answer:
            continue
        path = _write_counterexample(run_dir, name, trial.seed, a)
        if family == "dstcon":
            failures.append(Counterexample(seed=trial.seed, file=path))
        else:
            verdict = "YES" if outcome.answer else "NO"
            findings.append(f"graine {trial.seed}: requêtes {verdict}, AP2DM {expected.verdict} ({path})")

    result = VerifyResult(
        name=name, trials=trials, skipped=skipped, equivalence_failures=failures,
        shortness_failures=shortness, max_ratio=max(ratios, default=0.0),
        wall_time=time.perf_counter() - started, findings=findings,
    )
    _log_summary(result)
    return result


def tightest_constants(observations: List[Tuple[int, int]], declared_k2: Fraction) -> Tuple[int, int]:
    """Plus petit k₁ admettant un k₂ ≤ k₂ déclaré, puis le plus petit tel k₂."""
    if not observations:
        return 0, 0
    top = max(math.ceil(out / inp) for inp, out in observations)
    for k1 in range(top + 1):
        k2 = max(max(out - k1 * inp for inp, out in observations), 0)
        if k2 <= declared_k2:
            return k1, k2
    return top, 0


def fit_shortness(name: str, gen_spec: Optional[GenSpec] = None, trials: int = 200, *,
                  max_size: Optional[int] = None,
                  seed: int = settings.DEFAULT_SEED) -> FitResult:
    """Relève les couples (entrée, sortie) et ajuste les constantes (k₁, k₂)."""
    spec = get_reduction(name)
    base = gen_spec or default_gen_spec(spec, max_size, seed)
    observations: List[Tuple[int, int]] = []
    ratios = []
    for index in range(trials):
        source = generate(trial_spec(base, index))
        if spec.normalizer:
            source = get_reduction(spec.normalizer).func(source)
        try:
            _, report = run_reduction(name, source)
        except PreconditionError as e:
            logger.warning(f"Essai {index} écarté: {e}")
            continue
        if spec.turing:
            observations += [(report.in_value, query.size) for query in report.queries]
        else:
            observations.append((report.in_value, report.out_value))
        ratios.append(report.ratio())
    k1, k2 = tightest_constants(observations, spec.k2)
    return FitResult(
        name=name, in_param=spec.in_param, out_param=spec.out_param,
        declared_k1=spec.k1, declared_k2=spec.k2, fitted_k1=k1, fitted_k2=k2,
        max_ratio=max(ratios, default=0.0), observations=observations,
        histogram=dict(Counter(f"{ratio:.1f}" for ratio in ratios)),
    )


def _crosscheck_2sat(instance) -> Optional[str]:
    fast, slow = solve_2sat(instance), solve_2sat_enum(instance)
    if fast.answer != slow.answer:
        return f"CFC {fast.verdict}, énumération {slow.verdict}"
    if fast.answer and not check_assignment(instance, fast.witness):
        return "affectation CFC invalide"
    return None


def _crosscheck_xor(instance) -> Optional[str]:
    fast, slow = solve_xor2sat(instance), solve_xor2sat_enum(instance)
    if fast.answer != slow.answer:
        return f"union-find {fast.verdict}, énumération {slow.verdict}"
    if fast.answer and not check_xor_assignment(instance, fast.witness):
        return "affectation union-find invalide"
    return None


def _crosscheck_linkage(instance) -> Optional[str]:
    n = instance.universe_size
    for pi in iter_perfect_matchings(instance):
        chain = chain_linked_pairs(pi)
        for v in range(1, n + 1):
            for w in range(1, n + 1):
                if v != w and ((v, w) in chain) != is_linked_power(pi, v, w):
                    return f"couplage {pi[1:]}: paire ({v}, {w})"
    return None


def crosscheck_oracles(kind: str, trials: int = settings.DEFAULT_TRIALS, *,
                       max_size: Optional[int] = None, seed: int = settings.DEFAULT_SEED,
                       run_dir: PathLike = settings.DEFAULT_RUN_DIR) -> VerifyResult:
    """Compare deux décisions indépendantes d'un même problème."""
    if kind == "2sat":
        base, check = GenSpec(problem="2sat3", size=max_size or 12, seed=seed), _crosscheck_2sat
    elif kind == "xor":
        base, check = GenSpec(problem="xor", size=max_size or 10, seed=seed), _crosscheck_xor
    elif kind == "linkage":
        base = GenSpec(problem="ap2dm", size=max_size or 8, overlap_bound=4, seed=seed)
        check = _crosscheck_linkage
    else:
        raise UnknownReductionError(f"vérification croisée inconnue 'oracle_{kind}'")
    name = f"oracle_{kind}"
    started = time.perf_counter()
    failures: List[Counterexample] = []
    findings: List[str] = []
    for index in range(trials):
        trial = trial_spec(base, index)
        instance = generate(trial)
        problem = check(instance)
        if problem is not None:
            path = _write_counterexample(run_dir, name, trial.seed, instance)
            failures.append(Counterexample(seed=trial.seed, file=path))
            findings.append(f"graine {trial.seed}: {problem}")
    result = VerifyResult(
        name=name, trials=trials, equivalence_failures=failures,
        wall_time=time.perf_counter() - started, findings=findings,
    )
    _log_summary(result)
    return result
