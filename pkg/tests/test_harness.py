"""Tests du harnais : générateurs, essais, campagnes et mutants."""
import sys
from pathlib import Path

# Ajouter le dossier racine au path
sys.path.insert(0, str(Path(__file__).parent.parent))

import pytest
from hypothesis import given, settings, strategies as st
from pydantic import ValidationError

from src.exceptions import GeneratorConstraintError, InvalidParameterError, UnknownReductionError
from src.harness import (
    GenSpec,
    crosscheck_oracles,
    fit_shortness,
    generate,
    load_stages,
    run_trial,
    tightest_constants,
    trial_spec,
    verify_m_reduction,
    verify_T_reduction,
)
from src.instances import CnfFormula, LinMode, LinSystem, Parity, Tags, UGraph, read_instance, serialize, validate
from src.oracles import solve_2sat, solve_lin, solve_xce, solve_xor2sat
from src.reductions import is_dstcon_normal, is_normalized_2sat3, run_reduction


def test_generation_is_deterministic():
    """Même spécification, même graine : même instance."""
    print("\n=== Test : Déterminisme des générateurs ===")
    for problem in ("2sat3", "ugraph", "xce", "ap2dm", "lin_eq", "xor"):
        spec = GenSpec(problem=problem, size=7, seed=42)
        assert serialize(generate(spec)) == serialize(generate(spec)), f"{problem} non déterministe"

    print("✓ Test réussi")


def test_genspec_constraints():
    """Demande impossible et paramètres hors bornes."""
    print("\n=== Test : Contraintes de génération ===")
    with pytest.raises(GeneratorConstraintError):
        generate(GenSpec(problem="2sat3", size=10, clauses=16))
    assert generate(GenSpec(problem="2sat3", size=10, clauses=15)).num_clauses <= 15

    with pytest.raises(ValidationError):
        GenSpec(problem="2sat3", size=0)
    with pytest.raises(ValidationError):
        GenSpec(problem="3sat", size=4)
    with pytest.raises(GeneratorConstraintError):
        generate(GenSpec(problem="dstcon_normal", size=2))

    print("✓ Test réussi")


@settings(max_examples=50, deadline=None)
@given(seed=st.integers(0, 100_000), size=st.integers(1, 12))
def test_generators_respect_bounds(seed, size):
    """Les bornes demandées tiennent par construction."""
    f = generate(GenSpec(problem="2sat3", size=size, seed=seed))
    assert validate(f, Tags(occ_bound=3)) == []

    g = generate(GenSpec(problem="ugraph", size=size, seed=seed))
    assert all(d <= 3 for d in g.degrees().values())

    x = generate(GenSpec(problem="xce", size=size, seed=seed))
    assert validate(x, Tags(overlap_bound=2)) == []

    s = generate(GenSpec(problem="lin_band", size=size, seed=seed))
    assert validate(s) == []


@settings(max_examples=50, deadline=None)
@given(seed=st.integers(0, 100_000), size=st.integers(3, 10))
def test_shaped_generators(seed, size):
    """Formes normales et instances AP2DM reliées."""
    assert is_normalized_2sat3(generate(GenSpec(problem="2sat3", size=size, shape="normal", seed=seed)))
    assert is_dstcon_normal(generate(GenSpec(problem="dstcon_normal", size=size, seed=seed)))
    a = generate(GenSpec(problem="ap2dm", size=size, seed=seed))
    assert validate(a, Tags(overlap_bound=4)) == []


def test_trial_spec_cycles_sizes():
    print("\n=== Test : Tailles des essais ===")
    base = GenSpec(problem="2sat3", size=4, seed=10)
    specs = [trial_spec(base, index) for index in range(6)]

    assert [s.size for s in specs] == [1, 2, 3, 4, 1, 2]
    assert [s.seed for s in specs] == list(range(10, 16))

    normal = GenSpec(problem="2sat3", size=4, shape="normal")
    assert [trial_spec(normal, i).size for i in range(4)] == [2, 3, 4, 2], "Minimum 2 en forme normale"

    print("✓ Test réussi")


def test_stage_order():
    names = [type(stage).__name__ for stage in load_stages()]
    assert names == [
        "GenerateStage", "NormalizeStage", "ReduceStage",
        "SourceOracleStage", "TargetOracleStage", "CompareStage",
    ]


def test_run_trial():
    """Un essai remplit chaque champ de l'item."""
    print("\n=== Test : Essai complet ===")
    item = run_trial("cvc3_to_sat2", GenSpec(problem="ugraph", size=6, seed=5), 0)

    assert item.dropped is None
    assert isinstance(item.source, UGraph) and isinstance(item.output, CnfFormula)
    assert item.source_answer is not None and item.target_answer is not None
    assert item.equivalent, "cvc3_to_sat2 préserve la réponse"
    assert item.report.shortness_ok
    assert item.seed == 5

    print("✓ Test réussi")


@pytest.mark.parametrize("name,trials", [
    ("cvc3_to_sat2", 60),
    ("sat2_to_3xce2", 40),
    ("xce2_to_2lp", 60),
    ("lp_to_2lp", 60),
    ("twolp_to_lp", 60),
    ("le_to_xor2sat", 60),
    ("normalize_2sat3", 60),
    ("normalize_dstcon", 40),
    ("reduce_degree_dstcon", 40),
])
def test_correct_reductions_pass(name, trials, tmp_path):
    """Aucun échec d'équivalence, de brièveté ni de témoin."""
    result = verify_m_reduction(name, trials=trials, max_size=8, run_dir=tmp_path, workers=1)

    assert result.trials == trials
    assert result.equivalence_failures == [], f"{name}: {result.serialize()}"
    assert result.shortness_failures == 0
    assert result.witness_failures == 0
    assert result.ok


def test_sat2_to_2cvc3_failures_are_unsatisfiable(tmp_path):
    """Les désaccords de sat2_to_2cvc3 viennent tous de formules insatisfiables."""
    print("\n=== Test : Campagne sat2_to_2cvc3 ===")
    result = verify_m_reduction("sat2_to_2cvc3", trials=40, max_size=6, run_dir=tmp_path)

    assert result.shortness_failures == 0
    assert result.witness_failures == 0
    for failure in result.equivalence_failures:
        source = read_instance(failure.file)
        assert not solve_2sat(source), f"Graine {failure.seed} : source satisfiable"

    print(f"✓ {len(result.equivalence_failures)} désaccord(s), tous sur des sources NON")
    print("✓ Test réussi")


@pytest.mark.parametrize("name", [
    "mutant_cvc3_to_sat2_flip",
    "mutant_xce2_to_2lp_strict_exempt",
])
def test_mutants_are_caught(name, tmp_path):
    """Une réduction faussée produit au moins un contre-exemple écrit sur disque."""
    result = verify_m_reduction(name, trials=200, run_dir=tmp_path)

    assert not result.ok
    assert result.equivalence_failures, f"{name} non détecté"
    first = result.equivalence_failures[0]
    assert Path(first.file).exists()
    assert Path(first.file).name == f"{name}-{first.seed}.txt"


def test_no_exemption_mutant_separates():
    """Sans exemption, chaque clause doit avoir exactement un littéral vrai."""
    # seule affectation satisfaisante : x1 = x2 = vrai, la clause 1 est vraie deux fois
    f = CnfFormula(2, ((1, 2), (1, -2), (-1, 2)))
    assert is_normalized_2sat3(f)
    assert solve_2sat(f).answer

    correct, _ = run_reduction("sat2_to_3xce2", f)
    mutant, _ = run_reduction("mutant_sat2_to_3xce2_no_exemption", f)
    assert solve_xce(correct).answer
    assert not solve_xce(mutant).answer, "Le mutant doit changer la réponse"


def test_uncoupled_mutant_separates():
    """Sans les lignes de couplage, les deux copies de x se contredisent librement."""
    print("\n=== Test : Mutant sans couplage ===")
    # 1 ≤ 2x ≤ 1 : aucune valeur de x ne convient
    band = LinSystem(LinMode.BAND, 1, 1, ((1, 1, 2),), (1,), (1,))

    correct, _ = run_reduction("twolp_to_lp", band)
    mutant, _ = run_reduction("mutant_twolp_to_lp_uncoupled", band)
    assert (correct.num_rows, mutant.num_rows) == (4, 2)
    assert not solve_lin(correct).answer
    assert solve_lin(mutant).answer, "y = (1, 0) satisfait les deux copies séparées"

    print("✓ Test réussi")


def test_parity_mutant_separates():
    """x₁ = x₂ = 1 : l'égalité retournée en x₁ ≠ x₂ rend le système impossible."""
    print("\n=== Test : Mutant de parité ===")
    s = LinSystem(LinMode.EQ, 3, 2, ((1, 1, 1), (1, 2, -1), (2, 1, 1), (3, 2, 1)), (0, 1, 1))

    correct, _ = run_reduction("le_to_xor2sat", s)
    mutant, _ = run_reduction("mutant_le_to_xor2sat_parity", s)
    assert Parity(1, 2, 0) in correct.constraints and Parity(1, 2, 1) in mutant.constraints
    assert solve_xor2sat(correct).witness == (1, 1)
    assert not solve_xor2sat(mutant).answer

    print("✓ Test réussi")


def test_verify_is_reproducible(tmp_path):
    """Deux campagnes identiques ne diffèrent que par la durée."""
    def stable(result):
        return [line for line in result.serialize().splitlines() if not line.startswith("WALL_TIME")]

    first = verify_m_reduction("le_to_xor2sat", trials=30, seed=7, run_dir=tmp_path)
    second = verify_m_reduction("le_to_xor2sat", trials=30, seed=7, run_dir=tmp_path)
    assert stable(first) == stable(second)


def test_turing_campaign_shortness(tmp_path):
    """Chaque question porte exactement sur |X| sommets."""
    print("\n=== Test : Campagne de la réduction de Turing ===")
    result = verify_T_reduction(trials=10, max_size=4, run_dir=tmp_path)

    assert result.name == "ap2dm_to_dstcon_queries"
    assert result.shortness_failures == 0
    assert result.max_ratio == pytest.approx(1.0)

    print("✓ Test réussi")


def test_turing_random_family_records_findings(tmp_path):
    result = verify_T_reduction(trials=10, max_size=5, family="random", run_dir=tmp_path)
    assert result.equivalence_failures == [], "La famille aléatoire ne produit que des constats"
    with pytest.raises(InvalidParameterError):
        verify_T_reduction(trials=1, family="other", run_dir=tmp_path)


def test_fit_dstcon_to_ap2dm():
    """|X| = 3·(m_ver − 2) + 2 sur des graphes déjà normalisés."""
    print("\n=== Test : Ajustement des constantes ===")
    result = fit_shortness("dstcon_to_ap2dm", trials=20, max_size=6)

    assert result.observations, "Des observations sont attendues"
    assert all(out == 3 * inp - 4 for inp, out in result.observations)
    assert result.fitted_k1 <= result.declared_k1
    assert result.max_ratio <= 1.0
    assert result.serialize().startswith("FIT\tdstcon_to_ap2dm\n")

    print("✓ Test réussi")


def test_tightest_constants():
    assert tightest_constants([], 0) == (0, 0)
    assert tightest_constants([(2, 4), (3, 6)], 0) == (2, 0)
    assert tightest_constants([(1, 5), (4, 8)], 3) == (2, 3)


@pytest.mark.parametrize("kind,max_size,trials", [
    ("2sat", 8, 60),
    ("xor", 8, 60),
    ("linkage", 5, 20),
])
def test_crosschecks(kind, max_size, trials, tmp_path):
    result = crosscheck_oracles(kind, trials, max_size=max_size, run_dir=tmp_path)
    assert result.name == f"oracle_{kind}"
    assert result.ok, result.serialize()


def test_unknown_crosscheck(tmp_path):
    with pytest.raises(UnknownReductionError):
        crosscheck_oracles("nothing", 1, run_dir=tmp_path)
