"""Tests des oracles exhaustifs et des vérificateurs de témoins."""
import sys
from pathlib import Path

# Ajouter le dossier racine au path
sys.path.insert(0, str(Path(__file__).parent.parent))

import pytest
from hypothesis import given, settings, strategies as st

from src.exceptions import BudgetExceededError, ClauseWidthError, InvalidParameterError
from src.harness import GenSpec, generate
from src.instances import (
    Ap2dmInstance,
    CnfFormula,
    Digraph,
    LinMode,
    LinSystem,
    Parity,
    UGraph,
    Unit,
    XceInstance,
    XorSystem,
)
from src.oracles import (
    check_assignment,
    check_checkered_cover,
    check_exact_cover,
    check_path,
    check_vector,
    check_xor_assignment,
    is_linked_power,
    iter_perfect_matchings,
    linkage_symmetry,
    linked_pairs,
    solve_2cvc,
    solve_2sat,
    solve_2sat_enum,
    solve_ap2dm,
    solve_dstcon,
    solve_lin,
    solve_xce,
    solve_xor2sat,
    solve_xor2sat_enum,
)


def test_2sat():
    """Formule satisfiable et contradiction."""
    print("\n=== Test : 2SAT ===")
    f = CnfFormula(2, ((1, -2), (2,)))
    result = solve_2sat(f)

    assert result.answer, "La formule est satisfiable"
    assert check_assignment(f, result.witness), "Le témoin doit satisfaire la formule"
    assert result.witness == (True, True)

    contradiction = CnfFormula(1, ((1,), (-1,)))
    assert not solve_2sat(contradiction)
    assert not solve_2sat_enum(contradiction)
    assert solve_2sat(CnfFormula(0)).answer, "La formule vide est satisfiable"

    print("✓ Test réussi")


def test_2sat_rejects_wide_clauses():
    """Une clause de largeur 3 est refusée."""
    with pytest.raises(ClauseWidthError):
        solve_2sat(CnfFormula(3, ((1, 2, 3),)))


@settings(max_examples=60, deadline=None)
@given(seed=st.integers(0, 100_000), size=st.integers(1, 10))
def test_2sat_agrees_with_enumeration(seed, size):
    """Les deux oracles 2SAT donnent la même réponse."""
    f = generate(GenSpec(problem="2sat3", size=size, seed=seed))
    assert solve_2sat(f).answer == solve_2sat_enum(f).answer


def test_dstcon():
    """Accessibilité et chemin témoin."""
    print("\n=== Test : Accessibilité ===")
    g = Digraph(3, ((1, 2), (2, 3)), 1, 3)
    result = solve_dstcon(g)

    assert result.answer
    assert result.witness == [1, 2, 3], f"Chemin inattendu: {result.witness}"
    assert check_path(g, result.witness)
    assert not solve_dstcon(Digraph(3, ((1, 2), (3, 2)), 1, 3))
    assert solve_dstcon(Digraph(1, (), 1, 1)).answer, "s = t est accessible"

    print("✓ Test réussi")


def test_2cvc():
    """Couverture 2-checkered : chemin, K4 et graphe vide."""
    print("\n=== Test : Couverture 2-checkered ===")
    path = UGraph(3, ((1, 2), (2, 3)))
    result = solve_2cvc(path)
    assert result.answer
    assert check_checkered_cover(path, result.witness)

    k4 = UGraph(4, ((1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)))
    assert not solve_2cvc(k4), "K4 n'a pas de couverture 2-checkered"
    assert solve_2cvc(UGraph(0)).answer

    assert not check_checkered_cover(k4, {1, 2, 3, 4}), "Arête doublement couverte hors prise"
    assert not check_checkered_cover(path, {1}), "L'arête (2, 3) n'est pas couverte"

    print("✓ Test réussi")


def test_xce():
    """Couverture exacte avec éléments exemptés."""
    print("\n=== Test : Couverture exacte ===")
    x = XceInstance(3, (3,), ((1, 2), (2, 3)))
    result = solve_xce(x)

    assert result.answer
    assert result.witness == (1,), f"Seul le premier ensemble convient: {result.witness}"
    assert check_exact_cover(x, result.witness)
    assert not check_exact_cover(x, (1, 2)), "2 serait couvert deux fois"

    assert solve_xce(XceInstance(0)).answer, "L'univers vide se couvre par ∅"
    assert not solve_xce(XceInstance(1)), "1 n'est couvert par aucun ensemble"

    print("✓ Test réussi")


def test_lin():
    """Faisabilité {0,1} en modes geq, eq et band."""
    print("\n=== Test : Systèmes linéaires ===")
    geq = LinSystem(LinMode.GEQ, 1, 2, ((1, 1, 1), (1, 2, 1)), (1,))
    result = solve_lin(geq)
    assert result.answer and check_vector(geq, result.witness)

    split = LinSystem(LinMode.GEQ, 2, 1, ((1, 1, 1), (2, 1, -1)), (1, 1))
    assert not solve_lin(split), "x ≥ 1 et -x ≥ 1 sont incompatibles"

    eq = LinSystem(LinMode.EQ, 1, 2, ((1, 1, 2), (1, 2, 1)), (1,))
    assert solve_lin(eq).witness == (0, 1)

    band = LinSystem(LinMode.BAND, 1, 1, ((1, 1, 2),), (1,), (1,))
    assert not solve_lin(band), "2x ne vaut jamais 1"

    empty_row = LinSystem(LinMode.GEQ, 1, 0, (), (1,))
    assert not solve_lin(empty_row), "Une ligne vide vaut 0"

    print("✓ Test réussi")


def test_xor2sat():
    """Parités incompatibles sur un triangle, unités cohérentes."""
    print("\n=== Test : ⊕2SAT ===")
    triangle = XorSystem(3, (Parity(1, 2, 1), Parity(2, 3, 1), Parity(1, 3, 1)))
    assert not solve_xor2sat(triangle)
    assert not solve_xor2sat_enum(triangle)

    units = XorSystem(2, (Parity(1, 2, 0), Unit(1, 1), Unit(2, 1)))
    result = solve_xor2sat(units)
    assert result.witness == (1, 1)
    assert check_xor_assignment(units, result.witness)

    assert not solve_xor2sat(XorSystem(2, contradiction=1)), "La contradiction se propage"

    print("✓ Test réussi")


@settings(max_examples=60, deadline=None)
@given(seed=st.integers(0, 100_000), size=st.integers(1, 10))
def test_xor_agrees_with_enumeration(seed, size):
    x = generate(GenSpec(problem="xor", size=size, seed=seed))
    fast = solve_xor2sat(x)
    assert fast.answer == solve_xor2sat_enum(x).answer
    if fast.answer:
        assert check_xor_assignment(x, fast.witness)


def test_ap2dm_small():
    """Cas limites AP2DM : un élément, paire seulement triviale."""
    print("\n=== Test : AP2DM élémentaire ===")
    assert solve_ap2dm(Ap2dmInstance(1)).answer, "Aucune paire requise"

    alone = solve_ap2dm(Ap2dmInstance(2))
    assert not alone.answer
    assert alone.witness == (1, 2), f"Première paire non liée: {alone.witness}"

    swap = Ap2dmInstance(2, (), ((1, 2), (2, 1)))
    assert solve_ap2dm(swap, linkage="cycle").answer
    # π = (1 2) : π² est l'identité, 1 n'atteint jamais 2 par un nombre pair de pas
    assert not solve_ap2dm(swap, linkage="chain").answer

    print("✓ Test réussi")


def test_ap2dm_matchings():
    """Énumération des couplages parfaits d'un 3-cycle."""
    print("\n=== Test : Couplages parfaits ===")
    cycle = Ap2dmInstance(3, (), ((1, 2), (2, 3), (3, 1)))
    matchings = list(iter_perfect_matchings(cycle))

    assert (0, 1, 2, 3) in matchings, "L'identité est un couplage"
    assert (0, 2, 3, 1) in matchings
    assert len(matchings) == 2, f"Deux couplages attendus: {matchings}"
    assert linked_pairs((0, 2, 3, 1), "chain") == {
        (v, w) for v in (1, 2, 3) for w in (1, 2, 3) if v != w
    }
    assert solve_ap2dm(cycle).answer

    assert linkage_symmetry(cycle) == (2, 6, 0)
    swap = Ap2dmInstance(2, (), ((1, 2), (2, 1)))
    assert linkage_symmetry(swap, "chain") == (2, 0, 0)
    assert linkage_symmetry(swap, "cycle") == (2, 2, 0)

    print("✓ Test réussi")


def test_ap2dm_budget():
    with pytest.raises(BudgetExceededError):
        solve_ap2dm(Ap2dmInstance(40))
    with pytest.raises(InvalidParameterError):
        solve_ap2dm(Ap2dmInstance(2), linkage="spiral")


@settings(max_examples=30, deadline=None)
@given(seed=st.integers(0, 100_000), size=st.integers(2, 6))
def test_chain_linkage_matches_matrix_powers(seed, size):
    """La liaison par chaîne coïncide avec les puissances paires de π."""
    a = generate(GenSpec(problem="ap2dm", size=size, seed=seed))
    n = a.universe_size
    for pi in iter_perfect_matchings(a):
        chain = linked_pairs(pi, "chain")
        powers = {(v, w) for v in range(1, n + 1) for w in range(1, n + 1)
                  if v != w and is_linked_power(pi, v, w)}
        assert chain == powers


if __name__ == "__main__":
    try:
        test_2sat()
        test_2sat_rejects_wide_clauses()
        test_dstcon()
        test_2cvc()
        test_xce()
        test_lin()
        test_xor2sat()
        test_ap2dm_small()
        test_ap2dm_matchings()
        test_ap2dm_budget()
        print("\n" + "="*50)
        print("TOUS LES TESTS SONT PASSÉS ✓")
        print("="*50)
    except AssertionError as e:
        print(f"\n❌ Test échoué : {e}")
    except Exception as e:
        print(f"\n❌ Erreur : {e}")
