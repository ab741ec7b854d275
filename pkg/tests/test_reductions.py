"""Tests des réductions, des normalisations et des exemples illustrés."""
import logging
import sys
from fractions import Fraction
from pathlib import Path

# Ajouter le dossier racine au path
sys.path.insert(0, str(Path(__file__).parent.parent))

import pytest
from hypothesis import given, settings, strategies as st

from src.cli.figures import FIG1_COVER, FIG1_FORMULA, FIG2_FORMULA, FIG3_GRAPH
from src.exceptions import PreconditionError, UnknownReductionError
from src.harness import GenSpec, generate
from src.instances import (
    Ap2dmInstance,
    CnfFormula,
    Digraph,
    LinMode,
    LinSystem,
    Parity,
    Tags,
    UGraph,
    Unit,
    XceInstance,
    validate,
)
from src.oracles import (
    check_checkered_cover,
    check_exact_cover,
    solve_2cvc,
    solve_2sat,
    solve_ap2dm,
    solve_dstcon,
    solve_lin,
    solve_xce,
    solve_xor2sat,
)
from src.reductions import (
    CONTRADICTION,
    ReductionReport,
    ap2dm_to_dstcon_queries,
    clause_slot,
    cover_from_assignment,
    cvc3_to_sat2,
    degree_reducing_oracle,
    dstcon_to_ap2dm,
    exact_cover_from_assignment,
    get_reduction,
    is_dstcon_normal,
    is_normalized_2sat3,
    layer_ids,
    le_to_xor2sat,
    lp_to_2lp,
    normalize_2sat3,
    normalize_dstcon,
    reduce_degree_dstcon,
    run_reduction,
    sat2_to_2cvc3,
    sat2_to_3xce2,
    twolp_to_lp,
    variable_gadgets,
    xce2_to_2lp,
)

K4 = UGraph(4, ((1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)))

# x₁..x₄ égaux, y₁..y₄ égaux (cycles d'implications), puis les quatre
# combinaisons de (x, y) interdites : normalisée et insatisfiable.
UNSAT_NORMAL = CnfFormula(8, (
    (-1, 2), (-2, 3), (-3, 4), (-4, 1),
    (-5, 6), (-6, 7), (-7, 8), (-8, 5),
    (1, 5), (-2, 6), (3, -7), (-4, -8),
))


def test_normalize_2sat3():
    """Propagation, littéraux supprimables et contradiction."""
    print("\n=== Test : Normalisation 2SAT₃ ===")
    assert normalize_2sat3(CnfFormula(1, ((1,), (-1,)))) == CONTRADICTION
    assert normalize_2sat3(CnfFormula(2, ((1,), (-1, 2)))) == CnfFormula(0)

    removable = CnfFormula(3, ((1, 2), (-1, 2), (1, 3), (-1, -3)))
    assert normalize_2sat3(removable) == CnfFormula(2, ((1, 2), (-1, -2))), \
        "x₂ n'apparaît que positivement et doit disparaître"

    assert normalize_2sat3(FIG2_FORMULA) == FIG2_FORMULA, "Une formule normalisée est un point fixe"
    assert is_normalized_2sat3(UNSAT_NORMAL)

    print("✓ Test réussi")


def test_figure1():
    """Graphe de la première figure et couverture de sa légende."""
    print("\n=== Test : Figure 1 ===")
    g = sat2_to_2cvc3(FIG1_FORMULA)

    assert g.num_vertices == 14, f"14 sommets attendus, obtenu {g.num_vertices}"
    assert validate(g, Tags(deg_bound=3)) == [], "Degré ≤ 3 et graphe connexe conforme"
    for j in range(1, FIG1_FORMULA.num_clauses + 1):
        grip = (clause_slot(3, j, 1), clause_slot(3, j, 2))
        assert grip in g.grips(), f"Les cases de la clause {j} forment une prise"
    assert check_checkered_cover(g, FIG1_COVER), "La couverture de la légende est valide"
    assert solve_2sat(FIG1_FORMULA).answer and solve_2cvc(g).answer

    print("✓ Test réussi")


def test_contradiction_gives_k4():
    assert sat2_to_2cvc3(CONTRADICTION) == K4
    assert not solve_2cvc(sat2_to_2cvc3(CONTRADICTION))


def test_sat2_to_2cvc3_unsat_image_has_cover():
    """Une formule normalisée insatisfiable donne quand même un graphe couvrable.

    Toutes les cases de clause plus les sommets de littéral de degré 2
    forment une couverture 2-checkered de l'image.
    """
    print("\n=== Test : Image d'une formule insatisfiable ===")
    assert not solve_2sat(UNSAT_NORMAL)

    g = sat2_to_2cvc3(UNSAT_NORMAL)
    degree = g.degrees()
    slots = range(2 * UNSAT_NORMAL.num_vars + 1, g.num_vertices + 1)
    cover = set(slots) | {v for v in range(1, 2 * UNSAT_NORMAL.num_vars + 1) if degree[v] == 2}

    assert check_checkered_cover(g, cover), "La couverture explicite doit être valide"

    print("✓ Couverture trouvée malgré une source NON")
    print("✓ Test réussi")


def test_sat2_to_2cvc3_requires_normal_form():
    with pytest.raises(PreconditionError):
        sat2_to_2cvc3(CnfFormula(2, ((1, 2),)))


@settings(max_examples=40, deadline=None)
@given(seed=st.integers(0, 100_000), size=st.integers(2, 10))
def test_cover_from_satisfying_assignment(seed, size):
    """C_σ est une couverture 2-checkered dès que σ satisfait la formule."""
    f = generate(GenSpec(problem="2sat3", size=size, shape="normal", seed=seed))
    result = solve_2sat(f)
    if result.answer:
        assert check_checkered_cover(sat2_to_2cvc3(f), cover_from_assignment(f, result.witness))


def test_cvc3_to_sat2():
    """Prises → clause positive, autres arêtes → ou exclusif."""
    print("\n=== Test : 2CVC₃ → 2SAT ===")
    path = cvc3_to_sat2(UGraph(3, ((1, 2), (2, 3))))
    assert path == CnfFormula(3, ((1, 2), (2, 3)))
    assert solve_2sat(path).answer

    f = cvc3_to_sat2(K4)
    assert f.num_vars == 4 and f.num_clauses == 12
    assert not solve_2sat(f), "K4 : la formule doit être insatisfiable"

    with pytest.raises(PreconditionError):
        cvc3_to_sat2(UGraph(5, ((1, 2), (1, 3), (1, 4), (1, 5))))

    print("✓ Test réussi")


def test_figure2():
    """Classes de variables et couverture exacte de la deuxième figure."""
    print("\n=== Test : Figure 2 ===")
    kinds = [gadget.kind for gadget in variable_gadgets(FIG2_FORMULA)]
    assert kinds == ['+', '*', '-'], f"Classes inattendues: {kinds}"

    x = sat2_to_3xce2(FIG2_FORMULA)
    assert x.universe_size == 17, f"Univers de 17 éléments attendu: {x.universe_size}"
    assert x.num_sets == 16
    assert len(x.exempt) == 8, "Les 8 occurrences sont exemptées"
    costs = x.overlapping_costs()
    assert all(costs[e] == 2 for e in range(1, x.universe_size + 1)), "Chaque élément est couvert deux fois"
    assert validate(x, Tags(overlap_bound=2)) == []

    assignment = solve_2sat(FIG2_FORMULA).witness
    assert check_exact_cover(x, exact_cover_from_assignment(FIG2_FORMULA, assignment))
    assert solve_xce(x).answer

    print("✓ Test réussi")


def test_sat2_to_3xce2_contradiction():
    x = sat2_to_3xce2(CONTRADICTION)
    assert x == XceInstance(1)
    assert not solve_xce(x)


@settings(max_examples=40, deadline=None)
@given(seed=st.integers(0, 100_000), size=st.integers(2, 8))
def test_exact_cover_from_satisfying_assignment(seed, size):
    f = generate(GenSpec(problem="2sat3", size=size, shape="normal", seed=seed))
    result = solve_2sat(f)
    if result.answer:
        x = sat2_to_3xce2(f)
        assert check_exact_cover(x, exact_cover_from_assignment(f, result.witness))


def test_xce2_to_2lp():
    """Une ligne par élément, bornes [0, 1] pour les exemptés."""
    print("\n=== Test : XCE₂ → 2LP ===")
    s = xce2_to_2lp(XceInstance(3, (3,), ((1, 2), (2, 3))))

    assert s.mode is LinMode.BAND
    assert (s.num_rows, s.num_cols) == (3, 2)
    assert s.lower == (1, 1, 0) and s.upper == (1, 1, 1)
    assert solve_lin(s).answer

    assert not solve_lin(xce2_to_2lp(XceInstance(1))), "Élément sans ensemble : infaisable"
    with pytest.raises(PreconditionError):
        xce2_to_2lp(XceInstance(1, (), ((1,), (1,), (1,))))

    print("✓ Test réussi")


def test_lp_to_2lp():
    s = lp_to_2lp(LinSystem(LinMode.GEQ, 1, 2, ((1, 1, 1), (1, 2, -1)), (1,)))
    assert s.mode is LinMode.BAND
    assert s.lower == (1,) and s.upper == (2,), "Le plafond vaut Σ|a|"
    with pytest.raises(PreconditionError):
        lp_to_2lp(s)


def test_twolp_to_lp():
    """Deux copies couplées des variables, dimensions et borne de colonne."""
    print("\n=== Test : 2LP → LP ===")
    band = LinSystem(LinMode.BAND, 1, 2, ((1, 1, 1), (1, 2, 1)), (1,), (2,))
    s = twolp_to_lp(band)

    assert s.mode is LinMode.GEQ
    assert (s.num_rows, s.num_cols) == (6, 4), f"Dimensions: {s.num_rows}×{s.num_cols}"
    assert s.col_bound == 3
    assert validate(s) == []
    assert solve_lin(s).answer

    impossible = LinSystem(LinMode.BAND, 1, 1, ((1, 1, 2),), (1,), (1,))
    assert not solve_lin(impossible)
    assert not solve_lin(twolp_to_lp(impossible)), "Le couplage doit préserver le NON"

    pruned = twolp_to_lp(LinSystem(LinMode.BAND, 1, 3, ((1, 2, 1),), (1,), (1,)))
    assert (pruned.num_rows, pruned.num_cols) == (4, 2), "Les colonnes vides sont retirées"

    print("✓ Test réussi")


def test_le_to_xor2sat():
    """Chaque équation est remplacée par son ensemble de solutions."""
    print("\n=== Test : LE → ⊕2SAT ===")

    def eq(coefficients, b):
        entries = tuple((1, col, value) for col, value in enumerate(coefficients, start=1))
        return LinSystem(LinMode.EQ, 1, len(coefficients), entries, (b,))

    assert le_to_xor2sat(eq([2, 1], 1)).constraints == (Unit(1, 0), Unit(2, 1))
    assert le_to_xor2sat(eq([1, 1], 1)).constraints == (Parity(1, 2, 1),)
    assert le_to_xor2sat(eq([1, -1], 0)).constraints == (Parity(1, 2, 0),)
    assert le_to_xor2sat(eq([2, 2], 2)).constraints == (Parity(1, 2, 1),)
    assert le_to_xor2sat(eq([1, 3], 3)).constraints == (Unit(1, 0), Unit(2, 1))

    impossible = le_to_xor2sat(eq([1, 1], 5))
    assert impossible.contradiction == 1
    assert not solve_xor2sat(impossible)

    with pytest.raises(PreconditionError):
        le_to_xor2sat(eq([1, 1, 1], 1))

    print("✓ Test réussi")


def test_normalize_dstcon():
    """Extrémités de degré 1, degrés ≤ 2, pas d'arc s → t."""
    print("\n=== Test : Normalisation DSTCON ===")
    assert is_dstcon_normal(FIG3_GRAPH)
    assert normalize_dstcon(FIG3_GRAPH) == FIG3_GRAPH, "La figure 3 est déjà normalisée"

    assert normalize_dstcon(Digraph(2, ((1, 2),), 1, 2)) == Digraph(3, ((1, 3), (3, 2)), 1, 2)

    fan = Digraph(5, ((1, 2), (1, 3), (1, 4), (2, 5)), 1, 5)
    normal = normalize_dstcon(fan)
    assert is_dstcon_normal(normal)
    assert normal.num_vertices == 7
    assert solve_dstcon(normal).answer == solve_dstcon(fan).answer

    print("✓ Test réussi")


@settings(max_examples=40, deadline=None)
@given(seed=st.integers(0, 100_000), size=st.integers(1, 10))
def test_normalize_dstcon_preserves_reachability(seed, size):
    g = generate(GenSpec(problem="digraph", size=size, seed=seed))
    normal = normalize_dstcon(g)
    assert is_dstcon_normal(normal)
    assert solve_dstcon(normal).answer == solve_dstcon(g).answer


def test_reduce_degree_dstcon():
    g = Digraph(5, ((1, 3), (2, 3), (3, 4), (3, 5)), 1, 4)
    reduced = reduce_degree_dstcon(g)
    degree = reduced.in_degrees() + reduced.out_degrees()

    assert reduced.num_vertices == 6
    assert max(degree.values()) <= 3
    assert solve_dstcon(reduced).answer
    assert reduce_degree_dstcon(FIG3_GRAPH) == FIG3_GRAPH

    with pytest.raises(PreconditionError):
        reduce_degree_dstcon(g, target=2)


def test_reduce_degree_dstcon_dense_graph_exceeds_k1(caplog):
    """Degré total 6 : trois relais par sommet, la borne 2·m_ver ne tient plus."""
    print("\n=== Test : Éclatement d'un graphe orienté complet ===")
    complete = Digraph(4, tuple((u, v) for u in range(1, 5) for v in range(1, 5) if u != v), 1, 4)

    with caplog.at_level(logging.WARNING):
        reduced, report = run_reduction("reduce_degree_dstcon", complete)

    assert reduced.num_vertices == 16, f"4 + 4·3 sommets attendus: {reduced.num_vertices}"
    assert solve_dstcon(reduced).answer
    assert report.k1 == 2 and report.k2 == 0, "Les constantes restent celles déclarées"
    assert not report.shortness_ok
    assert "reduce_degree_dstcon" in caplog.text

    print("✓ Test réussi")


def test_figure3_construction():
    """Instance AP2DM de la troisième figure."""
    print("\n=== Test : Figure 3 ===")
    a = dstcon_to_ap2dm(FIG3_GRAPH)

    assert a.universe_size == 14, f"14 éléments attendus: {a.universe_size}"
    assert a.exempt == (3, 4, 5, 6), "La couche 0 est exemptée"
    assert a.labels[1] == "s" and a.labels[2] == "t"
    assert a.labels[layer_ids(FIG3_GRAPH)[(2, 0)]] == "[v2,0]"
    assert validate(a, Tags(overlap_bound=4)) == [], "Recouvrement ≤ 4 et R connecté"

    _, report = run_reduction("dstcon_to_ap2dm", FIG3_GRAPH)
    assert report.shortness_ok and report.out_value == 14

    print("✓ Test réussi")


def test_figure3_matching_verdict():
    """La source est OUI ; l'image est NON par chaîne et OUI par cycle."""
    print("\n=== Test : Verdict AP2DM de la figure 3 ===")
    a = dstcon_to_ap2dm(FIG3_GRAPH)
    assert solve_dstcon(FIG3_GRAPH).answer

    chain = solve_ap2dm(a)
    assert not chain.answer
    assert chain.witness == (8, 13), f"Première paire non liée: {chain.witness}"

    assert solve_ap2dm(a, linkage="cycle").answer

    print("✓ Test réussi")


def test_figure3_turing():
    """Le graphe des paires est fortement connexe : toutes les questions aboutissent."""
    print("\n=== Test : Réduction de Turing sur la figure 3 ===")
    a = dstcon_to_ap2dm(FIG3_GRAPH)
    outcome = ap2dm_to_dstcon_queries(a)

    assert outcome.answer and outcome.failing_pair is None
    # 14·13 paires ordonnées moins les 4·3 paires entièrement exemptées
    assert len(outcome.report.queries) == 170, f"{len(outcome.report.queries)} questions"
    assert {q.size for q in outcome.report.queries} == {14}
    assert outcome.report.shortness_ok

    assert ap2dm_to_dstcon_queries(a, oracle=degree_reducing_oracle()).answer

    print("✓ Test réussi")


def test_turing_edge_cases():
    print("\n=== Test : Réduction de Turing, cas limites ===")
    single = ap2dm_to_dstcon_queries(Ap2dmInstance(1))
    assert single.answer and single.report.queries == [], "Aucune paire, aucune question"

    alone = ap2dm_to_dstcon_queries(Ap2dmInstance(2))
    assert not alone.answer
    assert alone.failing_pair == (1, 2)
    assert len(alone.report.queries) == 1, "L'exploration s'arrête à la première paire"
    assert not solve_ap2dm(Ap2dmInstance(2))

    print("✓ Test réussi")


def test_single_vertex_path_disagreement():
    """s → v → t : accessible, mais s et t ne partagent aucun cycle de couplage.

    La réduction de Turing répond OUI (graphe des paires fortement connexe)
    alors que l'oracle AP2DM répond NON dans les deux conventions de liaison.
    """
    print("\n=== Test : Chemin à un sommet intermédiaire ===")
    g = Digraph(3, ((2, 1), (1, 3)), 2, 3)
    assert is_dstcon_normal(g)
    a = dstcon_to_ap2dm(g)

    assert a.universe_size == 5
    assert solve_dstcon(g).answer
    chain = solve_ap2dm(a, linkage="chain")
    assert not chain.answer and chain.witness == (1, 2), f"Témoin: {chain.witness}"
    assert not solve_ap2dm(a, linkage="cycle").answer
    assert ap2dm_to_dstcon_queries(a).answer

    print("✓ Désaccord documenté reproduit")
    print("✓ Test réussi")


def test_dstcon_to_ap2dm_requires_normal_form():
    with pytest.raises(PreconditionError):
        dstcon_to_ap2dm(Digraph(2, ((1, 2),), 1, 2))


def test_registry():
    """Contrats enregistrés et nom inconnu."""
    spec = get_reduction("dstcon_to_ap2dm")
    assert (spec.in_param, spec.out_param, spec.k1, spec.k2) == ("m_ver", "m_set", 3, 2)
    assert spec.normalizer == "normalize_dstcon"
    assert get_reduction("ap2dm_to_dstcon_queries").turing
    with pytest.raises(UnknownReductionError):
        get_reduction("sat3_to_anything")


def test_report_rational_constants():
    """k₁ = 3/2 : la borne est 3/2·m₁ sans arrondi."""
    print("\n=== Test : Constantes rationnelles ===")
    report = ReductionReport(name="demi", in_param="m_vbl", in_value=4,
                             out_param="m_ver", out_value=6, k1=Fraction(3, 2), k2=0)
    assert report.bound == 6 and report.shortness_ok
    assert "K1\t3/2\tK2\t0" in report.serialize()
    assert report.ratio() == pytest.approx(1.0)

    over = report.model_copy(update={"out_value": 7})
    assert not over.shortness_ok, "7 > 3/2·4"
    assert ReductionReport(name="demi", in_param="m_vbl", in_value=3, out_param="m_ver",
                           out_value=4, k1="3/2", k2=0).bound == Fraction(9, 2)

    print("✓ Test réussi")


if __name__ == "__main__":
    try:
        test_normalize_2sat3()
        test_figure1()
        test_contradiction_gives_k4()
        test_sat2_to_2cvc3_unsat_image_has_cover()
        test_cvc3_to_sat2()
        test_figure2()
        test_xce2_to_2lp()
        test_twolp_to_lp()
        test_le_to_xor2sat()
        test_normalize_dstcon()
        test_figure3_construction()
        test_figure3_turing()
        test_turing_edge_cases()
        test_single_vertex_path_disagreement()
        print("\n" + "="*50)
        print("TOUS LES TESTS SONT PASSÉS ✓")
        print("="*50)
    except AssertionError as e:
        print(f"\n❌ Test échoué : {e}")
    except Exception as e:
        print(f"\n❌ Erreur : {e}")
