"""Tests de la ligne de commande."""
import sys
from pathlib import Path

# Ajouter le dossier racine au path
sys.path.insert(0, str(Path(__file__).parent.parent))

from src.cli import run
from src.cli.figures import FIG1_FORMULA
from src.cli.main import format_witness
from src.instances import serialize


def write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text, encoding="utf-8")
    return str(path)


def test_solve_contradiction(tmp_path, capsys):
    """Une contradiction répond NO avec le code 1."""
    print("\n=== Test : solve ===")
    path = write(tmp_path, "f.txt", "p cnf2 1 2\n1 0\n-1 0\n")

    assert run(["solve", path]) == 1
    assert capsys.readouterr().out.splitlines()[0] == "NO"

    assert run(["solve", "--enum", path]) == 1


def test_solve_prints_witness(tmp_path, capsys):
    path = write(tmp_path, "g.txt", "p digraph 3 2\ne 1 2\ne 2 3\ns 1\nt 3\n")
    assert run(["solve", path]) == 0
    assert capsys.readouterr().out == "YES\nWITNESS 1 2 3\n"


def test_format_witness():
    assert format_witness((True, False)) == "1 0"
    assert format_witness(frozenset({3, 1})) == "1 3"
    assert format_witness(5) == "5"


def test_gen(tmp_path):
    """Génération vers un fichier, puis demande impossible."""
    out = tmp_path / "f.txt"
    assert run(["gen", "2sat3", "--size", "5", "--seed", "3", "-o", str(out)]) == 0
    assert out.read_text(encoding="utf-8").startswith("p cnf2 5 ")

    assert run(["gen", "2sat3", "--size", "10", "--clauses", "16"]) == 2


def test_reduce_with_report(tmp_path):
    """Réduction de la formule de la figure 1 avec rapport séparé."""
    source = write(tmp_path, "fig1.txt", serialize(FIG1_FORMULA))
    output, report = tmp_path / "out.txt", tmp_path / "report.txt"

    assert run(["reduce", "sat2_to_2cvc3", source, str(output), "--report", str(report)]) == 0
    assert output.read_text(encoding="utf-8").startswith("p graph 14 ")
    assert report.read_text(encoding="utf-8").startswith("REDUCE\tsat2_to_2cvc3\t")


def test_reduce_normalize_flag(tmp_path):
    """Sans normalisation l'entrée est refusée ; avec, elle passe."""
    source = write(tmp_path, "f.txt", "p cnf2 2 1\n1 2 0\n")
    output = tmp_path / "out.txt"

    assert run(["reduce", "sat2_to_2cvc3", source, str(output), "--report", str(tmp_path / "r")]) == 2
    assert run(["reduce", "sat2_to_2cvc3", source, str(output), "--normalize",
                "--report", str(tmp_path / "r")]) == 0


def test_fit(capsys):
    assert run(["fit", "dstcon_to_ap2dm", "--trials", "5", "--max-size", "5"]) == 0
    assert capsys.readouterr().out.startswith("FIT\tdstcon_to_ap2dm\n")


def test_example_fig1(capsys):
    """La couverture de la légende est reconnue."""
    print("\n=== Test : example fig1 ===")
    assert run(["example", "fig1"]) == 0
    out = capsys.readouterr().out

    assert "p graph 14 15" in out
    assert "SOURCE\tYES" in out and "TARGET\tYES" in out
    assert "CAPTION_COVER\tok" in out


def test_example_fig3(capsys):
    """Source OUI, image NON par chaîne et OUI par cycle."""
    assert run(["example", "fig3"]) == 0
    out = capsys.readouterr().out
    assert "SOURCE\tYES" in out
    assert "TARGET\tNO" in out
    assert "TARGET_CYCLE\tYES" in out
    assert "TURING\tYES\tQUERIES 170\tSIZES 14" in out


def test_dot(tmp_path, capsys):
    path = write(tmp_path, "g.txt", "p digraph 3 2\ne 1 2\ne 2 3\ns 1\nt 3\n")
    assert run(["dot", path]) == 0
    out = capsys.readouterr().out
    assert out.startswith("digraph G {")
    assert "1 -> 2;" in out and "doublecircle" in out

    formula = write(tmp_path, "f.txt", "p cnf2 1 1\n1 0\n")
    assert run(["dot", formula]) == 2, "Pas de rendu DOT pour une formule"


def test_verify_and_history(tmp_path, capsys):
    """Le bilan est imprimé, enregistré, puis relu par history."""
    db = str(tmp_path / "runs.db")
    assert run(["verify", "cvc3_to_sat2", "--trials", "20", "--max-size", "6",
                "--run-dir", str(tmp_path), "--db", db]) == 0
    assert "VERIFY\tcvc3_to_sat2\n" in capsys.readouterr().out

    assert run(["history", "--db", db]) == 0
    assert "cvc3_to_sat2\ttrials 20" in capsys.readouterr().out

    assert run(["history", "--db", db, "--summary"]) == 0
    assert "cvc3_to_sat2\truns 1" in capsys.readouterr().out


def test_verify_oracle_crosscheck(tmp_path, capsys):
    assert run(["verify", "oracle_xor", "--trials", "20", "--max-size", "6",
                "--run-dir", str(tmp_path)]) == 0
    assert capsys.readouterr().out.startswith("VERIFY\toracle_xor\n")


def test_usage_errors(tmp_path):
    """Commande inconnue, réduction inconnue, fichier absent."""
    assert run(["frobnicate"]) == 2
    assert run(["verify", "no_such_reduction", "--run-dir", str(tmp_path)]) == 2
    assert run(["solve", str(tmp_path / "absent.txt")]) == 2
    assert run(["solve", write(tmp_path, "bad.txt", "p cnf2 1 1\n2 0\n")]) == 2
