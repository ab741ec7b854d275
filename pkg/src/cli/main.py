"""Point d'entrée en ligne de commande de redlab.

Codes de sortie : 0 = OUI ou succès, 1 = NON ou échec de vérification,
2 = erreur d'usage, de format ou d'entrée/sortie.
"""
import argparse
import logging
import sys
from pathlib import Path
from typing import Any, List, Optional, get_args

from .. import settings
from ..exceptions import RedlabError
from ..harness import GenSpec, crosscheck_oracles, fit_shortness, generate, verify_m_reduction, verify_T_reduction
from ..harness.genspec import Problem
from ..instances import read_instance, serialize, write_instance
from ..instances.types import CnfFormula, XorSystem
from ..oracles import decide, solve_2sat_enum, solve_xor2sat_enum
from ..oracles.matching import LINKAGES
from ..reductions import REDUCTIONS, get_reduction, run_reduction
from ..reductions.registry import load_reductions
from .dot import to_dot
from .figures import FIG1_COVER, FIGURES

logger = logging.getLogger(__name__)

PROBLEMS = get_args(Problem)


def _emit(text: str, output: Optional[str]):
    if output:
        Path(output).parent.mkdir(parents=True, exist_ok=True)
        Path(output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def format_witness(witness: Any) -> str:
    if isinstance(witness, (frozenset, set)):
        values = sorted(witness)
    elif isinstance(witness, (tuple, list)):
        values = list(witness)
    else:
        return str(witness)
    return " ".join(str(int(v)) if isinstance(v, bool) else str(v) for v in values)


def cmd_gen(args) -> int:
    spec = GenSpec(
        problem=args.problem, size=args.size, clauses=args.clauses, occ_bound=args.occ_bound,
        deg_bound=args.deg_bound, overlap_bound=args.overlap_bound, col_bound=args.col_bound,
        exemption_density=args.exemption_density, sat_bias=args.sat_bias, shape=args.shape,
        seed=args.seed,
    )
    instance = generate(spec)
    if args.output:
        write_instance(instance, args.output)
        logger.info(f"✅ Instance {args.problem} écrite dans {args.output}")
    else:
        sys.stdout.write(serialize(instance))
    return 0


def cmd_solve(args) -> int:
    instance = read_instance(args.file)
    if args.enum and isinstance(instance, CnfFormula):
        result = solve_2sat_enum(instance)
    elif args.enum and isinstance(instance, XorSystem):
        result = solve_xor2sat_enum(instance)
    else:
        result = decide(instance, linkage=args.linkage)
    print(result.verdict)
    if result.answer and result.witness is not None:
        print(f"WITNESS {format_witness(result.witness)}")
    elif not result.answer and result.witness is not None:
        print(f"FAILING {format_witness(result.witness)}")
    return 0 if result.answer else 1


def cmd_reduce(args) -> int:
    spec = get_reduction(args.name)
    instance = read_instance(args.input, spec.source)
    if args.normalize and spec.normalizer:
        instance = get_reduction(spec.normalizer).func(instance)
    output, report = run_reduction(args.name, instance)
    if spec.turing:
        _emit(f"{'YES' if output.answer else 'NO'}\n", args.output)
    else:
        write_instance(output, args.output)
    if args.report:
        Path(args.report).write_text(report.serialize(), encoding="utf-8")
    else:
        sys.stdout.write(report.serialize())
    return 0 if report.shortness_ok else 1


def cmd_verify(args) -> int:
    if args.name.startswith("oracle_"):
        result = crosscheck_oracles(args.name[len("oracle_"):], args.trials,
                                    max_size=args.max_size, seed=args.seed, run_dir=args.run_dir)
    elif get_reduction(args.name).turing:
        result = verify_T_reduction(None, args.trials, max_size=args.max_size, seed=args.seed,
                                    linkage=args.linkage, family=args.family,
                                    degree_reduce=args.degree_reduce, run_dir=args.run_dir)
    else:
        result = verify_m_reduction(args.name, None, args.trials, max_size=args.max_size,
                                    seed=args.seed, workers=args.workers, run_dir=args.run_dir,
                                    linkage=args.linkage)
    sys.stdout.write(result.serialize())
    if args.db:
        from ..database import RunRepository

        RunRepository(args.db).save_result(result)
    return 0 if result.ok else 1


def cmd_fit(args) -> int:
    result = fit_shortness(args.name, None, args.trials, max_size=args.max_size, seed=args.seed)
    sys.stdout.write(result.serialize())
    return 0


def cmd_example(args) -> int:
    source, name = FIGURES[args.figure]
    source_result = decide(source)
    output, report = run_reduction(name, source)
    target_result = decide(output)
    print(f"# source ({type(source).__name__})")
    sys.stdout.write(serialize(source))
    print(f"# {name}")
    sys.stdout.write(serialize(output))
    sys.stdout.write(report.serialize())
    print(f"SOURCE\t{source_result.verdict}")
    print(f"TARGET\t{target_result.verdict}")
    if args.figure == "fig1":
        from ..oracles import check_checkered_cover

        print(f"CAPTION_COVER\t{'ok' if check_checkered_cover(output, FIG1_COVER) else 'FAIL'}")
    if args.figure == "fig3":
        # liaison par chaîne : NON ; par cycle : OUI
        print(f"TARGET_CYCLE\t{decide(output, linkage='cycle').verdict}")
        outcome, turing_report = run_reduction("ap2dm_to_dstcon_queries", output)
        sizes = {query.size for query in turing_report.queries}
        print(f"TURING\t{'YES' if outcome.answer else 'NO'}\tQUERIES {len(turing_report.queries)}"
              f"\tSIZES {' '.join(str(s) for s in sorted(sizes))}")
    return 0


def cmd_dot(args) -> int:
    _emit(to_dot(read_instance(args.file)), args.output)
    return 0


def cmd_history(args) -> int:
    from ..database import RunRepository

    repo = RunRepository(args.db)
    if args.summary:
        for row in repo.get_failure_summary():
            print(f"{row['reduction']}\truns {row['nb_runs']}\ttrials {row['total_trials']}"
                  f"\tequiv {row['total_equivalence_failures']}\tshort {row['total_shortness_failures']}")
        return 0
    for run in repo.get_runs(limit=args.limit, reduction=args.reduction):
        print(f"{run['id']}\t{run['created_at']}\t{run['reduction']}\ttrials {run['trials']}"
              f"\tequiv {run['equivalence_failures']}\tshort {run['shortness_failures']}"
              f"\tratio {run['max_ratio']:.6f}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    load_reductions()
    parser = argparse.ArgumentParser(prog=settings.PROJECT_NAME,
                                     description="Réductions courtes et oracles exhaustifs.")
    parser.add_argument("--log-level", default=settings.LOG_LEVEL,
                        choices=["DEBUG", "INFO", "WARNING", "ERROR"])
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="générer une instance aléatoire")
    gen.add_argument("problem", choices=PROBLEMS)
    gen.add_argument("--size", type=int, required=True)
    gen.add_argument("--clauses", type=int)
    gen.add_argument("--occ-bound", type=int, default=3)
    gen.add_argument("--deg-bound", type=int, default=3)
    gen.add_argument("--overlap-bound", type=int)
    gen.add_argument("--col-bound", type=int, default=3)
    gen.add_argument("--exemption-density", type=float, default=0.3)
    gen.add_argument("--sat-bias", type=float, default=0.5)
    gen.add_argument("--shape", choices=["any", "normal"], default="any")
    gen.add_argument("--seed", type=int, default=settings.DEFAULT_SEED)
    gen.add_argument("-o", "--output")
    gen.set_defaults(handler=cmd_gen)

    solve = sub.add_parser("solve", help="décider une instance")
    solve.add_argument("file")
    solve.add_argument("--linkage", choices=LINKAGES, default="chain")
    solve.add_argument("--enum", action="store_true", help="oracle par énumération (2SAT, ⊕2SAT)")
    solve.set_defaults(handler=cmd_solve)

    reduce_ = sub.add_parser("reduce", help="appliquer une réduction")
    reduce_.add_argument("name", choices=sorted(REDUCTIONS))
    reduce_.add_argument("input")
    reduce_.add_argument("output")
    reduce_.add_argument("--report")
    reduce_.add_argument("--normalize", action="store_true",
                         help="normaliser l'entrée avant la réduction")
    reduce_.set_defaults(handler=cmd_reduce)

    verify = sub.add_parser("verify", help="campagne de vérification")
    verify.add_argument("name", help="réduction, mutant_* ou oracle_{2sat,xor,linkage}")
    verify.add_argument("--trials", type=int, default=settings.DEFAULT_TRIALS)
    verify.add_argument("--max-size", type=int)
    verify.add_argument("--seed", type=int, default=settings.DEFAULT_SEED)
    verify.add_argument("--workers", type=int, default=settings.REDLAB_WORKERS)
    verify.add_argument("--run-dir", default=str(settings.DEFAULT_RUN_DIR))
    verify.add_argument("--linkage", choices=LINKAGES, default="chain")
    verify.add_argument("--family", choices=["dstcon", "random"], default="dstcon")
    verify.add_argument("--degree-reduce", action="store_true")
    verify.add_argument("--db", help="base SQLite où enregistrer le bilan")
    verify.set_defaults(handler=cmd_verify)

    fit = sub.add_parser("fit", help="ajuster les constantes de brièveté")
    fit.add_argument("name", choices=sorted(REDUCTIONS))
    fit.add_argument("--trials", type=int, default=200)
    fit.add_argument("--max-size", type=int)
    fit.add_argument("--seed", type=int, default=settings.DEFAULT_SEED)
    fit.set_defaults(handler=cmd_fit)

    example = sub.add_parser("example", help="rejouer un exemple illustré")
    example.add_argument("figure", choices=sorted(FIGURES))
    example.set_defaults(handler=cmd_example)

    dot = sub.add_parser("dot", help="exporter un graphe au format DOT")
    dot.add_argument("file")
    dot.add_argument("-o", "--output")
    dot.set_defaults(handler=cmd_dot)

    history = sub.add_parser("history", help="historique des campagnes")
    history.add_argument("--db", default=str(settings.DEFAULT_DB_PATH))
    history.add_argument("--limit", type=int, default=20)
    history.add_argument("--reduction")
    history.add_argument("--summary", action="store_true")
    history.set_defaults(handler=cmd_history)
    return parser


def run(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2
    logging.basicConfig(level=args.log_level, format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.handler(args)
    except (RedlabError, OSError, ValueError) as e:
        print(f"❌ Erreur : {e}", file=sys.stderr)
        return 2


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
