import argparse
import json
import logging
import sys
import time
from typing import List, Optional, Sequence

import tqdm

from pancake_clique.classes.instance import Instance
from pancake_clique.classes.ordering import METHODS, CliqueResult, CneeoFailure, EdgeOrdering
from pancake_clique.classes.reports import MiddleMode
from pancake_clique.cneeo.extraction import clique_from_cneeo
from pancake_clique.cneeo.greedy import greedy_cneeo, is_valid_cneeo
from pancake_clique.cneeo.ordering import geometric_cneeo_ordering
from pancake_clique.cneeo.solvers import solve_pi2_lemmas
from pancake_clique.exceptions import (
    ContractViolation,
    DegenerateInstance,
    GenerationError,
    InstanceFormatError,
    InvalidOrdering,
    OracleCapExceeded,
    PancakeCliqueError,
)
from pancake_clique.graphs.oracle import ORACLE_CAP, max_clique_bruteforce
from pancake_clique.models.config import GenConfig
from pancake_clique.models.random import gen_pi2, gen_pseudodisk_triple
from pancake_clique.pseudodisk.bipartition import build_bipartition, verify_bipartition
from pancake_clique.readwrite.io import (
    partition_to_dict,
    read_instance,
    result_to_dict,
    transversal_report_to_dict,
    write_bench_csv,
    write_instance,
)
from pancake_clique.transversal.sweep import DEFAULT_RESOLUTION, middle_profile
from pancake_clique.verification.suites import SUITES, run_suites

__all__ = ["main", "build_parser", "solve", "bench_rows", "EXIT_OK", "EXIT_USAGE", "EXIT_INTERNAL", "EXIT_FINDING"]

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_INTERNAL = 3
EXIT_FINDING = 4

__LABELS = (
    (DegenerateInstance, "degenerate instance"),
    (OracleCapExceeded, "oracle cap exceeded"),
    (GenerationError, "generation failed"),
    (InvalidOrdering, "invalid ordering"),
    (InstanceFormatError, "malformed input"),
    (ContractViolation, "invalid input"),
)


def __error(e: Exception) -> str:
    for kind, label in __LABELS:
        if isinstance(e, kind):
            return f"{label}: {e}"
    return f"internal error: {type(e).__name__}: {e}"


def __int_list(raw: str) -> List[int]:
    try:
        return [int(v) for v in raw.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma separated integers, got {raw!r}")


def __method_list(raw: str) -> List[str]:
    methods = [v.strip() for v in raw.split(",") if v.strip()]
    unknown = [m for m in methods if m not in METHODS]
    if unknown:
        raise argparse.ArgumentTypeError(f"unknown methods {unknown}, expected some of {list(METHODS)}")
    return methods


def __box(raw: str):
    try:
        w, h = (float(v) for v in raw.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected WIDTH,HEIGHT, got {raw!r}")
    return w, h


def __emit(doc: dict, out: Optional[str]) -> None:
    text = json.dumps(doc, indent=2, allow_nan=False)
    if out is None:
        print(text)
        return
    with open(out, "wt") as f:
        f.write(text)
        f.write("\n")


def __ordering(g, objects, method: str):
    if method == "geometric":
        return geometric_cneeo_ordering(objects, graph=g)
    return greedy_cneeo(g)


def solve(inst: Instance, method: str, validate: bool = False) -> dict:
    """
    Run one solver on an instance.

    :param inst: Instance
    :param method: one of ``METHODS``
    :param validate: check the ordering with ``is_valid_cneeo``; a rejected ordering then yields a
        document with a null clique and ``validated`` false instead of an error
    :return: result document
    :raise InvalidOrdering: when extraction rejects the ordering and ``validate`` is off
    """
    if method in ("geometric", "lemmas") and inst.kind != "pi2":
        raise ContractViolation(f"method {method!r} needs a pi2 instance, got {inst.kind!r}")

    start = time.perf_counter()
    g = inst.intersection_graph()
    validated = None
    if method == "oracle":
        outcome = CliqueResult(tuple(max_clique_bruteforce(g)), "oracle")
    elif method == "lemmas":
        outcome = solve_pi2_lemmas(inst.objects)
    else:
        ordering = __ordering(g, inst.objects, method)
        if isinstance(ordering, EdgeOrdering):
            if validate:
                validated = is_valid_cneeo(g, ordering) is True
            try:
                outcome = clique_from_cneeo(g, ordering, method=method)
            except InvalidOrdering as e:
                if not validate:
                    raise
                logger.warning("%s ordering rejected at position %d", method, e.position)
                outcome, validated = e, False
        else:
            outcome = ordering
    elapsed = (time.perf_counter() - start) * 1000.0

    if isinstance(outcome, CliqueResult) and not outcome.verify(g):
        raise PancakeCliqueError(f"{method} returned a non-clique {outcome.vertices}")
    if isinstance(outcome, CliqueResult):
        logger.info("%s: %s in %.1f ms", method, outcome.size, elapsed)
    else:
        logger.info("%s: no clique (%s) in %.1f ms", method, type(outcome).__name__, elapsed)
    return result_to_dict(outcome, method, elapsed, validated)


def cmd_gen(args) -> int:
    cfg = GenConfig(
        seed=args.seed,
        box=args.box,
        margin=args.margin,
        n_disks=args.n_disks,
        n_pancakes=args.n_pancakes,
        n_family=args.n_family,
        max_rejections=args.max_rejections,
        mode=args.mode,
    )
    inst = gen_pi2(cfg) if args.kind == "pi2" else gen_pseudodisk_triple(cfg)
    write_instance(inst, args.out)
    return EXIT_OK


def cmd_solve(args) -> int:
    doc = solve(read_instance(args.input), args.method, args.validate)
    __emit(doc, args.out)
    return EXIT_FINDING if doc.get("validated") is False else EXIT_OK


def __pseudodisk(path: str) -> Instance:
    inst = read_instance(path)
    if inst.kind != "pseudodisk":
        raise ContractViolation(f"expected a pseudodisk instance, got {inst.kind!r}")
    inst.validate()
    return inst


def cmd_transversal(args) -> int:
    inst = __pseudodisk(args.input)
    report = middle_profile(inst.triple_circles, resolution=args.samples)
    __emit(transversal_report_to_dict(report, inst.triple), args.out)
    return EXIT_OK


def cmd_partition(args) -> int:
    inst = __pseudodisk(args.input)
    family, indices = inst.family, inst.family_indices
    x1, x2 = build_bipartition(inst.triple_circles, family, resolution=args.samples)
    verified = verify_bipartition(family, x1, x2)
    __emit(partition_to_dict([indices[j] for j in x1], [indices[j] for j in x2], verified), args.out)
    return EXIT_OK if verified else EXIT_FINDING


def bench_rows(
    sizes: Sequence[int], seeds: Sequence[int], methods: Sequence[str], progress: bool = False
) -> List[dict]:
    """
    One benchmark row per (size, seed, method) on generated pi2 instances, a third of the
    objects being pancakes. Oracle rows above its cap keep a blank size and are marked skipped.

    :param sizes: object counts
    :param seeds: generator seeds
    :param methods: solver tags
    :param progress: show a progress bar
    :return: rows keyed by the bench columns
    """
    rows = []
    jobs = [(n, s, m) for n in sizes for s in seeds for m in methods]
    instances = {}
    for n, s, m in tqdm.tqdm(jobs, desc="bench", disable=not progress):
        if (n, s) not in instances:
            cfg = GenConfig(seed=s, box=(max(2.0, n / 2.0), 6.0), n_disks=n - n // 3, n_pancakes=n // 3)
            instances[(n, s)] = gen_pi2(cfg)
        row = {"kind": "pi2", "n_objects": n, "seed": s, "method": m, "size": None, "elapsed_ms": None}
        if m == "oracle" and n > ORACLE_CAP:
            row["validated"] = "skipped"
        else:
            doc = solve(instances[(n, s)], m, validate=m in ("geometric", "robust"))
            row["elapsed_ms"] = doc["elapsed_ms"]
            if doc["clique"] is None:
                row["validated"] = "false" if doc.get("validated") is False else "no_cneeo"
            else:
                row["size"] = doc["size"]
                row["validated"] = str(doc.get("validated", True)).lower()
        rows.append(row)
    return rows


def cmd_bench(args) -> int:
    rows = bench_rows(args.sizes, args.seeds, args.methods, progress=args.progress)
    write_bench_csv(rows, args.csv)
    return EXIT_OK


def cmd_verify(args) -> int:
    names = [v.strip() for v in args.suite.split(",") if v.strip()]
    unknown = [n for n in names if n != "all" and n not in SUITES]
    if unknown:
        raise ContractViolation(f"unknown suites {unknown}, expected some of {sorted(SUITES)} or all")
    reports = run_suites(names, instances=args.instances, seed=args.seed, progress=args.progress)
    for report in reports:
        print(report)
        for message in report.failures:
            print(f"  {message}")
    return EXIT_OK if all(r.ok for r in reports) else EXIT_FINDING


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pancake-clique",
        description="Maximum cliques of unit disks and 2-pancakes, and pseudo-disk bipartitions.",
    )
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a random instance")
    p.add_argument("--kind", choices=("pi2", "pseudodisk"), default="pi2")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--n-disks", type=int, default=0)
    p.add_argument("--n-pancakes", type=int, default=0)
    p.add_argument("--n-family", type=int, default=0)
    p.add_argument("--box", type=__box, default=(20.0, 6.0), help="WIDTH,HEIGHT")
    p.add_argument("--margin", type=float, default=1e-6)
    p.add_argument("--max-rejections", type=int, default=10000)
    p.add_argument("--mode", choices=MiddleMode.TAGS, default=None)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("solve", help="compute a maximum clique")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--method", choices=METHODS, default="geometric")
    p.add_argument("--out", default=None)
    p.add_argument("--validate", action="store_true", help="check the ordering used")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("transversal", help="sample line transversals of a pseudodisk triple")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--samples", type=int, default=DEFAULT_RESOLUTION)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_transversal)

    p = sub.add_parser("partition", help="split a pseudodisk family into two cliques")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--samples", type=int, default=DEFAULT_RESOLUTION)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_partition)

    p = sub.add_parser("bench", help="time solvers on generated instances")
    p.add_argument("--sizes", type=__int_list, required=True)
    p.add_argument("--seeds", type=__int_list, required=True)
    p.add_argument("--methods", type=__method_list, default=["geometric", "robust", "oracle"])
    p.add_argument("--csv", required=True)
    p.add_argument("--progress", action="store_true")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--suite", default="all", help=f"comma separated names among {', '.join(SUITES)}, or all")
    p.add_argument("--instances", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--progress", action="store_true")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv: Sequence[str] = None) -> int:
    """
    Command-line entry point.

    :param argv: arguments, ``sys.argv[1:]`` by default
    :return: exit code: 0 success, 2 usage or input error, 3 internal error or limit, 4 verification finding
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_USAGE

    level = {0: logging.WARNING, 1: logging.INFO}.get(args.verbose, logging.DEBUG)
    logging.basicConfig(level=level, format="%(asctime)s %(levelname)s %(name)s: %(message)s")

    try:
        return args.func(args)
    except (InstanceFormatError, ContractViolation) as e:
        print(f"pancake-clique: {__error(e)}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as e:
        print(f"pancake-clique: {e}", file=sys.stderr)
        return EXIT_USAGE
    except Exception as e:
        print(f"pancake-clique: {__error(e)}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
