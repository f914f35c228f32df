"""Command-line front end.

``analyze`` exits 0 for a connected graph, 1 for a disconnected one and 2
on any error, so it can be used directly as a shell predicate.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import __version__, kernels
from .algorithm import run_algorithm_d
from .bench import BENCH_FAMILIES, run_bench, to_csv
from .errors import GraphError
from .generators import FAMILIES, GraphSpec, generate, random_spec
from .io import EMITTERS, FORMATS, ReportDocument, emit_dense, emit_report_json, parse_graph
from .oracle import oracle_components, partition_of

log = logging.getLogger("blockconn")

EXIT_CONNECTED, EXIT_DISCONNECTED, EXIT_ERROR = 0, 1, 2
ORACLES = {"uf": "union_find", "bfs": "breadth_first"}


def _read_input(path: str) -> tuple[str, str | None]:
    if path == "-":
        return sys.stdin.read(), None
    return Path(path).read_text(encoding="utf-8"), path


def _load(args):
    text, name = _read_input(args.input)
    return parse_graph(text, args.format, name=name, symmetrize=args.symmetrize)


def _fmt_set(c) -> str:
    return "{" + ",".join(map(str, c)) + "}"


def _text_report(report) -> str:
    lines = ["connected" if report.is_connected else "disconnected"]
    lines.append(f"vertices: {report.n}, edges: {report.permuted_matrix.edge_count()}")
    lines.append(f"l = {report.cut_count}, r = {report.isolated_count}")
    iso = report.isolated_vertices
    lines.append("isolated vertices: " + (" ".join(map(str, iso)) if iso else "none"))
    noun = "component" if report.num_components == 1 else "components"
    lines.append(f"{report.num_components} {noun}: " + ", ".join(_fmt_set(c) for c in report.components))
    for idx, comp in enumerate(report.components, 1):
        lines.append(f"  component {idx}: order {len(comp)}: " + " ".join(map(str, comp)))
    return "\n".join(lines) + "\n"


def cmd_analyze(args) -> int:
    m = _load(args)
    report = run_algorithm_d(m, backend=args.backend, trace=args.trace)
    if args.output == "json":
        sys.stdout.write(emit_report_json(ReportDocument.from_report(report, input=args.input)))
    else:
        sys.stdout.write(_text_report(report))
        if args.trace:
            for step in report.trace:
                sys.stdout.write(json.dumps(step.as_dict()) + "\n")
    return EXIT_CONNECTED if report.is_connected else EXIT_DISCONNECTED


def cmd_permute(args) -> int:
    m = _load(args)
    report = run_algorithm_d(m, backend=args.backend)
    labels = report.permutation.labels()
    if args.output == "json":
        doc = {
            "n": report.n,
            "label_at": labels,
            "boundaries": list(report.boundaries),
            "permuted_matrix": report.permuted_matrix.tolist(),
        }
        sys.stdout.write(json.dumps(doc, separators=(",", ":")) + "\n")
    else:
        dense = emit_dense(report.permuted_matrix)
        if dense:
            sys.stdout.write(dense + "\n")
        sys.stdout.write("label_at: " + " ".join(map(str, labels)) + "\n")
    return 0


def _verify_one(m, oracle):
    report = run_algorithm_d(m)
    truth = oracle_components(m, oracle)
    return partition_of(report) == truth.partition, report, truth


def cmd_verify(args) -> int:
    oracle = ORACLES[args.oracle]
    if args.fuzz:
        failures = 0
        for seed in range(args.seed, args.seed + args.fuzz):
            spec = random_spec(seed, args.max_n)
            ok, _, _ = _verify_one(generate(spec), oracle)
            if not ok:
                failures += 1
                sys.stdout.write(f"MISMATCH {spec.to_json()}\n")
        sys.stdout.write(f"{args.fuzz - failures}/{args.fuzz} graphs agree with {oracle}\n")
        return 0 if failures == 0 else 1
    if args.input is None:
        raise GraphError("verify needs an input file or --fuzz N")
    ok, report, truth = _verify_one(_load(args), oracle)
    if ok:
        sys.stdout.write(f"ok: {report.num_components} components agree with {oracle}\n")
        return 0
    sys.stdout.write(
        f"MISMATCH: algorithm {sorted(map(sorted, partition_of(report)))} vs "
        f"{oracle} {sorted(map(sorted, truth.partition))}\n"
    )
    return 1


def _spec_from_args(args) -> GraphSpec:
    if args.recipe:
        return GraphSpec.from_json(Path(args.recipe).read_text(encoding="utf-8"))
    if args.family is None:
        raise GraphError("generate needs a family or --recipe")
    sizes = tuple(int(s) for s in args.sizes.split(",")) if args.sizes else None
    return GraphSpec(
        args.family, n=args.n, sizes=sizes, density=args.density, p=args.p,
        seed=args.seed, scramble=not args.no_scramble,
    )


def cmd_generate(args) -> int:
    m = generate(_spec_from_args(args))
    text = EMITTERS[args.to](m)
    if args.out and args.out != "-":
        Path(args.out).write_text(text, encoding="utf-8", newline="\n")
    else:
        sys.stdout.write(text)
    return 0


def cmd_bench(args) -> int:
    sizes = [int(s) for s in args.sizes.split(",")]
    families = args.families.split(",")
    rows = run_bench(sizes, families, seed=args.seed, repeat=args.repeat,
                     oracle=ORACLES[args.oracle], backend=args.backend)
    sys.stdout.write(to_csv(rows))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="blockconn", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--oracle", choices=sorted(ORACLES), default="uf")
    common.add_argument("--backend", choices=["auto", *sorted(kernels.BACKENDS)], default=None)

    graph_in = argparse.ArgumentParser(add_help=False)
    graph_in.add_argument("-f", "--format", choices=["auto", *FORMATS], default="auto")
    graph_in.add_argument("--symmetrize", action="store_true",
                          help="OR the matrix with its transpose before validation")

    p = sub.add_parser("analyze", parents=[common, graph_in], help="decide connectivity and list components")
    p.add_argument("input", help="graph file, or - for stdin")
    p.add_argument("-o", "--output", choices=["text", "json"], default="text")
    p.add_argument("--trace", action="store_true", help="include the step log")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("permute", parents=[common, graph_in], help="print the block-diagonal matrix")
    p.add_argument("input")
    p.add_argument("-o", "--output", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_permute)

    p = sub.add_parser("verify", parents=[common, graph_in], help="compare against an oracle")
    p.add_argument("input", nargs="?")
    p.add_argument("--fuzz", type=int, default=0, metavar="N", help="check N generated graphs instead")
    p.add_argument("--max-n", type=int, default=200)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("generate", parents=[common], help="write a generated graph")
    p.add_argument("family", nargs="?", choices=FAMILIES)
    p.add_argument("--n", type=int)
    p.add_argument("--sizes", help="comma-separated block sizes (planted_components)")
    p.add_argument("--density", type=float, default=0.0)
    p.add_argument("--p", type=float, default=0.0, help="edge probability (erdos_renyi)")
    p.add_argument("--no-scramble", action="store_true")
    p.add_argument("--recipe", help="JSON recipe file")
    p.add_argument("--to", choices=FORMATS, default="edges")
    p.add_argument("--out", help="output path (default stdout)")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("bench", parents=[common], help="time the algorithm against the oracle, CSV out")
    p.add_argument("--sizes", default="100,200,300,400,500")
    p.add_argument("--families", default="dense,sparse,planted",
                   help=f"comma-separated, from {','.join(BENCH_FAMILIES)}")
    p.add_argument("--repeat", type=int, default=3)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code not in (0, None) else 0
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING)
    try:
        return args.func(args)
    except (GraphError, OSError, ValueError) as exc:
        print(f"blockconn: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
