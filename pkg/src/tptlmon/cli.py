"""Command-line frontend: ``check``, ``translate-mtl``, ``bench`` and ``gen-trace``.

Exit codes: 0 when the trace satisfies the formula, 1 when it is falsified,
2 on any usage, parse, validation or runtime error. Diagnostics go to
standard error; ``check`` always ends its report with ``RESULT: SAT|UNSAT``.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import bench
from .formula import ParseError, ValidationError, parse, parse_mtl, to_text, translate_mtl
from .formula.indexing import prepare
from .monitor import ENGINES, dump_table, monitor
from .oracle import eval_semantics
from .trace import TraceError, gen_random, load_predicate_map, load_trace, write_csv

EXIT_SAT, EXIT_UNSAT, EXIT_ERROR = 0, 1, 2


class CliError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors already; keep the message on stderr
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def _read_spec(args) -> str:
    if args.spec is not None:
        return args.spec
    try:
        return Path(args.spec_file).read_text(encoding="utf-8")
    except OSError as exc:
        raise CliError(f"cannot read spec file: {exc}") from None


def cmd_check(args) -> int:
    ix = prepare(parse(_read_spec(args)))
    pmap = load_predicate_map(args.map) if args.map else None
    try:
        trace = load_trace(args.trace, args.format, predicate_map=pmap, normalize=args.normalize)
    except OSError as exc:
        raise CliError(f"cannot read trace: {exc}") from None
    verdict = monitor(ix, trace, keep_table=args.table is not None, engine=args.engine)
    s = verdict.stats
    print(f"formula: {ix.formula}")
    print(f"samples: {s.trace_length}")
    print(f"subformulas: {s.n_subformulas}")
    print(f"variables: {s.n_variables}")
    print(f"cell_writes: {s.cell_writes}")
    print(f"wall_time_s: {s.wall_time:.6g}")
    if args.oracle:
        expected = eval_semantics(ix.formula, trace)
        print(f"oracle: {'SAT' if expected else 'UNSAT'}")
        if expected != verdict.satisfied:
            raise CliError(f"monitor verdict {verdict.satisfied} disagrees with oracle {expected}")
    if args.table is not None:
        Path(args.table).write_text(dump_table(verdict), encoding="utf-8")
    print(f"RESULT: {'SAT' if verdict.satisfied else 'UNSAT'}")
    return EXIT_SAT if verdict.satisfied else EXIT_UNSAT


def cmd_translate_mtl(args) -> int:
    print(to_text(translate_mtl(parse_mtl(args.spec))))
    return EXIT_SAT


def cmd_bench(args) -> int:
    if args.all:
        specs = bench.pattern_configurations()
    else:
        if args.group is None or args.ops is None or args.vars is None:
            raise CliError("bench needs --group, --ops and --vars (or --all)")
        specs = [bench.PatternSpec(args.group, args.ops, args.vars)]
    report = bench.run_benchmark(
        specs, args.len, runs=args.runs, seed=args.seed, engine=args.engine, mean_step=args.mean_step
    )
    text = report.to_csv()
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    sys.stdout.write(report.summary())
    return EXIT_SAT


def cmd_gen_trace(args) -> int:
    aps = [a.strip() for a in args.aps.split(",") if a.strip()]
    trace = gen_random(args.len, aps, args.mean_step, args.seed)
    write_csv(trace, args.out if args.out else sys.stdout)
    return EXIT_SAT


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="tptlmon", description="Offline monitoring of encapsulated TPTL.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("check", help="monitor a trace against a formula")
    spec = p.add_mutually_exclusive_group(required=True)
    spec.add_argument("--spec", help="formula text")
    spec.add_argument("--spec-file", help="file holding the formula")
    p.add_argument("--trace", required=True, help="trace file")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--map", help="predicate map turning numeric signals into propositions")
    p.add_argument("--normalize", action="store_true", help="shift timestamps to start at 0")
    p.add_argument("--table", help="write the final monitoring table as JSON here")
    p.add_argument("--oracle", action="store_true", help="cross-check against the reference evaluator")
    p.add_argument("--engine", choices=ENGINES, default=None)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("translate-mtl", help="print the TPTL translation of an MTL formula")
    p.add_argument("--spec", required=True)
    p.set_defaults(func=cmd_translate_mtl)

    p = sub.add_parser("bench", help="time the monitor on EA/UR pattern formulas")
    p.add_argument("--group", type=str.upper, choices=bench.GROUPS)
    p.add_argument("--ops", type=int)
    p.add_argument("--vars", type=int)
    p.add_argument("--all", action="store_true", help="run all 18 pattern configurations")
    p.add_argument("--len", type=int, nargs="+", default=[1000, 2000, 4000])
    p.add_argument("--runs", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--mean-step", type=float, default=1.0)
    p.add_argument("--engine", choices=ENGINES, default=None)
    p.add_argument("--out", help="CSV report path (default: standard output)")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("gen-trace", help="write a random boolean trace as CSV")
    p.add_argument("--len", type=int, required=True)
    p.add_argument("--aps", default="a,b", help="comma-separated proposition names")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--mean-step", type=float, default=1.0)
    p.add_argument("--out", help="output path (default: standard output)")
    p.set_defaults(func=cmd_gen_trace)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (CliError, ParseError, ValidationError, TraceError, ValueError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
