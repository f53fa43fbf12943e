"""Command-line interface.

Exit codes: 0 for a terminating verdict (or plain success), 1 for a definite
non-terminating verdict (never an error) or an out-of-fuel run, 2 for input
errors.  Reports are JSON on stdout and byte-stable for identical inputs.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import fixtures, jsonio
from .colorings import EPColoring, PairColoring, star_search
from .extract import Mode, extract_description
from .graphs import check_sct_criterion, closure, decide_periodic_descent
from .interp import OutOfFuel, eval_program
from .oracle import bounded_lasso_oracle
from .parser import SourceError, parse_program
from .reduction import build_reversal_multipath, index_sets, spp_reduction_family
from .synth import SynthesisError, synthesize
from .syntax import format_program


class _InputError(Exception):
    pass


def _read_program(path: str):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise _InputError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return parse_program(text)
    except SourceError as exc:
        raise _InputError(f"{path}: {exc}") from None


def _read_graphs(path: str):
    try:
        return jsonio.load_graph_set_file(path)
    except OSError as exc:
        raise _InputError(f"cannot read {path}: {exc.strerror}") from None
    except jsonio.SchemaError as exc:
        raise _InputError(f"{path}: {exc}") from None


def _emit(data: dict, out: str | None = None) -> None:
    text = jsonio.dumps(data)
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def _cmd_analyze(args) -> int:
    program = _read_program(args.file)
    description = extract_description(program, Mode(args.mode))
    gs = description.to_graph_set()
    report: dict = {"mode": args.mode}
    if not gs.graphs:
        report.update({"sct": True, "closure_size": 0})
        report["description"] = jsonio.graph_set_to_json(gs)
        _emit(report)
        return 0
    cl = closure(gs)
    verdict = check_sct_criterion(gs, cl)
    report.update(jsonio.verdict_to_json(verdict, gs))
    report["closure_size"] = len(cl)
    report["description"] = jsonio.graph_set_to_json(gs)
    if not verdict.sct:
        report["counterexample"] = {
            "failing_idempotent": report.pop("failing_idempotent"),
            "lasso": report.pop("lasso"),
        }
    _emit(report)
    return 0 if verdict.sct else 1


def _cmd_extract(args) -> int:
    program = _read_program(args.file)
    description = extract_description(program, Mode(args.mode))
    _emit(jsonio.graph_set_to_json(description.to_graph_set()), args.output)
    return 0


def _cmd_synth(args) -> int:
    gs = _read_graphs(args.file)
    try:
        program = synthesize(gs)
    except SynthesisError as exc:
        raise _InputError(str(exc)) from None
    text = format_program(program)
    if args.output is None:
        sys.stdout.write(text)
    else:
        Path(args.output).write_text(text, encoding="utf-8")
    return 0


def _cmd_run(args) -> int:
    program = _read_program(args.file)
    try:
        sig = program.sig_named(args.fun)
    except KeyError:
        raise _InputError(f"no function named {args.fun!r}") from None
    if len(args.args) != sig.arity:
        raise _InputError(f"{args.fun} takes {sig.arity} argument(s)")
    report = {"function": args.fun, "args": args.args, "fuel": args.fuel}
    try:
        value = eval_program(program, args.fun, tuple(args.args), args.fuel)
    except OutOfFuel:
        report["out_of_fuel"] = True
        _emit(report)
        return 1
    report["value"] = value
    _emit(report)
    return 0


def _cmd_oracle(args) -> int:
    gs = _read_graphs(args.file)
    report = bounded_lasso_oracle(gs, args.max_word_len)
    out = jsonio.oracle_report_to_json(report, gs)
    if args.compare:
        verdict = check_sct_criterion(gs)
        agrees = verdict.sct == (report.counterexample is None)
        out["criterion_agrees"] = agrees
        if not agrees:
            _emit(out)
            print("error: oracle and criterion disagree", file=sys.stderr)
            return 2
    _emit(out)
    return 1 if report.refuted else 0


def _cmd_graphs_check(args) -> int:
    gs = _read_graphs(args.file)
    if not gs.graphs:
        _emit({"sct": True, "closure_size": 0})
        return 0
    cl = closure(gs)
    verdict = check_sct_criterion(gs, cl)
    out = jsonio.verdict_to_json(verdict, gs)
    out["closure_size"] = len(cl)
    if args.oracle is not None:
        report = bounded_lasso_oracle(gs, args.oracle)
        agrees = verdict.sct == (report.counterexample is None)
        out["oracle"] = jsonio.oracle_report_to_json(report, gs)
        out["oracle"]["agrees"] = agrees
        if not agrees:
            _emit(out)
            print("error: oracle and criterion disagree", file=sys.stderr)
            return 2
    _emit(out)
    return 0 if verdict.sct else 1


def _parse_colors(text: str, what: str) -> tuple[int, ...]:
    if not text:
        return ()
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise _InputError(f"{what} must be a comma-separated list of colors") from None


def _cmd_principles(args) -> int:
    if args.principle == "spp-family":
        gs = spp_reduction_family(args.k)
        _emit(jsonio.graph_set_to_json(gs), args.output)
        return 0
    if args.principle == "reversal":
        coloring = EPColoring(
            args.k, _parse_colors(args.prefix, "--prefix"), _parse_colors(args.period, "--period")
        )
        run = build_reversal_multipath(coloring)
        witness = decide_periodic_descent(run.lasso, run.graphs)
        sets = index_sets(args.k)
        _emit(
            {
                "k": args.k,
                "prefix": list(coloring.prefix),
                "period": list(coloring.period),
                "recurring_colors": sorted(set(coloring.period)),
                "cycle": {
                    "prefix_len": len(run.lasso.prefix),
                    "period_len": len(run.lasso.period),
                    "distinct_graphs": len(run.graphs),
                },
                "descent": {
                    "param": sets[witness.param].param_name(),
                    "start": witness.start,
                    "block_len": witness.block_len,
                },
            }
        )
        return 0
    if args.principle == "star":
        if args.pattern == "parity":
            coloring = PairColoring.from_function(args.k, args.n, lambda i, j: (j - i) % args.k)
        elif args.pattern == "constant":
            coloring = PairColoring.from_function(args.k, args.n, lambda i, j: 0)
        else:
            if args.file is None:
                raise _InputError("--pattern file needs --file")
            import json

            try:
                data = json.loads(Path(args.file).read_text(encoding="utf-8"))
                rows = data["rows"]
                coloring = PairColoring.from_function(
                    data["k"], data["n"], lambda i, j: rows[i][j - i - 1]
                )
            except (OSError, KeyError, IndexError, TypeError, ValueError) as exc:
                raise _InputError(f"bad pair-coloring file: {exc}") from None
        witness = star_search(coloring, args.min_triangles)
        if witness is None:
            _emit({"found": False, "min_triangles": args.min_triangles})
            return 1
        _emit(
            {
                "found": True,
                "center": witness.center,
                "color": witness.color,
                "triangles": len(witness.pairs),
                "pairs": [list(p) for p in witness.pairs],
            }
        )
        return 0
    raise _InputError(f"unknown principle {args.principle!r}")


def _cmd_fixtures(args) -> int:
    directory = Path(args.output)
    directory.mkdir(parents=True, exist_ok=True)
    written = []
    for name, content in fixtures.fixture_files().items():
        path = directory / name
        path.write_text(content, encoding="utf-8")
        written.append(str(path))
    _emit({"written": written})
    return 0


def build_arg_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sct", description="size-change termination analyzer")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="parse, extract, and run the termination criterion")
    p.add_argument("file")
    p.add_argument("--mode", choices=["guarded", "syntactic"], default="guarded")
    p.set_defaults(fn=_cmd_analyze)

    p = sub.add_parser("extract", help="write the extracted description as graph-set JSON")
    p.add_argument("file")
    p.add_argument("--mode", choices=["guarded", "syntactic"], default="guarded")
    p.add_argument("-o", "--output")
    p.set_defaults(fn=_cmd_extract)

    p = sub.add_parser("synth", help="compile a graph set into a program")
    p.add_argument("file")
    p.add_argument("-o", "--output")
    p.set_defaults(fn=_cmd_synth)

    p = sub.add_parser("run", help="evaluate a function on natural-number arguments")
    p.add_argument("file")
    p.add_argument("fun")
    p.add_argument("args", nargs="*", type=int)
    p.add_argument("--fuel", type=int, default=10**6)
    p.set_defaults(fn=_cmd_run)

    p = sub.add_parser("oracle", help="bounded cyclic-word counterexample search")
    p.add_argument("file")
    p.add_argument("--max-word-len", type=int, required=True)
    p.add_argument("--compare", action="store_true", help="also run the criterion and check agreement")
    p.set_defaults(fn=_cmd_oracle)

    p = sub.add_parser("graphs", help="operate on graph-set JSON files")
    gsub = p.add_subparsers(dest="graphs_command", required=True)
    g = gsub.add_parser("check", help="run the termination criterion on a graph set")
    g.add_argument("file")
    g.add_argument("--oracle", type=int, metavar="L", help="cross-check with the bounded oracle")
    g.set_defaults(fn=_cmd_graphs_check)

    p = sub.add_parser("principles", help="combinatorial constructions")
    psub = p.add_subparsers(dest="principle", required=True)
    f = psub.add_parser("spp-family", help="materialize the reduction graph family")
    f.add_argument("--k", type=int, required=True)
    f.add_argument("-o", "--output")
    r = psub.add_parser("reversal", help="descent from an eventually periodic coloring")
    r.add_argument("--k", type=int, required=True)
    r.add_argument("--period", required=True, help="comma-separated colors")
    r.add_argument("--prefix", default="", help="comma-separated colors")
    s = psub.add_parser("star", help="search for an anchored monochromatic triangle pattern")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--k", type=int, default=2)
    s.add_argument("--pattern", choices=["parity", "constant", "file"], default="parity")
    s.add_argument("--file")
    s.add_argument("--min-triangles", type=int, default=1)
    for q in (f, r, s):
        q.set_defaults(fn=_cmd_principles)

    p = sub.add_parser("fixtures", help="write the bundled example files")
    p.add_argument("-o", "--output", default="fixtures")
    p.set_defaults(fn=_cmd_fixtures)

    return parser


def main(argv=None) -> int:
    parser = build_arg_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except _InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
