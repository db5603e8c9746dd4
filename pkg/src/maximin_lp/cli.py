"""Command-line front end.

Exit status: 0 success, 1 user error, 2 internal invariant breach,
3 resource guard.
"""

import argparse
import datetime
import json
import os
import sys

from . import __version__, tables
from .elimination import DEFAULT_MAX_ELEMENTS
from .errors import InternalError, ResourceError, UserError
from .formats import (
    game_to_json,
    oracle_to_json,
    parse_game,
    parse_problem,
    parse_strategy,
    report_to_json,
)
from .game import game_to_lp, solve_game, verify_strategy
from .oracle import UNBOUNDED, enumerate_vertices
from .rational import fmt, to_rational
from .solution import solve

EXIT_OK, EXIT_USER, EXIT_INTERNAL, EXIT_RESOURCE = 0, 1, 2, 3


def _rational_arg(text):
    try:
        return to_rational(text)
    except (TypeError, ValueError):
        raise argparse.ArgumentTypeError(f"not an exact number: {text!r}") from None


def build_parser():
    parser = argparse.ArgumentParser(
        prog="maximin-lp",
        description="Exact LP solving by iterated index pairing: maximin value and every optimal vertex.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("input", help="problem file ('-' for stdin)")
        p.add_argument("--format", choices=("json", "text"), help="input format (default: detect)")
        p.add_argument("--output", "-o", help="write the report here instead of stdout")
        p.add_argument("--json", action="store_true", help="emit a JSON report")
        p.add_argument("--decimal", action="store_true", help="show decimal approximations in text output")
        p.add_argument("--meta", action="store_true", help="add version and timestamp to JSON output")

    def pipeline(p):
        p.add_argument("--oracle-check", action="store_true", help="cross-check against basis enumeration")
        p.add_argument("--trace-levels", action="store_true", help="append per-level tables")
        p.add_argument("--max-elements", type=int, help="cap on elements per level")

    p = sub.add_parser("solve", help="maximin value and optimal vertices")
    common(p)
    pipeline(p)
    p.add_argument("--all-vertices", action="store_true", help="also list every vertex")

    p = sub.add_parser("vertices", help="every distinct point of the final level")
    common(p)
    pipeline(p)

    p = sub.add_parser("game", help="optimal column strategies of a zero-sum game")
    common(p)
    pipeline(p)
    p.add_argument("--shift", type=_rational_arg, help="constant added to every payoff")

    p = sub.add_parser("verify", help="check a column strategy against a game value")
    common(p)
    p.add_argument("strategy", help="strategy file: vector y and optionally the value v")
    p.add_argument("--shift", type=_rational_arg, help="constant added to every payoff")
    return parser


def _read(path):
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _max_elements(args):
    if getattr(args, "max_elements", None) is not None:
        return args.max_elements
    env = os.environ.get("OMEGA_MAX_ELEMENTS")
    return int(env) if env else DEFAULT_MAX_ELEMENTS


def oracle_agreement(problem, report):
    """Compare a report against basis enumeration; returns (ok, JSON section)."""
    res = enumerate_vertices(problem)
    section = oracle_to_json(res)
    if res.optimum == UNBOUNDED:
        section["agree"] = False
        return False, section
    pipeline_opt = {v.x for v in report.extreme_optimal_vertices}
    lam_ok = res.optimum == report.lambda_bar
    set_ok = pipeline_opt == set(res.optimal_vertices)
    oracle_set = set(res.vertices)
    nonextreme = [v for v in report.optimal_vertices if not v.extreme]
    section.update(
        agree=lam_ok and set_ok,
        lambda_agree=lam_ok,
        optimal_set_agree=set_ok,
        nonextreme_optimal_points=[[fmt(q) for q in v.x] for v in nonextreme],
    )
    if report.all_vertices is not None:
        pts = {v.x for v in report.all_vertices}
        section["vertices_covered"] = oracle_set <= pts
        section["extreme_points_agree"] = {v.x for v in report.all_vertices if v.extreme} == oracle_set
    return section["agree"], section


def _trace(report, decimal):
    elim = report.elimination
    parts = []
    for k, state in enumerate(elim.states):
        parts.append(f"level {state.level} ({len(state)} elements)")
        parts.append(tables.level_table(state, decimal))
        if k >= 1:
            parts.append(tables.rho_table(state.level, elim.rho[k - 1]))
    return "\n".join(parts)


def _trace_json(report):
    elim = report.elimination
    out = []
    for k, state in enumerate(elim.states):
        entry = {
            "level": state.level,
            "labels": [str(e.label) for e in state.elements],
            "d1": [fmt(e.d1) for e in state.elements],
            "d2": [fmt(e.d2) for e in state.elements],
        }
        if state.pending:
            entry["g"] = [fmt(e.g) for e in state.elements]
        if k >= 1:
            entry["rho"] = [[str(a), str(b)] for a, b in elim.rho[k - 1]]
        out.append(entry)
    return out


def _solve_text(report, args, all_points):
    lines = [f"lambda_bar = {fmt(report.lambda_bar)}"]
    lines.append("level sizes: " + " ".join(str(s) for s in report.level_sizes))
    if report.row_order != tuple(range(len(report.row_order))):
        lines.append("constraint order used: " + " ".join(str(i + 1) for i in report.row_order))
    opt = report.optimal_vertices
    n_ext = sum(v.extreme for v in opt)
    lines.append(f"optimal labels: {len(report.optimal_labels)}")
    lines.append(f"optimal points: {len(opt)} ({n_ext} vertices, {len(opt) - n_ext} non-extreme)")
    lines.append(tables.vertex_table(opt, args.decimal))
    if all_points and report.all_vertices is not None:
        pts = report.all_vertices
        n_ext = sum(v.extreme for v in pts)
        lines.append(f"all points: {len(pts)} ({n_ext} vertices)")
        lines.append(tables.vertex_table(pts, args.decimal))
    return lines


def _oracle_text(section):
    if section["optimum"] == UNBOUNDED:
        return ["oracle: objective unbounded"]
    lines = [
        f"oracle: {len(section['vertices'])} vertices, optimum {section['optimum']}, "
        f"{len(section['optimal_vertices'])} optimal vertices",
        f"oracle agreement: {'OK' if section['agree'] else 'MISMATCH'}",
    ]
    if section["nonextreme_optimal_points"]:
        lines.append(f"  non-extreme optimal points from the pipeline: {len(section['nonextreme_optimal_points'])}")
    if "extreme_points_agree" in section:
        lines.append(f"  vertex sets agree: {'OK' if section['extreme_points_agree'] else 'MISMATCH'}")
    return lines


def run(args):
    """Execute a parsed command; returns ``(exit status, text)``."""
    text = _read(args.input)
    doc = {}
    lines = []
    status = EXIT_OK

    if args.command in ("solve", "vertices"):
        problem = parse_problem(text, args.format)
        want_all = args.command == "vertices" or args.all_vertices
        report = solve(problem, want_all=want_all, max_elements=_max_elements(args))
        doc = report_to_json(report)
        lines = _solve_text(report, args, want_all)
        if args.oracle_check:
            ok, section = oracle_agreement(problem, report)
            doc["oracle"] = section
            lines += _oracle_text(section)
            status = EXIT_OK if ok else EXIT_INTERNAL
        if args.trace_levels:
            doc["trace"] = _trace_json(report)
            lines.append(_trace(report, args.decimal))

    elif args.command == "game":
        game = parse_game(text, args.format, args.shift)
        sol = solve_game(game, max_elements=_max_elements(args))
        doc = game_to_json(sol)
        n_ext = sum(s.extreme for s in sol.strategies)
        lines = [
            f"lp value (lambda_bar) = {fmt(sol.lp_value)}",
            f"game value = {fmt(sol.game_value)}",
            f"optimal column strategies: {len(sol.strategies)} ({n_ext} from vertices)",
            tables.strategy_table(sol.strategies, args.decimal),
        ]
        bad = [i for i, s in enumerate(sol.strategies, 1) if not verify_strategy(game, s.y, sol.game_value + game.shift)[0]]
        if bad:
            lines.append(f"strategies {bad} fail verification")
            status = EXIT_INTERNAL
        if args.oracle_check:
            ok, section = oracle_agreement(game_to_lp(game), sol.report)
            doc["oracle"] = section
            lines += _oracle_text(section)
            if not ok:
                status = EXIT_INTERNAL
        if args.trace_levels:
            doc["trace"] = _trace_json(sol.report)
            lines.append(_trace(sol.report, args.decimal))

    elif args.command == "verify":
        game = parse_game(text, args.format, args.shift)
        y, v = parse_strategy(_read(args.strategy))
        if v is None:
            v = solve_game(game).game_value + game.shift
        ok, rows = verify_strategy(game, y, v)
        doc = {"optimal": ok, "value": fmt(v), "row_values": [fmt(r) for r in rows],
               "slacks": [fmt(v - r) for r in rows]}
        lines = [f"value = {fmt(v)}", "row values: " + " ".join(fmt(r) for r in rows),
                 "optimal: " + ("yes" if ok else "no")]
        if not ok:
            status = EXIT_USER

    if args.json:
        if args.meta:
            doc["meta"] = {"version": __version__, "created": datetime.datetime.now(datetime.timezone.utc).isoformat()}
        out = json.dumps(doc, indent=2) + "\n"
    else:
        out = "\n".join(lines) + "\n"
    return status, out


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        status, out = run(args)
    except UserError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USER
    except InternalError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except ResourceError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USER
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)
    return status


if __name__ == "__main__":
    sys.exit(main())
