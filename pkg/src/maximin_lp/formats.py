"""Input parsing and report serialization.

Numbers in every format are exact: integers, decimal strings or ``"p/q"``.
JSON reports write every rational as a ``"p/q"`` string so they read back
without loss.
"""

import json
from fractions import Fraction

from .elimination import parse_label
from .errors import InvalidProblem, ParseError
from .game import GameSolution, MatrixGame, Strategy
from .model import LPProblem
from .oracle import UNBOUNDED, OracleResult
from .rational import fmt, to_rational
from .solution import RatioRow, SolveReport, Vertex


def _number(value, where=""):
    try:
        return to_rational(value)
    except (TypeError, ValueError) as exc:
        raise ParseError(f"{where}{exc}") from None


def _load_json(text):
    try:
        # keep JSON decimals as strings so they become exact fractions
        return json.loads(text, parse_float=str)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None


def _tokens(text):
    """Yield ``(line number, [(column, token), ...])`` for non-blank lines."""
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0]
        toks = []
        col = 0
        for tok in line.split():
            col = line.index(tok, col)
            toks.append((col + 1, tok))
            col += len(tok)
        if toks:
            yield lineno, toks


def _row(lineno, toks, expected, what):
    if expected is not None and len(toks) != expected:
        raise ParseError(f"{what} needs {expected} numbers, found {len(toks)}", lineno)
    out = []
    for col, tok in toks:
        try:
            out.append(to_rational(tok))
        except (TypeError, ValueError):
            raise ParseError(f"not an exact number: {tok!r}", lineno, col) from None
    return out


def detect_format(text, path=None):
    if path is not None and str(path).endswith(".json"):
        return "json"
    return "json" if text.lstrip().startswith("{") else "text"


def parse_problem(text, fmt_name=None):
    fmt_name = fmt_name or detect_format(text)
    if fmt_name == "json":
        return _problem_from_json(_load_json(text))
    lines = list(_tokens(text))
    if not lines:
        raise ParseError("empty problem file")
    lineno, head = lines[0]
    if len(head) != 2:
        raise ParseError("first line must be 'n m'", lineno)
    try:
        n, m = int(head[0][1]), int(head[1][1])
    except ValueError:
        raise ParseError("n and m must be integers", lineno) from None
    if len(lines) != m + 3:
        raise ParseError(f"expected {m} rows of A, then b, then c ({m + 3} lines), found {len(lines)}")
    A = [_row(ln, toks, n, f"row {i} of A") for i, (ln, toks) in enumerate(lines[1 : m + 1], 1)]
    b = _row(*lines[m + 1], m, "b")
    c = _row(*lines[m + 2], n, "c")
    return _problem(c, A, b)


def _problem(c, A, b):
    try:
        return LPProblem(c=c, A=A, b=b)
    except InvalidProblem as exc:
        raise ParseError(str(exc)) from None


def _problem_from_json(obj):
    if not isinstance(obj, dict):
        raise ParseError("problem JSON must be an object")
    missing = [k for k in ("c", "A", "b") if k not in obj]
    if missing:
        raise ParseError(f"problem JSON lacks {', '.join(missing)}")
    c = [_number(v, "c: ") for v in obj["c"]]
    A = [[_number(v, f"A[{i}]: ") for v in row] for i, row in enumerate(obj["A"])]
    b = [_number(v, "b: ") for v in obj["b"]]
    p = _problem(c, A, b)
    if "n" in obj and obj["n"] != p.n:
        raise ParseError(f"n = {obj['n']} but c has {p.n} entries")
    if "m" in obj and obj["m"] != p.m:
        raise ParseError(f"m = {obj['m']} but A has {p.m} rows")
    return p


def problem_to_json(p):
    return {
        "n": p.n,
        "m": p.m,
        "c": [fmt(v) for v in p.c],
        "A": [[fmt(v) for v in row] for row in p.A],
        "b": [fmt(v) for v in p.b],
    }


def parse_game(text, fmt_name=None, shift=None):
    fmt_name = fmt_name or detect_format(text)
    if fmt_name == "json":
        obj = _load_json(text)
        if not isinstance(obj, dict) or "payoff" not in obj:
            raise ParseError("game JSON must be an object with a 'payoff' matrix")
        payoff = [[_number(v, f"payoff[{i}]: ") for v in row] for i, row in enumerate(obj["payoff"])]
        file_shift = _number(obj.get("shift", 0), "shift: ")
    else:
        lines = list(_tokens(text))
        if not lines:
            raise ParseError("empty game file")
        width = len(lines[0][1])
        payoff = [_row(ln, toks, width, "payoff row") for ln, toks in lines]
        file_shift = Fraction(0)
    try:
        return MatrixGame(payoff, file_shift if shift is None else to_rational(shift))
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def parse_strategy(text, fmt_name=None):
    """Return ``(y, v)``; ``v`` is None when the file omits it."""
    fmt_name = fmt_name or detect_format(text)
    if fmt_name == "json":
        obj = _load_json(text)
        if not isinstance(obj, dict) or "y" not in obj:
            raise ParseError("strategy JSON must be an object with a 'y' vector")
        y = [_number(v, "y: ") for v in obj["y"]]
        v = _number(obj["v"], "v: ") if obj.get("v") is not None else None
        return y, v
    lines = list(_tokens(text))
    if not lines or len(lines) > 2:
        raise ParseError("strategy text file holds the vector y and optionally a value v")
    y = _row(*lines[0], None, "y")
    v = _row(*lines[1], 1, "v")[0] if len(lines) == 2 else None
    return y, v


def _vertex_to_json(v):
    return {
        "label": str(v.label),
        "labels": [str(lab) for lab in v.labels],
        "x": [fmt(q) for q in v.x],
        "d1": fmt(v.d1),
        "d2": fmt(v.d2),
        "objective": fmt(v.objective),
        "extreme": v.extreme,
    }


def _vertex_from_json(obj, lambda_bar):
    x = tuple(Fraction(q) for q in obj["x"])
    d1, d2 = Fraction(obj["d1"]), Fraction(obj["d2"])
    labels = tuple(parse_label(s) for s in obj["labels"])
    return Vertex(labels, x, d1, d2, d1 / d2 == lambda_bar, obj["extreme"])


def report_to_json(report):
    out = {
        "lambda_bar": fmt(report.lambda_bar),
        "optimal_labels": [str(lab) for lab in report.optimal_labels],
        "optimal_vertices": [_vertex_to_json(v) for v in report.optimal_vertices],
        "level_sizes": list(report.level_sizes),
        "row_order": [i + 1 for i in report.row_order],
        "ratio_table": [
            {
                "label": str(r.label),
                "d1": fmt(r.d1),
                "d2": fmt(r.d2),
                "ratio": None if r.ratio is None else fmt(r.ratio),
            }
            for r in report.ratio_table
        ],
    }
    if report.all_vertices is not None:
        out["all_vertices"] = [_vertex_to_json(v) for v in report.all_vertices]
    return out


def report_from_json(obj):
    lam = Fraction(obj["lambda_bar"])
    every = obj.get("all_vertices")
    return SolveReport(
        lambda_bar=lam,
        optimal_vertices=tuple(_vertex_from_json(v, lam) for v in obj["optimal_vertices"]),
        ratio_table=tuple(
            RatioRow(
                parse_label(r["label"]),
                Fraction(r["d1"]),
                Fraction(r["d2"]),
                None if r["ratio"] is None else Fraction(r["ratio"]),
            )
            for r in obj["ratio_table"]
        ),
        level_sizes=tuple(obj["level_sizes"]),
        all_vertices=None if every is None else tuple(_vertex_from_json(v, lam) for v in every),
        row_order=tuple(i - 1 for i in obj["row_order"]),
    )


def game_to_json(sol):
    return {
        "lp_value": fmt(sol.lp_value),
        "game_value": fmt(sol.game_value),
        "strategies": [
            {"y": [fmt(q) for q in s.y], "labels": [str(lab) for lab in s.labels], "extreme": s.extreme}
            for s in sol.strategies
        ],
        "report": report_to_json(sol.report),
    }


def game_from_json(obj):
    return GameSolution(
        lp_value=Fraction(obj["lp_value"]),
        game_value=Fraction(obj["game_value"]),
        strategies=tuple(
            Strategy(tuple(Fraction(q) for q in s["y"]), tuple(parse_label(t) for t in s["labels"]), s["extreme"])
            for s in obj["strategies"]
        ),
        report=report_from_json(obj["report"]),
    )


def oracle_to_json(res):
    optimum = res.optimum if res.optimum == UNBOUNDED else fmt(res.optimum)
    return {
        "optimum": optimum,
        "vertices": [[fmt(q) for q in x] for x in res.vertices],
        "optimal_vertices": [[fmt(q) for q in x] for x in res.optimal_vertices],
    }


def oracle_from_json(obj):
    optimum = obj["optimum"]
    return OracleResult(
        vertices=tuple(tuple(Fraction(q) for q in x) for x in obj["vertices"]),
        optimum=optimum if optimum == UNBOUNDED else Fraction(optimum),
        optimal_vertices=tuple(tuple(Fraction(q) for q in x) for x in obj["optimal_vertices"]),
    )
