"""Plain-text tables laid out like the worked example's tables."""

from .rational import fmt, fmt_decimal


def _cell(q, decimal):
    if q is None:
        return "-"
    return fmt_decimal(q) if decimal else fmt(q)


def _grid(rows):
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    return "\n".join("  ".join(c.rjust(w) for c, w in zip(r, widths)).rstrip() for r in rows)


def level_table(state, decimal=False):
    """Transposed table: one column per element, rows g, G e1, G e2."""
    k = state.level - 1
    header = [f"w_{state.level}"] + [str(e.label) for e in state.elements]
    rows = [header]
    if state.pending:
        rows.append([f"g^{state.level}"] + [_cell(e.g, decimal) for e in state.elements])
    rows.append([f"G({k})e1"] + [_cell(e.d1, decimal) for e in state.elements])
    rows.append([f"G({k})e2"] + [_cell(e.d2, decimal) for e in state.elements])
    return _grid(rows)


def rho_table(level, rho):
    rows = [[f"w_{level}"] + [str(new) for new, _ in rho], [f"rho_{level - 1}"] + [str(old) for _, old in rho]]
    return _grid(rows)


def ratio_table(rows, decimal=False):
    out = [["#", "label", "d1", "d2", "d1/d2"]]
    for i, r in enumerate(rows, 1):
        out.append([str(i), str(r.label), _cell(r.d1, decimal), _cell(r.d2, decimal), _cell(r.ratio, decimal)])
    return _grid(out)


def vertex_table(vertices, decimal=False):
    out = [["#", "label", "d1", "d2", "d1/d2", "extreme", "x"]]
    for i, v in enumerate(vertices, 1):
        label = str(v.label) + (f" (+{len(v.labels) - 1})" if len(v.labels) > 1 else "")
        x = "(" + ", ".join(_cell(q, decimal) for q in v.x) + ")"
        out.append(
            [str(i), label, _cell(v.d1, decimal), _cell(v.d2, decimal), _cell(v.objective, decimal),
             "yes" if v.extreme else "no", x]
        )
    return _grid(out)


def strategy_table(strategies, decimal=False):
    """One column per strategy, one row per pure strategy of the column player."""
    if not strategies:
        return "(no strategies)"
    rows = [["j"] + [str(i) for i in range(1, len(strategies) + 1)]]
    for j in range(len(strategies[0].y)):
        rows.append([str(j + 1)] + [_cell(s.y[j], decimal) for s in strategies])
    return _grid(rows)
