"""Zero-sum matrix games through the LP ``max sum(x) s.t. (payoff + shift) x <= 1``.

Rows are the first player's pure strategies. An optimal LP point ``x`` gives
the column player's strategy ``x / sum(x)``; the LP value ``lambda_bar`` is
the reciprocal of the shifted game value.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import NotAProbabilityVector, UnboundedProblem, ValueNotPositive
from .elimination import DEFAULT_MAX_ELEMENTS
from .model import LPProblem
from .rational import dot, to_rational
from .solution import solve


@dataclass(frozen=True)
class MatrixGame:
    payoff: tuple
    shift: Fraction = Fraction(0)

    def __post_init__(self):
        payoff = tuple(tuple(to_rational(v) for v in row) for row in self.payoff)
        if not payoff or not payoff[0]:
            raise ValueError("payoff matrix must be at least 1x1")
        if any(len(row) != len(payoff[0]) for row in payoff):
            raise ValueError("payoff rows have different lengths")
        object.__setattr__(self, "payoff", payoff)
        object.__setattr__(self, "shift", to_rational(self.shift))

    @property
    def shape(self):
        return len(self.payoff), len(self.payoff[0])


@dataclass(frozen=True)
class Strategy:
    y: tuple
    labels: tuple
    extreme: bool


@dataclass(frozen=True)
class GameSolution:
    lp_value: Fraction
    game_value: Fraction
    strategies: tuple
    report: object


def game_to_lp(g):
    r, s = g.shape
    A = tuple(tuple(v + g.shift for v in row) for row in g.payoff)
    return LPProblem(c=(1,) * s, A=A, b=(1,) * r)


def _suggested_shift(g):
    low = min(min(row) for row in g.payoff)
    return max(Fraction(1) - low, Fraction(1))


def solve_game(g, max_elements=DEFAULT_MAX_ELEMENTS):
    try:
        report = solve(game_to_lp(g), max_elements=max_elements)
    except UnboundedProblem:
        raise ValueNotPositive("unbounded", _suggested_shift(g)) from None
    lam = report.lambda_bar
    if lam <= 0:
        raise ValueNotPositive(lam, _suggested_shift(g))
    strategies = []
    seen = set()
    for v in report.optimal_vertices:
        total = sum(v.x)
        y = tuple(xj / total for xj in v.x)
        if y in seen:
            continue
        seen.add(y)
        strategies.append(Strategy(y, v.labels, v.extreme))
    return GameSolution(lam, 1 / lam - g.shift, tuple(strategies), report)


def verify_strategy(g, y, v):
    """Check that the column strategy ``y`` holds every row to at most ``v``.

    ``v`` is on the scale of the shifted payoff. Returns ``(ok, row_values)``
    where ``ok`` means ``max(row_values) == v``.
    """
    y = tuple(to_rational(p) for p in y)
    if len(y) != g.shape[1]:
        raise NotAProbabilityVector(f"strategy has {len(y)} entries, game has {g.shape[1]} columns")
    if any(p < 0 for p in y) or sum(y) != 1:
        raise NotAProbabilityVector("strategy must be nonnegative and sum to 1")
    rows = tuple(dot([a + g.shift for a in row], y) for row in g.payoff)
    return max(rows) == to_rational(v), rows
