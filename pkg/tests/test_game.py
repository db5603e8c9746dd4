from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from maximin_lp import MatrixGame, game_to_lp, solve_game, verify_strategy
from maximin_lp.errors import NotAProbabilityVector, ValueNotPositive


def F(*vals):
    return tuple(Fraction(v) for v in vals)


def test_game_to_lp_williams(williams_game, williams):
    p = game_to_lp(williams_game)
    assert p == williams
    assert (p.n, p.m) == (6, 3)


def test_game_to_lp_shift():
    p = game_to_lp(MatrixGame([[0, 2], [1, 3]], shift=1))
    assert all(v >= 1 for row in p.A for v in row)
    assert p.A == (F(1, 3), F(2, 4))


def test_one_by_one():
    sol = solve_game(MatrixGame([[2]]))
    assert sol.lp_value == Fraction(1, 2)
    assert sol.game_value == 2
    assert [s.y for s in sol.strategies] == [F(1)]


def strategy_for(sol, label):
    return next(s.y for s in sol.strategies if str(s.labels[0]) == label)


def test_williams_strategies(williams_game):
    sol = solve_game(williams_game)
    assert sol.lp_value == Fraction(3, 10)
    assert sol.game_value == Fraction(10, 3)
    assert len(sol.strategies) == 9
    assert strategy_for(sol, "[[1,2]_2,[2]_2]_3") == F("1/3", "1/3", "1/3", 0, 0, 0)
    assert strategy_for(sol, "[[6,2]_2,[1,4]_2]_3") == F("7/18", "1/9", 0, "7/18", 0, "1/9")


def test_williams_column_nine(williams_game):
    y = strategy_for(solve_game(williams_game), "[[6,4]_2,[1,4]_2]_3")
    assert y == F("1/3", 0, 0, "1/2", 0, "1/6")
    # direct product with the payoff matrix, independent of the solver
    rows = [sum(a * b for a, b in zip(row, y)) for row in williams_game.payoff]
    assert rows == [Fraction(10, 3)] * 3
    printed = F("1/2", 0, 0, "3/8", 0, "1/8")
    assert sum(a * b for a, b in zip(williams_game.payoff[0], printed)) == Fraction(7, 2)


def test_verify_examples(williams_game):
    ok, rows = verify_strategy(williams_game, F("1/3", "1/3", "1/3", 0, 0, 0), Fraction(10, 3))
    assert ok and rows == F("10/3", "10/3", "10/3")
    ok, rows = verify_strategy(williams_game, F(1, 0, 0, 0, 0, 0), Fraction(10, 3))
    assert not ok and rows[2] == 6
    assert verify_strategy(MatrixGame([[2]]), [1], 2)[0]


@pytest.mark.parametrize("y", [[Fraction(1, 2), Fraction(1, 2), 0, 0, 0, Fraction(1, 2)], [2, -1, 0, 0, 0, 0], [1, 0]])
def test_verify_rejects_non_probability(williams_game, y):
    with pytest.raises(NotAProbabilityVector):
        verify_strategy(williams_game, y, 1)


def test_value_not_positive():
    with pytest.raises(ValueNotPositive) as info:
        solve_game(MatrixGame([[-1, -2], [-3, -1]]))
    assert info.value.suggested_shift == 4
    sol = solve_game(MatrixGame([[-1, -2], [-3, -1]], shift=4))
    assert sol.game_value == Fraction(-5, 3)


def test_zero_value_game():
    with pytest.raises(ValueNotPositive):
        solve_game(MatrixGame([[1, -1], [-1, 1]]))
    sol = solve_game(MatrixGame([[1, -1], [-1, 1]], shift=2))
    assert sol.game_value == 0
    assert [s.y for s in sol.strategies] == [F("1/2", "1/2")]


def test_shape_checks():
    with pytest.raises(ValueError):
        MatrixGame([[1, 2], [3]])
    with pytest.raises(ValueError):
        MatrixGame([])


@st.composite
def games(draw):
    r = draw(st.integers(1, 3))
    s = draw(st.integers(1, 4))
    return [[draw(st.integers(1, 6)) for _ in range(s)] for _ in range(r)]


@settings(max_examples=40, deadline=None)
@given(games(), st.integers(0, 5))
def test_strategies_verify_and_shift(payoff, t):
    g = MatrixGame(payoff)
    sol = solve_game(g)
    for s in sol.strategies:
        assert all(p >= 0 for p in s.y) and sum(s.y) == 1
        assert verify_strategy(g, s.y, sol.game_value)[0]
    for v in sol.report.optimal_vertices:
        assert sum(v.x) == sol.lp_value
    shifted = solve_game(MatrixGame([[a - t for a in row] for row in payoff], shift=t))
    assert shifted.strategies == sol.strategies
    assert shifted.lp_value == sol.lp_value
    assert shifted.game_value == sol.game_value - t
