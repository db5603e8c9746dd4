from fractions import Fraction
from itertools import product

import pytest

from maximin_lp import LPProblem, enumerate_vertices
from maximin_lp.errors import TooLarge
from maximin_lp.linalg import null_vector, rank, solve_square
from maximin_lp.oracle import UNBOUNDED


def test_one_dimensional():
    res = enumerate_vertices(LPProblem(c=[1], A=[[2]], b=[3]))
    assert res.vertices == ((0,), (Fraction(3, 2),))
    assert res.optimum == Fraction(3, 2)
    assert res.optimal_vertices == ((Fraction(3, 2),),)


def test_unbounded():
    res = enumerate_vertices(LPProblem(c=[1, 1], A=[[-1, 0]], b=[1]))
    assert res.optimum == UNBOUNDED


def test_unbounded_one_variable():
    assert enumerate_vertices(LPProblem(c=[1], A=[[-1]], b=[1])).optimum == UNBOUNDED
    assert enumerate_vertices(LPProblem(c=[-1], A=[[-1]], b=[1])).optimum == 0


def test_williams(williams):
    res = enumerate_vertices(williams)
    assert res.optimum == Fraction(3, 10)
    assert len(res.optimal_vertices) == 8
    assert len(res.vertices) == 27
    assert list(res.vertices) == sorted(res.vertices)


def test_unit_square_exhaustive():
    res = enumerate_vertices(LPProblem(c=[1, 1], A=[[1, 0], [0, 1]], b=[1, 1]))
    assert set(res.vertices) == set(product((Fraction(0), Fraction(1)), repeat=2))
    assert res.optimal_vertices == ((1, 1),)


def test_guard():
    with pytest.raises(TooLarge):
        enumerate_vertices(LPProblem(c=[1] * 20, A=[[1] * 20] * 5, b=[1] * 5))


def test_linalg_helpers():
    assert solve_square([[2, 1], [1, 3]], [3, 5]) == (Fraction(4, 5), Fraction(7, 5))
    assert solve_square([[1, 2], [2, 4]], [1, 2]) is None
    assert rank([[1, 2, 3], [2, 4, 6], [0, 0, 1]]) == 2
    assert rank([]) == 0
    d = null_vector([[1, 1, 0], [0, 1, 1]], 3)
    assert d is not None and all(sum(a * b for a, b in zip(r, d)) == 0 for r in [[1, 1, 0], [0, 1, 1]])
    assert null_vector([[1, 0], [0, 1]], 2) is None
    assert null_vector([], 1) == (1,)
