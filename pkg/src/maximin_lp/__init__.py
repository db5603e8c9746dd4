"""Exact linear programming by iterated index pairing.

Solves ``maximize c.x subject to x >= 0, A x <= b`` (``b >= 0``) in rational
arithmetic, returning the maximin value and every optimal point generated by
the elimination, plus a zero-sum matrix game adapter and a brute-force
vertex-enumeration oracle.
"""

__version__ = "0.1.0"

from .elimination import (
    Elimination,
    Kept,
    LevelElement,
    LevelState,
    Pair,
    advance,
    initial_state,
    ordered_pairs,
    parse_label,
    render,
    run_elimination,
    sign_partition,
)
from .errors import *  # noqa: F401,F403
from .game import GameSolution, MatrixGame, game_to_lp, solve_game, verify_strategy
from .model import LPProblem, ReducedData, build_reduced_data, canonicalize_problem
from .oracle import OracleResult, enumerate_vertices
from .rational import Rational, fmt, to_rational
from .solution import (
    SolveReport,
    Vertex,
    collect_vertices,
    maximin,
    ratio_table,
    solve,
    vertex_coordinates,
)
