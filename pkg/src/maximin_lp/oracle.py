"""Brute-force reference: every basic feasible solution by subset enumeration.

Shares nothing with the elimination pipeline beyond the problem type. Each
n-subset of the n+m constraints is solved as a square system; feasible
solutions are the vertices. Unboundedness is decided on the recession cone
``{r >= 0, A r <= 0}``, whose extreme rays come from (n-1)-subsets.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .errors import TooLarge
from .linalg import null_vector, solve_square

MAX_CONSTRAINTS = 24
UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class OracleResult:
    vertices: tuple  # lexicographically sorted coordinate tuples
    optimum: object  # Fraction or UNBOUNDED
    optimal_vertices: tuple


def _constraints(p):
    rows = [tuple(Fraction(int(k == j)) for k in range(p.n)) for j in range(p.n)]
    rhs = [Fraction(0)] * p.n
    rows += list(p.A)
    rhs += list(p.b)
    return rows, rhs


def _feasible(p, x):
    return all(v >= 0 for v in x) and all(
        sum(a * v for a, v in zip(row, x)) <= bl for row, bl in zip(p.A, p.b)
    )


def _is_recession(p, r):
    return all(v >= 0 for v in r) and all(sum(a * v for a, v in zip(row, r)) <= 0 for row in p.A)


def enumerate_vertices(p):
    if p.n + p.m > MAX_CONSTRAINTS:
        raise TooLarge(f"oracle limited to n + m <= {MAX_CONSTRAINTS}, got {p.n + p.m}")
    rows, rhs = _constraints(p)
    found = set()
    for subset in combinations(range(len(rows)), p.n):
        x = solve_square([rows[i] for i in subset], [rhs[i] for i in subset])
        if x is not None and _feasible(p, x):
            found.add(x)
    vertices = tuple(sorted(found))

    for subset in combinations(range(len(rows)), p.n - 1):
        d = null_vector([rows[i] for i in subset], p.n)
        if d is None:
            continue
        for r in (d, tuple(-v for v in d)):
            if _is_recession(p, r) and p.objective(r) > 0:
                return OracleResult(vertices, UNBOUNDED, ())

    best = max(p.objective(x) for x in vertices)
    optimal = tuple(x for x in vertices if p.objective(x) == best)
    return OracleResult(vertices, best, optimal)
