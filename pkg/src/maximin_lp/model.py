"""Problem statement and the reduced data the elimination runs on.

The LP is ``maximize c.x subject to x >= 0, A x <= b`` with ``b >= 0``.
Constraint 1 becomes a normalization: every remaining constraint ``l`` is
rewritten as a homogeneous function on ``{1, ..., n+1}``, the last slot
standing for the slack of constraint 1.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import AllRhsZero, InvalidProblem, NegativeRhs
from .rational import to_rational


@dataclass(frozen=True)
class LPProblem:
    c: tuple
    A: tuple
    b: tuple
    # row_order[i] is the original index of canonical row i
    row_order: tuple = field(default=None, compare=False)

    def __post_init__(self):
        c = tuple(to_rational(v) for v in self.c)
        A = tuple(tuple(to_rational(v) for v in row) for row in self.A)
        b = tuple(to_rational(v) for v in self.b)
        if not c:
            raise InvalidProblem("n must be at least 1")
        if not A:
            raise InvalidProblem("m must be at least 1")
        if len(b) != len(A):
            raise InvalidProblem(f"A has {len(A)} rows but b has {len(b)} entries")
        for i, row in enumerate(A, 1):
            if len(row) != len(c):
                raise InvalidProblem(f"row {i} of A has {len(row)} entries, expected {len(c)}")
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "b", b)
        if self.row_order is None:
            object.__setattr__(self, "row_order", tuple(range(len(A))))

    @property
    def n(self):
        return len(self.c)

    @property
    def m(self):
        return len(self.A)

    def is_feasible(self, x):
        if len(x) != self.n or any(v < 0 for v in x):
            return False
        return all(
            sum((a * v for a, v in zip(row, x)), Fraction(0)) <= bl
            for row, bl in zip(self.A, self.b)
        )

    def objective(self, x):
        return sum((a * v for a, v in zip(self.c, x)), Fraction(0))


@dataclass(frozen=True)
class ReducedData:
    fs: tuple  # m-1 homogeneous constraint functions on {1..n+1}
    e1: tuple  # objective
    e2: tuple  # normalization (constraint 1 plus its slack, over b_1)

    @property
    def size(self):
        return len(self.e1)


def canonicalize_problem(raw):
    """Return an equivalent problem whose first right-hand side is positive.

    When ``b_1 = 0`` the first row is swapped with the lowest-index row having
    ``b_l > 0``; the permutation is kept in ``row_order``.
    """
    for i, bl in enumerate(raw.b, 1):
        if bl < 0:
            raise NegativeRhs(f"b_{i} = {bl} is negative; right-hand sides must be >= 0")
    if raw.b[0] > 0:
        return raw
    pivot = next((i for i, bl in enumerate(raw.b) if bl > 0), None)
    if pivot is None:
        raise AllRhsZero()
    order = list(raw.row_order)
    A, b = list(raw.A), list(raw.b)
    for seq in (order, A, b):
        seq[0], seq[pivot] = seq[pivot], seq[0]
    return LPProblem(raw.c, tuple(A), tuple(b), row_order=tuple(order))


def build_reduced_data(p):
    if p.b[0] <= 0:
        raise InvalidProblem("problem must be canonicalized (b_1 > 0) first")
    a1, b1 = p.A[0], p.b[0]
    fs = []
    for row, bl in zip(p.A[1:], p.b[1:]):
        ratio = bl / b1
        fs.append(tuple(ak - ratio * a1k for ak, a1k in zip(row, a1)) + (-ratio,))
    e1 = p.c + (Fraction(0),)
    e2 = tuple(v / b1 for v in a1) + (1 / b1,)
    return ReducedData(tuple(fs), e1, e2)
