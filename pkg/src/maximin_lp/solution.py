"""Maximin value, vertex coordinates and the optimal vertex set.

Every final element with ``d2 > 0`` is a feasible point: its kernel row
restricted to the first ``n`` slots, divided once by ``d2``. Because no
adjacency test runs between levels, some of those points are not vertices;
each emitted point therefore carries an exact ``extreme`` flag (``n``
linearly independent tight constraints).
"""

from dataclasses import dataclass, field
from fractions import Fraction

from .elimination import DEFAULT_MAX_ELEMENTS, run_elimination
from .errors import DivisionByZeroD2, InfeasibleVertexBug, NoPositiveD2, UnboundedProblem
from .linalg import rank
from .model import build_reduced_data, canonicalize_problem
from .rational import dot


@dataclass(frozen=True)
class RatioRow:
    label: object
    d1: Fraction
    d2: Fraction
    ratio: Fraction = None


@dataclass(frozen=True)
class Vertex:
    labels: tuple  # every final element landing on these coordinates, in j order
    x: tuple
    d1: Fraction
    d2: Fraction
    optimal: bool
    extreme: bool

    @property
    def label(self):
        return self.labels[0]

    @property
    def objective(self):
        return self.d1 / self.d2


@dataclass(frozen=True)
class SolveReport:
    lambda_bar: Fraction
    optimal_vertices: tuple
    ratio_table: tuple
    level_sizes: tuple
    all_vertices: tuple = None
    row_order: tuple = None
    elimination: object = field(default=None, compare=False, repr=False)

    @property
    def optimal_labels(self):
        return tuple(r.label for r in self.ratio_table if r.ratio == self.lambda_bar)

    @property
    def extreme_optimal_vertices(self):
        return tuple(v for v in self.optimal_vertices if v.extreme)


def ratio_table(final):
    rows = []
    for e in final.elements:
        ratio = e.d1 / e.d2 if e.d2 > 0 else None
        rows.append(RatioRow(e.label, e.d1, e.d2, ratio))
    return tuple(rows)


def maximin(final):
    ratios = [e.d1 / e.d2 for e in final.elements if e.d2 > 0]
    if not ratios:
        raise NoPositiveD2()
    return max(ratios)


def vertex_coordinates(elem):
    if elem.d2 == 0:
        raise DivisionByZeroD2(f"element {elem.label} has d2 = 0")
    return tuple(v / elem.d2 for v in elem.kernel_row[:-1])


def unbounded_certificate(final, lambda_bar):
    """First element proving the objective unbounded, or None.

    An element with ``d2 <= 0`` is a recession direction of the feasible set;
    combined with the best vertex it raises the objective without limit
    exactly when ``d1 - lambda_bar * d2 > 0``.
    """
    for e in final.elements:
        if e.d2 <= 0 and e.d1 - lambda_bar * e.d2 > 0:
            return e
    return None


def is_extreme(problem, x):
    tight = [[Fraction(int(k == j)) for k in range(problem.n)] for j, v in enumerate(x) if v == 0]
    tight += [row for row, bl in zip(problem.A, problem.b) if dot(row, x) == bl]
    return len(tight) >= problem.n and rank(tight) == problem.n


def collect_vertices(problem, final, lambda_bar, want_all=False):
    """Deduplicated optimal points (and optionally all points) of the final level.

    Returns ``(optimal_vertices, all_vertices)``; ``all_vertices`` is None
    unless ``want_all``.
    """
    groups = {}
    for e in final.elements:
        if e.d2 <= 0:
            continue
        optimal = e.d1 / e.d2 == lambda_bar
        if not (optimal or want_all):
            continue
        x = vertex_coordinates(e)
        if x in groups:
            groups[x][0].append(e.label)
        else:
            groups[x] = ([e.label], e, optimal)

    vertices = []
    for x, (labels, e, optimal) in groups.items():
        if not problem.is_feasible(x):
            raise InfeasibleVertexBug(f"point of {labels[0]} violates x >= 0 or A x <= b: {x}")
        if problem.objective(x) != e.d1 / e.d2:
            raise InfeasibleVertexBug(f"c.x differs from d1/d2 at {labels[0]}")
        vertices.append(Vertex(tuple(labels), x, e.d1, e.d2, optimal, is_extreme(problem, x)))
    optimal = tuple(v for v in vertices if v.optimal)
    return optimal, (tuple(vertices) if want_all else None)


def solve(problem, want_all=False, max_elements=DEFAULT_MAX_ELEMENTS):
    """Run the full pipeline and return a :class:`SolveReport`.

    Raises :class:`UnboundedProblem` when a final element certifies that the
    objective has no finite maximum.
    """
    p = canonicalize_problem(problem)
    elim = run_elimination(build_reduced_data(p), max_elements)
    final = elim.final
    lam = maximin(final)
    witness = unbounded_certificate(final, lam)
    if witness is not None:
        raise UnboundedProblem(witness.label, witness.d1, witness.d2)
    optimal, every = collect_vertices(p, final, lam, want_all)
    return SolveReport(
        lambda_bar=lam,
        optimal_vertices=optimal,
        ratio_table=ratio_table(final),
        level_sizes=tuple(len(s) for s in elim.states),
        all_vertices=every,
        row_order=p.row_order,
        elimination=elim,
    )
