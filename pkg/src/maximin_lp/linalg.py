"""Small exact linear algebra over Fractions (row reduction only)."""

from fractions import Fraction


def row_reduce(rows):
    """Reduced row echelon form; returns (matrix, pivot columns)."""
    M = [[Fraction(v) for v in row] for row in rows]
    if not M:
        return M, []
    ncols = len(M[0])
    pivots = []
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(M)) if M[i][col] != 0), None)
        if pivot is None:
            continue
        M[r], M[pivot] = M[pivot], M[r]
        inv = 1 / M[r][col]
        M[r] = [v * inv for v in M[r]]
        for i in range(len(M)):
            if i != r and M[i][col] != 0:
                factor = M[i][col]
                M[i] = [a - factor * b for a, b in zip(M[i], M[r])]
        pivots.append(col)
        r += 1
        if r == len(M):
            break
    return M, pivots


def rank(rows):
    return len(row_reduce(rows)[1])


def solve_square(A, b):
    """Unique solution of ``A x = b`` or None when ``A`` is singular."""
    n = len(A)
    aug = [list(row) + [rhs] for row, rhs in zip(A, b)]
    R, pivots = row_reduce(aug)
    if pivots != list(range(n)):
        return None
    return tuple(R[i][n] for i in range(n))


def null_vector(rows, n):
    """A nonzero kernel vector when ``rows`` has rank ``n - 1``, else None."""
    if not rows:
        return (Fraction(1),) if n == 1 else None
    R, pivots = row_reduce(rows)
    if len(pivots) != n - 1:
        return None
    free = next(c for c in range(n) if c not in pivots)
    v = [Fraction(0)] * n
    v[free] = Fraction(1)
    for i, p in enumerate(pivots):
        v[p] = -R[i][free]
    return tuple(v)
