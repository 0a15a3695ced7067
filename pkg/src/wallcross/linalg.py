"""Small exact linear algebra over Q (lists of lists of Fraction).

Sizes in this package are tiny (at most a few hundred rows), so plain
fraction-based Gaussian elimination is entirely adequate.
"""

from __future__ import annotations

from fractions import Fraction

Matrix = list  # list[list[Fraction]]


def mat(rows) -> Matrix:
    return [[Fraction(x) for x in row] for row in rows]


def zeros(m: int, n: int) -> Matrix:
    return [[Fraction(0)] * n for _ in range(m)]


def identity(n: int) -> Matrix:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def transpose(A: Matrix) -> Matrix:
    return [list(col) for col in zip(*A)] if A else []


def mat_mul(A: Matrix, B: Matrix) -> Matrix:
    if not A or not B:
        return []
    n = len(B)
    assert all(len(row) == n for row in A), "shape mismatch"
    Bt = transpose(B)
    return [[sum((a * b for a, b in zip(row, col)), Fraction(0)) for col in Bt] for row in A]


def mat_vec(A: Matrix, v) -> list:
    return [sum((a * x for a, x in zip(row, v)), Fraction(0)) for row in A]


def rref(A: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form; returns (R, pivot column indices)."""
    R = [row[:] for row in A]
    m = len(R)
    n = len(R[0]) if m else 0
    pivots = []
    r = 0
    for c in range(n):
        pr = next((i for i in range(r, m) if R[i][c] != 0), None)
        if pr is None:
            continue
        R[r], R[pr] = R[pr], R[r]
        pv = R[r][c]
        R[r] = [x / pv for x in R[r]]
        for i in range(m):
            if i != r and R[i][c] != 0:
                f = R[i][c]
                R[i] = [x - f * y for x, y in zip(R[i], R[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    return R, pivots


def rank(A: Matrix) -> int:
    if not A:
        return 0
    return len(rref(A)[1])


def nullspace(A: Matrix, n: int | None = None) -> list[list[Fraction]]:
    """Basis of {x : A x = 0}.  n = number of columns (needed when A is empty)."""
    if not A:
        assert n is not None
        return [row[:] for row in identity(n)]
    ncols = len(A[0])
    R, pivots = rref(A)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -R[r][fc]
        basis.append(v)
    return basis


def solve(A: Matrix, b: list) -> list:
    """One solution x of A x = b; raises ValueError if inconsistent."""
    m = len(A)
    n = len(A[0]) if m else 0
    aug = [A[i][:] + [Fraction(b[i])] for i in range(m)]
    R, pivots = rref(aug)
    if n in pivots:
        raise ValueError("inconsistent linear system")
    x = [Fraction(0)] * n
    for r, pc in enumerate(pivots):
        x[pc] = R[r][n]
    return x


def inverse(A: Matrix) -> Matrix:
    n = len(A)
    aug = [A[i][:] + identity(n)[i] for i in range(n)]
    R, pivots = rref(aug)
    if pivots != list(range(n)):
        raise ValueError("singular matrix")
    return [row[n:] for row in R]


def det(A: Matrix) -> Fraction:
    n = len(A)
    M = [row[:] for row in A]
    d = Fraction(1)
    for c in range(n):
        pr = next((i for i in range(c, n) if M[i][c] != 0), None)
        if pr is None:
            return Fraction(0)
        if pr != c:
            M[c], M[pr] = M[pr], M[c]
            d = -d
        d *= M[c][c]
        inv = Fraction(1) / M[c][c]
        for i in range(c + 1, n):
            if M[i][c] != 0:
                f = M[i][c] * inv
                M[i] = [x - f * y for x, y in zip(M[i], M[c])]
    return d


def column_space_coords(basis_cols: Matrix, v: list):
    """Coordinates of v in the span of the given columns, or None.

    basis_cols: matrix whose COLUMNS are the spanning vectors.
    """
    if not basis_cols or not basis_cols[0]:
        return [] if all(x == 0 for x in v) else None
    m = len(basis_cols)
    k = len(basis_cols[0])
    aug = [basis_cols[i][:] + [Fraction(v[i])] for i in range(m)]
    R, pivots = rref(aug)
    if k in pivots:
        return None
    x = [Fraction(0)] * k
    for r, pc in enumerate(pivots):
        x[pc] = R[r][k]
    return x
