"""Exact linear algebra over any field-like scalar type.

Works with Fraction, cyclotomic field elements, and rational functions:
anything supporting +, -, *, / and == 0 exactly.  Matrices are lists of
row lists; nothing here ever touches floating point.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence, TypeVar

S = TypeVar("S")

Matrix = list[list[S]]


def _copy(rows: Sequence[Sequence[S]]) -> Matrix:
    return [list(r) for r in rows]


def rref(rows: Sequence[Sequence[S]]) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form with unit pivots; returns (rows, pivot cols).

    Zero rows are dropped, so the result is a canonical basis of the row
    space (two spans are equal iff their rrefs are identical).
    """
    mat = _copy(rows)
    if not mat:
        return [], []
    ncols = len(mat[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(mat)) if not mat[i][c] == 0), None)
        if pr is None:
            continue
        mat[r], mat[pr] = mat[pr], mat[r]
        inv_head = mat[r][c]
        mat[r] = [x / inv_head for x in mat[r]]
        for i in range(len(mat)):
            if i != r and not mat[i][c] == 0:
                f = mat[i][c]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return mat[:r], pivots


def rank(rows: Sequence[Sequence[S]]) -> int:
    return len(rref(rows)[0])


def row_space_equal(a: Sequence[Sequence[S]], b: Sequence[Sequence[S]]) -> bool:
    ra, _ = rref(a)
    rb, _ = rref(b)
    return ra == rb


def in_row_space(vec: Sequence[S], rows: Sequence[Sequence[S]]) -> bool:
    base, _ = rref(rows)
    joined, _ = rref(list(base) + [list(vec)])
    return len(joined) == len(base)


def express_in_rows(vec: Sequence[S], rows: Sequence[Sequence[S]]):
    """Coefficients c with sum(c_i * rows[i]) == vec, or None if outside."""
    if not rows:
        return None if any(not x == 0 for x in vec) else []
    # Solve rows^T c = vec by eliminating on the augmented transpose.
    m, n = len(rows), len(rows[0])
    aug = [[rows[i][j] for i in range(m)] + [vec[j]] for j in range(n)]
    red, pivots = rref(aug)
    coeffs = [None] * m
    for row, p in zip(red, pivots):
        if p == m:
            return None  # vec is outside the row space
        coeffs[p] = row[m]
    zero = vec[0] - vec[0] if n else Fraction(0)
    return [zero if c is None else c for c in coeffs]


def nullspace(rows: Sequence[Sequence[S]]) -> Matrix:
    """Basis of the right kernel {v : rows @ v = 0}."""
    if not rows:
        return []
    ncols = len(rows[0])
    red, pivots = rref(rows)
    some = next((x for r in rows for x in r if not x == 0), None)
    one = Fraction(1) if some is None else _unit_like(some)
    zero = one - one
    free = [c for c in range(ncols) if c not in pivots]
    basis: Matrix = []
    for f in free:
        v = [zero] * ncols
        v[f] = one
        for row, p in zip(red, pivots):
            v[p] = zero - row[f]
        basis.append(v)
    return basis


def _unit_like(sample: S) -> S:
    if sample == 0:
        raise ValueError("need a nonzero sample to build a unit")
    return sample / sample


def mat_mul(a: Sequence[Sequence[S]], b: Sequence[Sequence[S]]) -> Matrix:
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def mat_vec(a: Sequence[Sequence[S]], v: Sequence[S]) -> list[S]:
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def mat_inverse(a: Sequence[Sequence[S]]) -> Matrix:
    """Inverse of a square matrix; ValueError if singular."""
    n = len(a)
    sample = next((x for r in a for x in r if not x == 0), None)
    if sample is None:
        raise ValueError("singular matrix")
    one = _unit_like(sample)
    zero = one - one
    aug = [list(row) + [one if i == j else zero for j in range(n)]
           for i, row in enumerate(a)]
    red, pivots = rref(aug)
    if pivots[:n] != list(range(n)) or len(red) < n:
        raise ValueError("singular matrix")
    return [row[n:] for row in red[:n]]


def det(a: Sequence[Sequence[S]]) -> S:
    """Determinant by exact fraction-free-style elimination with division."""
    mat = _copy(a)
    n = len(mat)
    if n == 0:
        return Fraction(1)
    sign_flip = False
    result = None
    for c in range(n):
        pr = next((i for i in range(c, n) if not mat[i][c] == 0), None)
        if pr is None:
            x = mat[0][0]
            return x - x  # structural zero of the right scalar type
        if pr != c:
            mat[c], mat[pr] = mat[pr], mat[c]
            sign_flip = not sign_flip
        piv = mat[c][c]
        result = piv if result is None else result * piv
        for i in range(c + 1, n):
            if not mat[i][c] == 0:
                f = mat[i][c] / piv
                mat[i] = [a_ - f * b_ for a_, b_ in zip(mat[i], mat[c])]
    return -result if sign_flip else result


def identity(n: int) -> Matrix:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def kron(a: Sequence[Sequence[S]], b: Sequence[Sequence[S]]) -> Matrix:
    """Kronecker product, blocks of b scaled by entries of a."""
    out: Matrix = []
    for arow in a:
        for brow in b:
            out.append([x * y for x in arow for y in brow])
    return out


def rank_via_minors(a: Sequence[Sequence[S]]) -> int:
    """Rank as the largest size of a nonvanishing square minor.

    Exponential-time cross-check oracle for small matrices; independent
    of the elimination path used by rref().
    """
    from itertools import combinations

    m = len(a)
    n = len(a[0]) if m else 0
    for size in range(min(m, n), 0, -1):
        for rows_ix in combinations(range(m), size):
            for cols_ix in combinations(range(n), size):
                sub = [[a[i][j] for j in cols_ix] for i in rows_ix]
                if not det(sub) == 0:
                    return size
    return 0
