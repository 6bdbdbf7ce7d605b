"""Spin-chain realization on tensor powers of the 2-dimensional module.

Pair generators act through the quadratic tensor Omega = e(x)f + f(x)e +
(1/2) h(x)h, which equals swap minus half the identity; the marked-index
generators act through a free 2x2 twist matrix corrected by lowering
terms.  Everything is exact matrix algebra over Fraction (or any scalar
obeying the same protocol).
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from typing import Sequence

from .linalg import kron, mat_mul

Mat = list[list]

E: Mat = [[Fraction(0), Fraction(1)], [Fraction(0), Fraction(0)]]
F: Mat = [[Fraction(0), Fraction(0)], [Fraction(1), Fraction(0)]]
H: Mat = [[Fraction(1), Fraction(0)], [Fraction(0), Fraction(-1)]]
ID2: Mat = [[Fraction(1), Fraction(0)], [Fraction(0), Fraction(1)]]


def mat_add(a: Mat, b: Mat) -> Mat:
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_sub(a: Mat, b: Mat) -> Mat:
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(a: Mat, s) -> Mat:
    return [[s * x for x in row] for row in a]


def mat_equal(a: Mat, b: Mat) -> bool:
    return all(x == y for ra, rb in zip(a, b) for x, y in zip(ra, rb))


def zero_matrix(size: int) -> Mat:
    return [[Fraction(0)] * size for _ in range(size)]


def place(factors: dict[int, Mat], n: int) -> Mat:
    """Kronecker product over n slots (1-based), identity where omitted."""
    mats = [factors.get(slot, ID2) for slot in range(1, n + 1)]
    return reduce(kron, mats) if mats else [[Fraction(1)]]


def casimir_pair(i: int, j: int, n: int) -> Mat:
    """Omega acting in slots i and j; symmetric in its two slots."""
    half = Fraction(1, 2)
    out = place({i: E, j: F}, n)
    out = mat_add(out, place({i: F, j: E}, n))
    out = mat_add(out, mat_scale(place({i: H, j: H}, n), half))
    return out


def lowering_pair(i: int, j: int, n: int) -> Mat:
    """Lowering part: f in the first-named slot, e in the second."""
    return place({i: F, j: E}, n)


def raising_pair(i: int, j: int, n: int) -> Mat:
    return place({i: E, j: F}, n)


def twist_at(theta: Mat, i: int, n: int) -> Mat:
    return place({i: theta}, n)


def trig_hamiltonian(theta: Mat, z: Sequence, k: int, n: int) -> Mat:
    """The k-th trigonometric element: twist over z_k, Casimir simple
    fractions, minus lowering terms over z_k."""
    zk = z[k - 1]
    out = mat_scale(twist_at(theta, k, n), 1 / zk)
    for j in range(1, n + 1):
        if j == k:
            continue
        d = zk - z[j - 1]
        if d == 0:
            raise ZeroDivisionError("coordinates must be pairwise distinct")
        out = mat_add(out, mat_scale(casimir_pair(k, j, n), 1 / d))
        out = mat_sub(out, mat_scale(lowering_pair(k, j, n), 1 / zk))
    return out


def represent_pair_vector(pairs: Sequence[tuple[int, int]],
                          coeffs: Sequence, theta: Mat, n: int) -> Mat:
    """Matrix of a pair-generator vector on indices {0..n}.

    Pairs within {1..n} act by the Casimir tensor; a pair {0,i} acts by
    the twist at slot i minus all lowering terms out of slot i.
    """
    out = zero_matrix(2 ** n)
    for (i, j), c in zip(pairs, coeffs):
        if c == 0:
            continue
        if i == 0:
            block = twist_at(theta, j, n)
            for l in range(1, n + 1):
                if l != j:
                    block = mat_sub(block, lowering_pair(j, l, n))
        else:
            block = casimir_pair(i, j, n)
        out = mat_add(out, mat_scale(block, c))
    return out


def commutator(a: Mat, b: Mat) -> Mat:
    return mat_sub(mat_mul(a, b), mat_mul(b, a))


def commute(a: Mat, b: Mat) -> bool:
    return all(x == 0 for row in commutator(a, b) for x in row)
