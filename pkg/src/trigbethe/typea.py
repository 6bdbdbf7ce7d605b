"""The reindexing map from the n-point trigonometric family of the
general-linear flavor onto the rational family with one extra marked
point at the origin.

Source: pair generators t_{ij} (1 <= i < j <= n) plus tau_1..tau_n; a
torus point is a tuple (z_1..z_n) of distinct nonzero scalars, the pair
(i,j) evaluating to z_i/z_j.  Target: pure pair generators t_{ij} on
indices {0..n}.  The map fixes pairs and sends tau_k to minus the sum of
all pairs {c,k} with c < k (a Jucys-Murphy-style element).  Under it the
k-th trigonometric element at (z) matches -z_k times the k-th rational
element at (0, z_1..z_n), exactly.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .field import CyclotomicField, FieldElement
from .linalg import row_space_equal


class PairSpace:
    """Vectors over pair generators t_{ij}, i<j over a fixed index set."""

    def __init__(self, indices: Sequence[int], field: CyclotomicField):
        self.indices = tuple(indices)
        self.field = field
        self.pairs = [tuple(p) for p in combinations(self.indices, 2)]
        self._index = {p: k for k, p in enumerate(self.pairs)}
        self.dim = len(self.pairs)

    def zero(self) -> list[FieldElement]:
        return [self.field.zero() for _ in range(self.dim)]

    def add_pair(self, vec, i: int, j: int, coeff) -> None:
        p = (i, j) if i < j else (j, i)
        k = self._index[p]
        vec[k] = vec[k] + self.field.coerce(coeff)

    def labels(self) -> list[str]:
        return [f"t({i},{j})" for i, j in self.pairs]


class TrigSource:
    """The n-point trigonometric side: pairs on {1..n} plus tau block."""

    def __init__(self, n: int, field: CyclotomicField):
        self.n = n
        self.field = field
        self.pairs = [tuple(p) for p in combinations(range(1, n + 1), 2)]
        self._index = {p: k for k, p in enumerate(self.pairs)}
        self.dim = len(self.pairs) + n

    def zero(self) -> list[FieldElement]:
        return [self.field.zero() for _ in range(self.dim)]

    def bethe(self, z: Sequence[FieldElement], k: int) -> list[FieldElement]:
        """tau_k minus weighted pairs at the torus point (z_1..z_n).

        Pair (i,j) evaluates to z_i/z_j; its weight on the k-th element
        is (h_i - h_j applied to e_k) times u/(u-1).
        """
        if not 1 <= k <= self.n:
            raise ValueError("index out of range")
        vec = self.zero()
        vec[len(self.pairs) + k - 1] = self.field.one()
        for (i, j) in self.pairs:
            sign = (1 if i == k else 0) - (1 if j == k else 0)
            if sign == 0:
                continue
            u = z[i - 1] / z[j - 1]
            if u.is_one():
                raise ZeroDivisionError(f"coincident coordinates at pair {(i, j)}")
            vec[self._index[(i, j)]] = -self.field.coerce(sign) * (u / (u - 1))
        return vec

    def tau(self, k: int) -> list[FieldElement]:
        vec = self.zero()
        vec[len(self.pairs) + k - 1] = self.field.one()
        return vec


class RationalTarget(PairSpace):
    """Pairs over {0..n}; the marked index 0 plays the extra point."""

    def __init__(self, n: int, field: CyclotomicField):
        super().__init__(range(0, n + 1), field)
        self.n = n

    def gaudin(self, points: Sequence, k: int) -> list[FieldElement]:
        """Rational element at index k: sum of pairs {k,j}/(p_k - p_j)."""
        vec = self.zero()
        pk = points[k]
        for j in self.indices:
            if j == k:
                continue
            d = pk - points[j]
            if d == 0:
                raise ZeroDivisionError("rational points must be distinct")
            self.add_pair(vec, k, j, 1 / d)
        return vec

    def gaudin_span(self, points: Sequence) -> list[list[FieldElement]]:
        return [self.gaudin(points, k) for k in self.indices]


def reindex_map(source: TrigSource, target: RationalTarget,
                vec: Sequence[FieldElement]) -> list[FieldElement]:
    """Apply the correspondence: pairs fixed, tau_k to -(sum of {c,k}, c<k)."""
    if source.n != target.n:
        raise ValueError("source and target sizes differ")
    out = target.zero()
    for (i, j), k in source._index.items():
        c = vec[k]
        if not c == 0:
            target.add_pair(out, i, j, c)
    for k in range(1, source.n + 1):
        c = vec[len(source.pairs) + k - 1]
        if not c == 0:
            for cc in range(0, k):
                target.add_pair(out, cc, k, -c)
    return out


def marked_points(field: CyclotomicField, z: Sequence[FieldElement]) -> list:
    """(0, z_1..z_n) as exact scalars for the rational side."""
    return [field.zero()] + [field.coerce(v) for v in z]


def image_matches_scaled_gaudin(source: TrigSource, target: RationalTarget,
                                z: Sequence[FieldElement], k: int) -> bool:
    """The pinned identity: image of the k-th trig element equals
    -z_k times the k-th rational element at (0, z)."""
    img = reindex_map(source, target, source.bethe(z, k))
    expected = target.gaudin(marked_points(source.field, z), k)
    zk = source.field.coerce(z[k - 1])
    expected = [-(zk * c) for c in expected]
    return img == expected


def spans_match(source: TrigSource, target: RationalTarget,
                z: Sequence[FieldElement]) -> bool:
    """Image of the whole trig span equals the rational span at (0, z)."""
    imgs = [reindex_map(source, target, source.bethe(z, k))
            for k in range(1, source.n + 1)]
    gspan = target.gaudin_span(marked_points(source.field, z))
    return row_space_equal(imgs, gspan)


def sample_z(field: CyclotomicField, n: int, seed: int) -> tuple:
    import random
    rng = random.Random(f"typea-z-{n}-{seed}")
    while True:
        z = [Fraction(rng.randint(1, 200), rng.randint(1, 200))
             for _ in range(n)]
        if len({*z}) == n and all(v != 0 for v in z):
            return tuple(field.from_rational(v) for v in z)
