"""Finite crystallographic root systems and their Weyl groups.

Roots are integer coordinate tuples in the simple-root basis; a root is
positive exactly when all coordinates are nonnegative.  Supported types:
A(n>=1), B(n>=2), C(n>=2), D(n>=4), G2, F4.  Short roots are normalized
to squared length 2; the symmetric pairing is recovered from the Cartan
matrix through the symmetrizing diagonal.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .linalg import mat_inverse

Coords = tuple[int, ...]
IntMatrix = tuple[tuple[int, ...], ...]


def _chain_cartan(n: int) -> list[list[int]]:
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i in range(n - 1):
        a[i][i + 1] = a[i + 1][i] = -1
    return a


def cartan_matrix(family: str, n: int) -> IntMatrix:
    """Cartan matrix with rows scaled by the row root: a_ij = 2(ai,aj)/(ai,ai)."""
    if family == "A" and n >= 1:
        a = _chain_cartan(n)
    elif family == "B" and n >= 2:
        a = _chain_cartan(n)
        a[n - 1][n - 2] = -2  # last simple root is short
    elif family == "C" and n >= 2:
        a = _chain_cartan(n)
        a[n - 2][n - 1] = -2  # last simple root is long
    elif family == "D" and n >= 4:
        a = _chain_cartan(n - 1)
        for row in a:
            row.append(0)
        a.append([0] * n)
        a[n - 1][n - 1] = 2
        a[n - 1][n - 3] = a[n - 3][n - 1] = -1
        a[n - 1][n - 2] = a[n - 2][n - 1] = 0
    elif family == "G" and n == 2:
        a = [[2, -3], [-1, 2]]  # first simple root short
    elif family == "F" and n == 4:
        a = [[2, -1, 0, 0], [-1, 2, -1, 0], [0, -2, 2, -1], [0, 0, -1, 2]]
    else:
        raise ValueError(f"unsupported type {family}{n}")
    return tuple(tuple(r) for r in a)


def symmetrizers(family: str, n: int) -> tuple[int, ...]:
    """d_i = (a_i, a_i)/2 making diag(d) @ cartan symmetric."""
    if family in ("A", "D"):
        return (1,) * n
    if family == "B":
        return (2,) * (n - 1) + (1,)
    if family == "C":
        return (1,) * (n - 1) + (2,)
    if family == "G":
        return (1, 3)
    if family == "F":
        return (2, 2, 1, 1)
    raise ValueError(f"unsupported family {family}")


_LABEL = re.compile(r"^([ABCDGF])(\d+)$")


@lru_cache(maxsize=None)
def root_system(label: str) -> "RootSystem":
    m = _LABEL.match(label.strip().upper())
    if not m:
        raise ValueError(f"bad type label {label!r}; expected e.g. A2, B3, G2")
    return RootSystem(m.group(1), int(m.group(2)))


class RootSystem:
    """All roots, the pairing, and the full Weyl group of one type."""

    def __init__(self, family: str, n: int):
        self.family = family
        self.rank = n
        self.label = f"{family}{n}"
        self.cartan = cartan_matrix(family, n)
        self.sym = symmetrizers(family, n)
        self.gram: list[list[Fraction]] = [
            [Fraction(self.sym[i] * self.cartan[i][j]) for j in range(n)]
            for i in range(n)]
        self.simple_roots: list[Coords] = [
            tuple(int(i == j) for j in range(n)) for i in range(n)]
        self._gens = [self.simple_reflection(i) for i in range(n)]
        self.roots: list[Coords] = self._close_roots()
        self.root_set = frozenset(self.roots)
        self.positive_roots: list[Coords] = sorted(
            (r for r in self.roots if min(r) >= 0),
            key=lambda c: (sum(c), c))
        self._weyl: dict[IntMatrix, tuple[int, ...]] | None = None

    # ------------------------------------------------------------------
    # pairing

    def inner(self, a: Sequence[int], b: Sequence[int]) -> Fraction:
        return sum(Fraction(a[i]) * self.gram[i][j] * b[j]
                   for i in range(self.rank) for j in range(self.rank))

    def norm2(self, a: Sequence[int]) -> Fraction:
        return self.inner(a, a)

    def pairing(self, beta: Sequence[int], alpha: Sequence[int]) -> Fraction:
        """<beta, alpha^vee> = 2(beta,alpha)/(alpha,alpha)."""
        return 2 * self.inner(beta, alpha) / self.norm2(alpha)

    def is_long(self, alpha: Sequence[int]) -> bool:
        return self.norm2(alpha) > 2

    # ------------------------------------------------------------------
    # reflections and roots

    def simple_reflection(self, i: int) -> IntMatrix:
        n = self.rank
        rows = [[int(r == c) for c in range(n)] for r in range(n)]
        rows[i] = [int(i == j) - self.cartan[i][j] for j in range(n)]
        return tuple(tuple(r) for r in rows)

    def reflection_in_root(self, alpha: Sequence[int]) -> IntMatrix:
        n = self.rank
        cols = []
        for j in range(n):
            k = self.pairing(self.simple_roots[j], alpha)
            assert k.denominator == 1
            cols.append([int(i == j) - int(k) * alpha[i] for i in range(n)])
        return tuple(tuple(cols[j][i] for j in range(n)) for i in range(n))

    def act(self, w: IntMatrix, coords: Sequence[int]) -> Coords:
        return tuple(sum(w[i][j] * coords[j] for j in range(self.rank))
                     for i in range(self.rank))

    def reflect(self, beta: Sequence[int], alpha: Sequence[int]) -> Coords:
        k = self.pairing(beta, alpha)
        assert k.denominator == 1
        return tuple(beta[i] - int(k) * alpha[i] for i in range(self.rank))

    def _close_roots(self) -> list[Coords]:
        seen: set[Coords] = set(self.simple_roots)
        frontier = list(seen)
        while frontier:
            nxt = []
            for r in frontier:
                for g in self._gens:
                    s = self.act(g, r)
                    if s not in seen:
                        seen.add(s)
                        nxt.append(s)
            frontier = nxt
        return sorted(seen)

    def abs_root(self, coords: Sequence[int]) -> Coords:
        c = tuple(coords)
        if any(x < 0 for x in c):
            c = tuple(-x for x in c)
        if c not in self.root_set:
            raise ValueError(f"{coords} is not a root of {self.label}")
        return c

    def support(self, coords: Sequence[int]) -> frozenset[int]:
        return frozenset(i for i, c in enumerate(coords) if c)

    def roots_with_support_in(self, simple_subset: Iterable[int]) -> list[Coords]:
        allowed = set(simple_subset)
        return [r for r in self.positive_roots
                if self.support(r) <= allowed]

    # ------------------------------------------------------------------
    # Weyl group

    def weyl_elements(self) -> dict[IntMatrix, tuple[int, ...]]:
        """Every group element, mapped to one shortest word in the generators."""
        if self._weyl is None:
            ident = tuple(tuple(int(i == j) for j in range(self.rank))
                          for i in range(self.rank))
            table: dict[IntMatrix, tuple[int, ...]] = {ident: ()}
            frontier = [ident]
            while frontier:
                nxt = []
                for w in frontier:
                    word = table[w]
                    for i, g in enumerate(self._gens):
                        m = tuple(tuple(
                            sum(w[r][k] * g[k][c] for k in range(self.rank))
                            for c in range(self.rank)) for r in range(self.rank))
                        if m not in table:
                            table[m] = word + (i,)
                            nxt.append(m)
                frontier = nxt
            self._weyl = table
        return self._weyl

    def matrix_of_word(self, word: Sequence[int]) -> IntMatrix:
        m = tuple(tuple(int(i == j) for j in range(self.rank))
                  for i in range(self.rank))
        for i in word:
            if not 0 <= i < self.rank:
                raise ValueError(f"word letter {i} out of range for {self.label}")
            g = self._gens[i]
            m = tuple(tuple(sum(m[r][k] * g[k][c] for k in range(self.rank))
                            for c in range(self.rank)) for r in range(self.rank))
        return m

    def inverse_matrix(self, w: IntMatrix) -> IntMatrix:
        inv = mat_inverse([[Fraction(x) for x in row] for row in w])
        out = tuple(tuple(int(x) for x in row) for row in inv)
        return out

    def inversion_set(self, w: IntMatrix) -> list[Coords]:
        """Positive roots sent negative by w^{-1} (i.e. in w(negatives))."""
        winv = self.inverse_matrix(w)
        return [a for a in self.positive_roots
                if min(self.act(winv, a)) < 0]

    # ------------------------------------------------------------------
    # subsystems

    def base_of(self, positive_subset: Iterable[Coords]) -> list[Coords]:
        """Indecomposable elements: the simple system of a closed subsystem."""
        pos = set(positive_subset)
        sums = set()
        for a in pos:
            for b in pos:
                s = tuple(x + y for x, y in zip(a, b))
                if s in pos:
                    sums.add(s)
        return sorted(pos - sums, key=lambda c: (sum(c), c))

    def cartan_of_base(self, base: Sequence[Coords]) -> IntMatrix:
        out = []
        for a in base:
            row = []
            for b in base:
                k = self.pairing(b, a)
                assert k.denominator == 1
                row.append(int(k))
            out.append(tuple(row))
        return tuple(out)

    def nonorthogonal_edges(self, roots: Sequence[Coords]) -> list[tuple[int, int]]:
        n = len(roots)
        return [(i, j) for i in range(n) for j in range(i + 1, n)
                if self.inner(roots[i], roots[j]) != 0]

    def connected_components(self, roots: Sequence[Coords]) -> list[list[int]]:
        """Indices of roots grouped by non-orthogonality connectivity."""
        n = len(roots)
        adj: dict[int, set[int]] = {i: set() for i in range(n)}
        for i, j in self.nonorthogonal_edges(roots):
            adj[i].add(j)
            adj[j].add(i)
        seen: set[int] = set()
        comps = []
        for i in range(n):
            if i in seen:
                continue
            stack, comp = [i], []
            seen.add(i)
            while stack:
                v = stack.pop()
                comp.append(v)
                for u in adj[v]:
                    if u not in seen:
                        seen.add(u)
                        stack.append(u)
            comps.append(sorted(comp))
        return comps

    def __repr__(self) -> str:
        return f"RootSystem({self.label})"


WEYL_ORDERS = {
    "A1": 2, "A2": 6, "A3": 24, "A4": 120,
    "B2": 8, "B3": 48, "B4": 384,
    "C2": 8, "C3": 48, "C4": 384,
    "D4": 192, "G2": 12, "F4": 1152,
}
