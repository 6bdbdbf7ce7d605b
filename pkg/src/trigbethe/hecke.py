"""Operator algebra with group part and polynomial part, in normal form.

Elements are dicts {Weyl matrix: polynomial}, read as sum of w * p_w(x)
with the group element on the left.  The polynomial ring has one x per
simple root plus a central deformation variable t (the last variable).
The defining exchange rule moves a variable across a generator:

    x_g * s_i  =  s_i * x_{s_i(g)} + t * <g against the i-th root>

and products are computed by moving polynomials across reduced words.
A degree cap guards against runaway polynomial growth; families used
here stay within degree two.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .poly import Poly
from .roots import Coords, IntMatrix, RootSystem

HeckeElem = dict[IntMatrix, Poly]


def q_power(qvals: Sequence[Fraction], alpha: Sequence[int]) -> Fraction:
    out = Fraction(1)
    for q, a in zip(qvals, alpha):
        out *= Fraction(q) ** a
    return out


def sample_q(rs: RootSystem, seed: int) -> tuple[Fraction, ...]:
    """Seeded torus point with no root power equal to 1."""
    import random
    rng = random.Random(f"hecke-q-{rs.label}-{seed}")
    while True:
        q = tuple(Fraction(rng.randint(2, 60), rng.randint(2, 60))
                  for _ in range(rs.rank))
        if all(q_power(q, a) != 1 for a in rs.positive_roots):
            return q


class HeckeAlgebra:
    def __init__(self, rs: RootSystem, degree_cap: int = 4,
                 relation_sign: int = 1):
        self.rs = rs
        self.n = rs.rank
        self.nvars = rs.rank + 1          # x_1..x_n and the central t
        self.degree_cap = degree_cap
        self.relation_sign = relation_sign
        self.ident: IntMatrix = tuple(
            tuple(int(i == j) for j in range(self.n)) for i in range(self.n))
        self.tvar = Poly.variable(self.nvars, self.n)
        self._words = rs.weyl_elements()
        # linear substitution polys: the i-th generator sends x_k to the
        # combination read off the k-th row of its root-side matrix
        self._subst: list[list[Poly]] = []
        for i in range(self.n):
            m = rs.simple_reflection(i)
            row = []
            for k in range(self.n):
                p = Poly(self.nvars)
                for j in range(self.n):
                    if m[k][j]:
                        p = p + Poly.variable(self.nvars, j, Fraction(m[k][j]))
                row.append(p)
            self._subst.append(row)

    # ------------------------------------------------------------------
    # basic elements

    def zero(self) -> HeckeElem:
        return {}

    def one(self) -> HeckeElem:
        return {self.ident: Poly.constant(self.nvars, Fraction(1))}

    def x(self, k: int) -> HeckeElem:
        return {self.ident: Poly.variable(self.nvars, k)}

    def group(self, w: IntMatrix) -> HeckeElem:
        return {w: Poly.constant(self.nvars, Fraction(1))}

    def scale(self, a: HeckeElem, s) -> HeckeElem:
        return self._prune({w: p * s for w, p in a.items()})

    def add(self, a: HeckeElem, b: HeckeElem) -> HeckeElem:
        out = dict(a)
        for w, p in b.items():
            out[w] = out.get(w, Poly(self.nvars)) + p
        return self._prune(out)

    def sub(self, a: HeckeElem, b: HeckeElem) -> HeckeElem:
        return self.add(a, self.scale(b, Fraction(-1)))

    def is_zero(self, a: HeckeElem) -> bool:
        return all(p.is_zero() for p in a.values())

    def _prune(self, a: HeckeElem) -> HeckeElem:
        return {w: p for w, p in a.items() if not p.is_zero()}

    def _x_degree(self, p: Poly) -> int:
        return max((sum(e[:self.n]) for e in p.terms), default=0)

    # ------------------------------------------------------------------
    # the exchange move

    def apply_generator_subst(self, p: Poly, i: int) -> Poly:
        """x_k -> row-k combination for the i-th generator; t untouched."""
        out = Poly(self.nvars)
        for e, c in p.terms.items():
            term = Poly.constant(self.nvars, c)
            for k in range(self.n):
                if e[k]:
                    term = term * self._subst[i][k] ** e[k]
            if e[self.n]:
                term = term * self.tvar ** e[self.n]
            out = out + term
        return out

    def _corr_monomial(self, e: tuple[int, ...], i: int) -> Poly:
        """Correction term of one monomial against the i-th generator."""
        k = next((k for k in range(self.n) if e[k]), None)
        if k is None:
            return Poly(self.nvars)
        rest = list(e)
        rest[k] -= 1
        rest_e = tuple(rest)
        rest_poly = Poly(self.nvars, {rest_e: Fraction(1)})
        out = Poly(self.nvars)
        if k == i:
            out = out + self.apply_generator_subst(rest_poly, i)
        tail = self._corr_monomial(rest_e, i)
        if not tail.is_zero():
            out = out + Poly.variable(self.nvars, k) * tail
        return out

    def corr(self, p: Poly, i: int) -> Poly:
        out = Poly(self.nvars)
        for e, c in p.terms.items():
            piece = self._corr_monomial(e, i)
            if not piece.is_zero():
                out = out + piece * c
        return out

    def move_across_word(self, p: Poly, word: Sequence[int]) -> HeckeElem:
        """Normal form of p * (product of generators along the word)."""
        result: HeckeElem = {self.ident: p}
        sign = Fraction(self.relation_sign)
        for i in word:
            gen = self.rs.simple_reflection(i)
            nxt: HeckeElem = {}
            for w, poly in result.items():
                wnext = _mat_mul_int(w, gen)
                moved = self.apply_generator_subst(poly, i)
                nxt[wnext] = nxt.get(wnext, Poly(self.nvars)) + moved
                c = self.corr(poly, i)
                if not c.is_zero():
                    nxt[w] = nxt.get(w, Poly(self.nvars)) + self.tvar * c * sign
            result = self._prune(nxt)
        return result

    def multiply(self, a: HeckeElem, b: HeckeElem) -> HeckeElem:
        out: HeckeElem = {}
        for w1, p1 in a.items():
            for w2, p2 in b.items():
                moved = self.move_across_word(p1, self._words[w2])
                for v, pv in moved.items():
                    key = _mat_mul_int(w1, v)
                    out[key] = out.get(key, Poly(self.nvars)) + pv * p2
        out = self._prune(out)
        for p in out.values():
            if self._x_degree(p) > self.degree_cap:
                raise RuntimeError(
                    f"polynomial degree exceeded the cap {self.degree_cap}; "
                    "raise degree_cap explicitly if this is intended")
        return out

    def commutator(self, a: HeckeElem, b: HeckeElem) -> HeckeElem:
        return self.sub(self.multiply(a, b), self.multiply(b, a))

    # ------------------------------------------------------------------
    # the commuting family and the degree-one correspondence

    def bmo(self, k: int, qvals: Sequence[Fraction],
            weight: str = "standard", term_sign: int = 1) -> HeckeElem:
        """Deformed degree-one family member for the k-th dual basis vector.

        weight picks the simple-fraction profile applied to each root
        power u: standard u/(1-u); inverted 1/(u-1); bethe u/(u-1).
        """
        out = self.x(k)
        for a in self.rs.positive_roots:
            ah = a[k]
            if not ah:
                continue
            u = q_power(qvals, a)
            if u == 1:
                raise ZeroDivisionError(f"root power 1 at {a}")
            if weight == "standard":
                c = u / (1 - u)
            elif weight == "inverted":
                c = 1 / (u - 1)
            elif weight == "bethe":
                c = u / (u - 1)
            else:
                raise ValueError(f"unknown weight {weight!r}")
            coeff = self.tvar * (Fraction(term_sign) * c * ah)
            refl = self.rs.reflection_in_root(a)
            out = self.add(out, {refl: coeff,
                                 self.ident: coeff * Fraction(-1)})
        return out

    def family(self, qvals: Sequence[Fraction], weight: str = "standard"
               ) -> list[HeckeElem]:
        return [self.bmo(k, qvals, weight) for k in range(self.n)]

    def at_numeric_t(self, a: HeckeElem, tval: Fraction
                     ) -> dict[tuple[IntMatrix, tuple[int, ...]], Fraction]:
        """Flatten to exact coordinates over (group element, x-monomial)."""
        out: dict[tuple[IntMatrix, tuple[int, ...]], Fraction] = {}
        for w, p in a.items():
            for e, c in p.terms.items():
                key = (w, e[:self.n])
                val = Fraction(c) * Fraction(tval) ** e[self.n]
                out[key] = out.get(key, Fraction(0)) + val
        return {k: v for k, v in out.items() if v != 0}

    def holonomy_image(self, space, vec, tval: Fraction
                       ) -> dict[tuple[IntMatrix, tuple[int, ...]], Fraction]:
        """Degree-one correspondence at numeric t: each t_alpha becomes
        (reflection - identity), each tau block -1/t times an x."""
        out: dict[tuple[IntMatrix, tuple[int, ...]], Fraction] = {}
        zero_e = (0,) * self.n

        def bump(key, val):
            out[key] = out.get(key, Fraction(0)) + val

        for idx, a in enumerate(space.pos):
            c = vec[idx]
            if c == 0:
                continue
            cf = c.as_rational() if hasattr(c, "as_rational") else Fraction(c)
            refl = self.rs.reflection_in_root(a)
            bump((refl, zero_e), cf)
            bump((self.ident, zero_e), -cf)
        for i in range(self.n):
            c = vec[space.npos + i]
            if c == 0:
                continue
            cf = c.as_rational() if hasattr(c, "as_rational") else Fraction(c)
            e = [0] * self.n
            e[i] = 1
            bump((self.ident, tuple(e)), -cf / Fraction(tval))
        return {k: v for k, v in out.items() if v != 0}


def _mat_mul_int(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    n = len(a)
    return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(n))
                       for j in range(n)) for i in range(n))


def all_reduced_words(rs: RootSystem, w: IntMatrix) -> list[tuple[int, ...]]:
    """Every shortest generator word for w (used to verify the exchange
    move is independent of the chosen word)."""
    words = rs.weyl_elements()
    target_len = len(words[w])
    if target_len == 0:
        return [()]
    out = []
    for i in range(rs.rank):
        gen = rs.simple_reflection(i)
        prev = _mat_mul_int(w, gen)
        if len(words[prev]) == target_len - 1:
            out.extend(u + (i,) for u in all_reduced_words(rs, prev))
    return out


def span_vectors(keyed: Sequence[dict]) -> list[list[Fraction]]:
    """Dense rational rows over the union of all keys, for span tests."""
    keys = sorted({k for d in keyed for k in d},
                  key=lambda kv: (kv[0], kv[1]))
    return [[d.get(k, Fraction(0)) for k in keys] for d in keyed]
