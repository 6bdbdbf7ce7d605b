"""Degree-one holonomy vectors, commuting families, and limit subspaces.

The working space has one basis vector t_alpha per positive root and one
tau_i per simple root; a vector is a flat list of exact scalars in that
order.  An h in the Cartan is encoded by its evaluations against the
simple roots, so the tau block of a vector literally spells out which h
it carries.

Three candidate Weyl actions are implemented side by side.  Only the
"equivariant" one satisfies the group law, intertwines the canonical
shift delta, and transports Bethe spans onto Bethe spans; the selection
is recomputed, not assumed, by weyl_action_report.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .field import CyclotomicField, FieldElement
from .layers import RootAmbient
from .linalg import nullspace, rank as mat_rank, rref, row_space_equal
from .nested import Chart, maximal_nested_sets
from .roots import Coords, IntMatrix, RootSystem

W_ACTION_VARIANTS = ("untransported", "half-transported", "equivariant")
W_ACTION_DEFAULT = "equivariant"


class HolonomySpace:
    """Exact vectors over the basis [t_alpha ..., tau_1 ... tau_n]."""

    def __init__(self, rs: RootSystem, field: CyclotomicField):
        self.rs = rs
        self.field = field
        self.pos = list(rs.positive_roots)
        self.npos = len(self.pos)
        self.dim = self.npos + rs.rank
        self._t_index = {a: i for i, a in enumerate(self.pos)}

    # ------------------------------------------------------------------
    # construction

    def zero(self) -> list[FieldElement]:
        return [self.field.zero() for _ in range(self.dim)]

    def t_index(self, alpha: Sequence[int]) -> int:
        return self._t_index[self.rs.abs_root(alpha)]

    def tau_index(self, i: int) -> int:
        return self.npos + i

    def vector(self, t_terms: dict | None = None,
               h_coords: Sequence | None = None) -> list[FieldElement]:
        v = self.zero()
        for alpha, c in (t_terms or {}).items():
            v[self.t_index(alpha)] = v[self.t_index(alpha)] + self.field.coerce(c)
        if h_coords is not None:
            for i, c in enumerate(h_coords):
                v[self.npos + i] = v[self.npos + i] + self.field.coerce(c)
        return v

    def labels(self) -> list[str]:
        return [f"t({','.join(map(str, a))})" for a in self.pos] + \
               [f"tau({i + 1})" for i in range(self.rs.rank)]

    def h_coords_of(self, vec: Sequence[FieldElement]) -> list[FieldElement]:
        return list(vec[self.npos:])

    def alpha_of_h(self, alpha: Sequence[int], h_coords: Sequence) -> object:
        total = None
        for a, c in zip(alpha, h_coords):
            term = c * a
            total = term if total is None else total + term
        return total

    # ------------------------------------------------------------------
    # distinguished elements

    def delta(self, h_coords: Sequence) -> list[FieldElement]:
        half = Fraction(1, 2)
        terms = {a: -half * self.alpha_of_h(a, [Fraction(c) for c in h_coords])
                 for a in self.pos}
        return self.vector(terms, h_coords)

    def casimir(self) -> list[FieldElement]:
        return self.vector({a: 1 for a in self.pos})

    def bethe(self, point: Sequence[FieldElement], h_coords: Sequence,
              roots: Iterable[Coords] | None = None) -> list[FieldElement]:
        """tau(h) minus the weighted t-terms of a regular torus point.

        Weight on t_alpha is alpha(h) * u/(u-1) with u the value of
        e^alpha at the point; the point must not centralize any of the
        contributing roots.
        """
        terms = {}
        for a in (self.pos if roots is None else roots):
            u = self._eval(point, a)
            if u.is_one():
                raise ZeroDivisionError(f"point centralizes root {a}")
            ah = self.alpha_of_h(a, h_coords)
            terms[a] = -(u / (u - 1)) * ah
        return self.vector(terms, h_coords)

    def gaudin(self, chi: Sequence, h_coords: Sequence,
               roots: Iterable[Coords] | None = None) -> list[FieldElement]:
        """Rational family: t-coefficients alpha(h)/alpha(chi), no tau part."""
        terms = {}
        for a in (self.pos if roots is None else roots):
            achi = self.alpha_of_h(a, chi)
            if achi == 0:
                raise ZeroDivisionError(f"direction chi vanishes on root {a}")
            terms[a] = self.alpha_of_h(a, h_coords) / achi
        return self.vector(terms)

    def bethe_subspace(self, point: Sequence[FieldElement]
                       ) -> list[list[FieldElement]]:
        n = self.rs.rank
        basis = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
        return [self.bethe(point, h) for h in basis]

    def gaudin_subspace(self, chi: Sequence,
                        roots: Iterable[Coords] | None = None
                        ) -> list[list[FieldElement]]:
        n = self.rs.rank
        basis = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
        return [self.gaudin(chi, h, roots) for h in basis]

    def _eval(self, point: Sequence[FieldElement], coords: Sequence[int]
              ) -> FieldElement:
        out = self.field.one()
        for y, k in zip(point, coords):
            if k:
                out = out * y ** k
        return out

    # ------------------------------------------------------------------
    # Weyl action

    def h_transport(self, w: IntMatrix, h_coords: Sequence) -> list:
        """Coordinates of w.h: transpose-inverse of the root-side matrix."""
        winv = self.rs.inverse_matrix(w)
        n = self.rs.rank
        return [sum(winv[j][i] * h_coords[j] for j in range(n))
                for i in range(n)]

    def act(self, w: IntMatrix, vec: Sequence[FieldElement],
            variant: str = W_ACTION_DEFAULT) -> list[FieldElement]:
        if variant not in W_ACTION_VARIANTS:
            raise ValueError(f"unknown Weyl action variant {variant!r}")
        out = self.zero()
        for a in self.pos:
            c = vec[self._t_index[a]]
            if not c == 0:
                j = self.t_index(self.rs.act(w, a))
                out[j] = out[j] + c
        h_old = self.h_coords_of(vec)
        if all(c == 0 for c in h_old):
            return out
        h_new = h_old if variant == "untransported" \
            else self.h_transport(w, h_old)
        for i, c in enumerate(h_new):
            out[self.npos + i] = out[self.npos + i] + c
        weight_h = h_new if variant == "equivariant" else h_old
        for a in self.rs.inversion_set(w):
            j = self._t_index[a]
            out[j] = out[j] - self.alpha_of_h(a, weight_h)
        return out

    def act_span(self, w: IntMatrix, vecs: Sequence[Sequence[FieldElement]],
                 variant: str = W_ACTION_DEFAULT) -> list[list[FieldElement]]:
        return [self.act(w, v, variant) for v in vecs]


def weyl_action_report(rs: RootSystem, field: CyclotomicField,
                       seed: int = 0) -> dict:
    """Which action variants satisfy which structural requirements.

    Checks, per variant: the group law on all pairs of Weyl elements,
    transport of the canonical shift (w.delta(h) = delta(w.h)), and
    transport of regular Bethe elements (w.B(point,h) = B(w.point,w.h)).
    The variant passing all three is reported as selected.
    """
    import random
    rng = random.Random(f"weyl-action-{rs.label}-{seed}")
    space = HolonomySpace(rs, field)
    n = rs.rank
    words = rs.weyl_elements()
    elements = list(words)
    if len(elements) ** 2 <= 4096:
        pairs = [(w1, w2) for w1 in elements for w2 in elements]
    else:
        pairs = [(elements[rng.randrange(len(elements))],
                  elements[rng.randrange(len(elements))])
                 for _ in range(2048)]
    h_basis = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    test_vecs = [space.vector(h_coords=h) for h in h_basis]
    test_vecs += [space.vector({a: 1}) for a in rs.positive_roots[:2]]

    point = None
    while point is None:
        cand = tuple(field.from_rational(Fraction(rng.randint(2, 50),
                                                  rng.randint(2, 50)))
                     for _ in range(n))
        if all(not space._eval(cand, a).is_one() for a in rs.positive_roots):
            point = cand

    report: dict = {"checked_pairs": len(pairs), "variants": {}}
    for variant in W_ACTION_VARIANTS:
        group_law = all(
            space.act(rs.matrix_of_word(words[w1] + words[w2]), v, variant)
            == space.act(w1, space.act(w2, v, variant), variant)
            for w1, w2 in pairs for v in test_vecs)
        delta_ok = all(
            space.act(w, space.delta(h), variant)
            == space.delta(space.h_transport(w, h))
            for w in elements for h in h_basis)
        bethe_ok = all(
            space.act(w, space.bethe(point, h), variant)
            == space.bethe(transported_point(rs, space, w, point),
                           space.h_transport(w, h))
            for w in elements for h in h_basis)
        report["variants"][variant] = {
            "group_law": group_law,
            "delta_transport": delta_ok,
            "bethe_transport": bethe_ok,
        }
    selected = [v for v, r in report["variants"].items() if all(r.values())]
    report["selected"] = selected[0] if len(selected) == 1 else selected
    return report


def _columns_of_inverse(rs: RootSystem, w: IntMatrix) -> list[Coords]:
    """Coordinate vectors whose point-evaluations give the w-moved point.

    e^{alpha_i}(w.y) = e^{w^{-1} alpha_i}(y); column i of w^{-1} is the
    coordinate tuple of w^{-1} alpha_i.
    """
    winv = rs.inverse_matrix(w)
    n = rs.rank
    return [tuple(winv[r][i] for r in range(n)) for i in range(n)]


def transported_point(rs: RootSystem, space: HolonomySpace, w: IntMatrix,
                      point: Sequence[FieldElement]) -> tuple:
    return tuple(space._eval(point, col) for col in _columns_of_inverse(rs, w))


# ----------------------------------------------------------------------
# points of the compactified family and their limit subspaces


@dataclass
class XPoint:
    """A point of the degenerate family, stored untwisted plus a twist.

    subset: simple-root indices cut out by the ambient stratum; point:
    exact torus coordinates aligned with subset; chart: maximal nested
    family on the base of the point's centralizer; tvals: chart
    coordinates (zeros mark boundary divisors); word: Weyl twist applied
    after everything else.
    """

    rs: RootSystem
    field: CyclotomicField
    word: tuple[int, ...]
    subset: tuple[int, ...]
    point: tuple[FieldElement, ...]
    chart: Chart
    tvals: tuple[Fraction, ...]

    def __post_init__(self):
        self.w = self.rs.matrix_of_word(self.word)
        self.space = HolonomySpace(self.rs, self.field)
        self.sub_pos = self.rs.roots_with_support_in(self.subset)
        self.centralized = [a for a in self.sub_pos if self._eval_at(a).is_one()]
        base = self.rs.base_of(self.centralized)
        if tuple(base) != self.chart.base:
            raise ValueError("chart base does not match the point's centralizer")
        if len(self.tvals) != len(self.chart.sets):
            raise ValueError("one chart coordinate required per member")
        if not self.chart.is_generic(self.tvals):
            raise ValueError("chart coordinates hit a residual hypersurface")

    def _eval_at(self, alpha: Coords) -> FieldElement:
        out = self.field.one()
        for i, idx in enumerate(self.subset):
            k = alpha[idx]
            if k:
                out = out * self.point[i] ** k
        return out

    # ------------------------------------------------------------------

    def untwisted_generators(self) -> list[list[FieldElement]]:
        """tau-carrying generators for h killing the centralizer, plus the
        chart family of the centralizer; together always rank-many."""
        space = self.space
        n = self.rs.rank
        gens: list[list[FieldElement]] = []
        cen_rows = [[Fraction(c) for c in a] for a in self.centralized]
        if cen_rows:
            h_basis = nullspace(cen_rows)
        else:
            h_basis = [[Fraction(int(i == j)) for j in range(n)]
                       for i in range(n)]
        outside = [a for a in self.sub_pos if a not in set(self.centralized)]
        for h in h_basis:
            terms = {}
            for a in outside:
                u = self._eval_at(a)
                ah = space.alpha_of_h(a, h)
                terms[a] = -(u / (u - 1)) * ah
            gens.append(space.vector(terms, h))
        for v in range(len(self.chart.base)):
            coeffs = self.chart.hamiltonian_coeffs(v, self.tvals)
            gens.append(space.vector(dict(coeffs)))
        return gens

    def subspace(self) -> list[list[FieldElement]]:
        return self.space.act_span(self.w, self.untwisted_generators())

    def signature(self) -> tuple:
        return (self.word, self.subset,
                tuple(str(y) for y in self.point),
                tuple(tuple(sorted(s)) for s in self.chart.sets),
                tuple(str(t) for t in self.tvals))

    def to_dict(self) -> dict:
        return {
            "schema": 1,
            "type": self.rs.label,
            "field_order": self.field.order,
            "w": [i + 1 for i in self.word],
            "I": [i + 1 for i in self.subset],
            "y": [str(y) for y in self.point],
            "S": [[v + 1 for v in sorted(s)] for s in self.chart.sets],
            "t": [str(t) for t in self.tvals],
        }


def xpoint_from_dict(data: dict) -> XPoint:
    from .roots import root_system
    rs = root_system(data["type"])
    field = CyclotomicField(int(data.get("field_order", 6)))
    word = tuple(int(i) - 1 for i in data.get("w", []))
    subset = tuple(sorted(int(i) - 1 for i in data.get("I", [])))
    if any(i < 0 or i >= rs.rank for i in subset):
        raise ValueError("stratum indices out of range")
    if any(i < 0 or i >= rs.rank for i in word):
        raise ValueError("word letters out of range")
    y = tuple(field.parse(s) for s in data.get("y", []))
    if len(y) != len(subset):
        raise ValueError("need one coordinate per stratum index")
    # centralizer and its base determine the chart vertex set
    space_rs = rs
    sub_pos = space_rs.roots_with_support_in(subset)

    def eval_at(alpha):
        out = field.one()
        for i, idx in enumerate(subset):
            if alpha[idx]:
                out = out * y[i] ** alpha[idx]
        return out

    centralized = [a for a in sub_pos if eval_at(a).is_one()]
    base = rs.base_of(centralized)
    sets = [frozenset(int(v) - 1 for v in s) for s in data.get("S", [])]
    for s in sets:
        if any(v < 0 or v >= len(base) for v in s):
            raise ValueError("chart member vertex out of range")
    chart = Chart(base, centralized, sets)
    tvals = tuple(Fraction(t) for t in data.get("t", []))
    return XPoint(rs, field, word, subset, y, chart, tvals)


# ----------------------------------------------------------------------
# reading the data back off a limit subspace (untwisted points)


@dataclass
class RecoveredData:
    centralized_pos: tuple[Coords, ...]
    weight_profile: dict[Coords, FieldElement]   # g_alpha, one per readable root
    unit_values: dict[Coords, FieldElement]      # recovered e^alpha where g != 0
    vanishing: tuple[Coords, ...]                # roots with g_alpha = 0


def recover_data(space: HolonomySpace, vectors: Sequence[Sequence[FieldElement]]
                 ) -> RecoveredData:
    """Invert subspace construction for an untwisted point.

    Row reduce with tau columns leading: tau-free rows reveal the
    centralizer (their t-support), tau-carrying rows reveal the weight
    u/(u-1) on every root not spanned by the centralizer; weight 0 marks
    roots killed at the boundary of the ambient stratum.
    """
    n = space.rs.rank
    perm = list(range(space.npos, space.npos + n)) + list(range(space.npos))
    rows = [[space.field.coerce(v[j]) for j in perm] for v in vectors]
    red, pivots = rref(rows)
    t_rows = [r for r, p in zip(red, pivots) if p >= n]
    tau_rows = [r for r, p in zip(red, pivots) if p < n]
    support: set[Coords] = set()
    for r in t_rows:
        for k, a in enumerate(space.pos):
            if not r[n + k] == 0:
                support.add(a)
    cen = tuple(sorted(support, key=lambda c: (sum(c), c)))
    cen_rows = [[Fraction(x) for x in a] for a in cen]
    profile: dict[Coords, FieldElement] = {}
    units: dict[Coords, FieldElement] = {}
    vanishing = []
    for k, a in enumerate(space.pos):
        if cen_rows and mat_rank(cen_rows + [[Fraction(x) for x in a]]) == \
                mat_rank(cen_rows):
            continue  # inside the centralizer span: no tau row sees it
        g = None
        for r in tau_rows:
            ah = space.alpha_of_h(a, r[:n])
            if ah == 0:
                continue
            cand = -r[n + k] / ah
            if g is None:
                g = cand
            elif not g == cand:
                raise ValueError(f"inconsistent weight profile at root {a}")
        if g is None:
            continue
        profile[a] = space.field.coerce(g)
        if profile[a].is_zero():
            vanishing.append(a)
        else:
            units[a] = profile[a] / (profile[a] - 1)
    return RecoveredData(cen, profile, units, tuple(vanishing))


# ----------------------------------------------------------------------
# sampling helpers used by checks and the CLI


def sample_xpoints(rs: RootSystem, field: CyclotomicField, seed: int,
                   count: int) -> list[XPoint]:
    """A deterministic pool of pairwise-distinct normalized points.

    Covers the stratum inventory: the open stratum, smaller ambient
    strata, torsion layers, boundary chart coordinates, and Weyl twists.
    Chart coordinates are normalized so every maximal member carries 1.
    """
    import random
    from .layers import enumerate_layers, generic_point

    rng = random.Random(f"xpoints-{rs.label}-{seed}")
    n = rs.rank
    words = sorted(rs.weyl_elements().values(), key=lambda w: (len(w), w))
    out: list[XPoint] = []
    seen: set[tuple] = set()
    subsets = [tuple(i for i in range(n) if m >> i & 1) for m in range(1 << n)]
    subsets.sort(key=lambda s: -len(s))
    layer_cache: dict[tuple[int, ...], list] = {}
    attempts = 0
    while len(out) < count and attempts < count * 40:
        attempts += 1
        subset = subsets[rng.randrange(len(subsets))] if rng.random() < 0.5 \
            else tuple(range(n))
        amb = RootAmbient.restricted(rs, subset, field)
        if subset not in layer_cache:
            layer_cache[subset] = enumerate_layers(amb)
        layers = layer_cache[subset]
        layer = layers[rng.randrange(len(layers))]
        try:
            y = generic_point(amb, layer, seed=rng.randrange(10 ** 6))
        except RuntimeError:
            continue
        cen = [_to_ambient(a, subset, n) for a in layer.roots_pos]
        base = rs.base_of(cen)
        edges = [(i, j) for i in range(len(base)) for j in range(i + 1, len(base))
                 if rs.inner(base[i], base[j]) != 0]
        families = maximal_nested_sets(len(base), edges)
        sets = families[rng.randrange(len(families))] if families else ()
        chart = Chart(base, cen, sets)
        tvals = []
        tops = [s for s in chart.sets
                if not any(s < q for q in chart.sets)]
        for s in chart.sets:
            if s in tops:
                tvals.append(Fraction(1))
            elif rng.random() < 0.35:
                tvals.append(Fraction(0))
            else:
                tvals.append(Fraction(rng.randint(1, 40), rng.randint(1, 40)))
        if not chart.is_generic(tvals):
            continue
        word = words[rng.randrange(len(words))] if rng.random() < 0.4 else ()
        try:
            x = XPoint(rs, field, word, subset, y, chart, tuple(tvals))
        except ValueError:
            continue
        sig = x.signature()
        if sig in seen:
            continue
        seen.add(sig)
        out.append(x)
    if len(out) < count:
        raise RuntimeError(f"could only sample {len(out)} points")
    return out


def _to_ambient(coords: Sequence[int], subset: Sequence[int], n: int) -> Coords:
    full = [0] * n
    for c, idx in zip(coords, subset):
        full[idx] = c
    return tuple(full)


def chart_only(x: XPoint) -> bool:
    """True when the centralizer has full rank: the tau-carrying part of
    the subspace is empty, so the subspace cannot see the torus point."""
    rows = [[Fraction(c) for c in a] for a in x.centralized]
    return bool(rows) and mat_rank(rows) == x.rs.rank


def injectivity_pool(rs: RootSystem, field: CyclotomicField, seed: int,
                     count: int) -> list[XPoint]:
    """Pool for distinctness checks.  Points whose subspace provably
    ignores the torus coordinate are deduped by their visible data (twist,
    centralizer, chart) instead of by the coordinate itself."""
    pts = sample_xpoints(rs, field, seed, count * 3)
    out: list[XPoint] = []
    seen: set[tuple] = set()
    for x in pts:
        if chart_only(x):
            key = ("chart-only", x.word, tuple(x.centralized),
                   tuple(tuple(sorted(s)) for s in x.chart.sets),
                   tuple(str(t) for t in x.tvals))
        else:
            key = x.signature()
        if key in seen:
            continue
        seen.add(key)
        out.append(x)
        if len(out) == count:
            break
    if len(out) < count:
        raise RuntimeError(f"could only assemble {len(out)} distinct points")
    return out


def subspaces_equal(space: HolonomySpace, a, b) -> bool:
    return row_space_equal(a, b)
