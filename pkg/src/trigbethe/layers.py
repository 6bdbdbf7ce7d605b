"""Layers of the toric arrangement attached to a root system.

The torus Hom(Z^m, K*) is cut by the subvarieties {e^alpha = 1}, one per
positive root.  A layer is a connected component of an intersection of
these; it is encoded by a saturated sublattice (its vanishing lattice,
in Hermite form) together with a finite-order character of that lattice
giving the constant values e^v takes on the layer.

Enumeration walks linearly independent subsets B of positive roots,
saturates their span, and lists the torsion characters trivial on <B>;
a candidate is a genuine layer exactly when the roots it centralizes
still span the lattice.  Every layer arises this way from any
independent spanning subset of its centralized roots, so the walk is
complete, and candidates are deduplicated by their canonical encoding.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .field import CyclotomicField, FieldElement
from .lattice import hermite_normal_form, int_rank, smith_normal_form
from .roots import Coords, RootSystem

Point = tuple[FieldElement, ...]


@dataclass(frozen=True)
class RootAmbient:
    """Positive roots with their pairing, living in a fixed torus Z^m."""

    dim: int
    positive_roots: tuple[Coords, ...]
    gram: tuple[tuple[Fraction, ...], ...]
    field: CyclotomicField
    axis_names: tuple[str, ...]

    @classmethod
    def from_root_system(cls, rs: RootSystem, field: CyclotomicField
                         ) -> "RootAmbient":
        return cls(rs.rank, tuple(rs.positive_roots),
                   tuple(tuple(row) for row in rs.gram), field,
                   tuple(f"a{i + 1}" for i in range(rs.rank)))

    @classmethod
    def restricted(cls, rs: RootSystem, subset: Iterable[int],
                   field: CyclotomicField) -> "RootAmbient":
        """The sub-arrangement of roots supported on a set of simple roots."""
        idx = sorted(subset)
        pos = tuple(tuple(r[i] for i in idx)
                    for r in rs.roots_with_support_in(idx))
        gram = tuple(tuple(rs.gram[i][j] for j in idx) for i in idx)
        return cls(len(idx), pos, gram, field,
                   tuple(f"a{i + 1}" for i in idx))

    def inner(self, a: Sequence[int], b: Sequence[int]) -> Fraction:
        return sum(Fraction(a[i]) * self.gram[i][j] * b[j]
                   for i in range(self.dim) for j in range(self.dim))

    def evaluate(self, point: Point, coords: Sequence[int]) -> FieldElement:
        out = self.field.one()
        for y, k in zip(point, coords):
            if k:
                out = out * y ** k
        return out


@dataclass(frozen=True)
class Layer:
    """One layer: vanishing lattice basis (Hermite rows) plus character."""

    ambient_dim: int
    basis: tuple[Coords, ...]
    char_values: tuple[FieldElement, ...]
    roots_pos: tuple[Coords, ...]   # positive roots constant 1 on the layer

    @property
    def codim(self) -> int:
        return len(self.basis)

    @property
    def dim(self) -> int:
        return self.ambient_dim - len(self.basis)

    def char_eval(self, vec: Sequence[int]) -> FieldElement:
        """The constant value of e^vec on the layer; vec must lie in the lattice."""
        v = list(map(int, vec))
        field = (self.char_values[0].field if self.char_values
                 else CyclotomicField())
        out = field.one()
        for row, val in zip(self.basis, self.char_values):
            c = next(j for j, x in enumerate(row) if x)
            if v[c] % row[c] != 0:
                raise ValueError(f"{vec} is not in the layer lattice")
            q = v[c] // row[c]
            if q:
                out = out * val ** q
            v = [a - q * b for a, b in zip(v, row)]
        if any(v):
            raise ValueError(f"{vec} is not in the layer lattice")
        return out

    def contains_vector(self, vec: Sequence[int]) -> bool:
        try:
            self.char_eval(vec)
            return True
        except ValueError:
            return False

    def sort_key(self):
        return (self.codim, self.basis,
                tuple(cv.coeffs for cv in self.char_values))


def enumerate_layers(amb: RootAmbient) -> list[Layer]:
    """All layers of the arrangement, canonically ordered."""
    field = amb.field
    pos = list(amb.positive_roots)
    found: dict[tuple, Layer] = {}

    def visit(basis_rows: list[Coords]) -> None:
        sf = smith_normal_form(basis_rows, ncols=amb.dim)
        k = sf.rank
        if k != len(basis_rows):
            return
        sat = sf.saturation_basis()
        hnf = hermite_normal_form(sat)
        # characters of sat/<B>: free choice of a d_i-th root on each
        # saturation basis vector; all are automatically trivial on <B>
        options = []
        for d in sf.divisors:
            options.append([field.root_of_unity(d, j) for j in range(d)])
        choices = [[]]
        for opt in options:
            choices = [c + [o] for c in choices for o in opt]
        for vals in choices:
            def chi(u: Sequence[int]) -> FieldElement:
                coeffs = [sum(u[a] * sf.V[a][i] for a in range(amb.dim))
                          for i in range(k)]
                out = field.one()
                for v, e in zip(vals, coeffs):
                    if e:
                        out = out * v ** e
                return out

            centralized = [a for a in pos
                           if int_rank(sat + [list(a)]) == k and chi(a).is_one()]
            if int_rank(centralized) != k:
                continue
            char_on_hnf = tuple(chi(row) for row in hnf)
            key = (hnf, char_on_hnf)
            if key not in found:
                found[key] = Layer(amb.dim, hnf, char_on_hnf,
                                   tuple(sorted(centralized,
                                                key=lambda c: (sum(c), c))))

    def extend(start: int, rows: list[Coords]) -> None:
        visit(rows)
        if len(rows) == amb.dim:
            return
        for i in range(start, len(pos)):
            cand = rows + [pos[i]]
            if int_rank(cand) == len(cand):
                extend(i + 1, cand)

    extend(0, [])
    return sorted(found.values(), key=Layer.sort_key)


def full_torus_layer(amb: RootAmbient) -> Layer:
    return Layer(amb.dim, (), (), ())


def is_indecomposable(amb: RootAmbient, layer: Layer) -> bool:
    """Nonempty centralized set whose non-orthogonality graph is connected."""
    roots = layer.roots_pos
    if not roots:
        return False
    n = len(roots)
    adj = {i: set() for i in range(n)}
    for i in range(n):
        for j in range(i + 1, n):
            if amb.inner(roots[i], roots[j]) != 0:
                adj[i].add(j)
                adj[j].add(i)
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for u in adj[v]:
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return len(seen) == n


def building_set(amb: RootAmbient) -> list[Layer]:
    return [l for l in enumerate_layers(amb) if is_indecomposable(amb, l)]


def gamma_divisors(roots: Sequence[Coords], ambient_dim: int) -> list[int]:
    """Elementary divisors >1 of saturation(<roots>)/<roots>."""
    sf = smith_normal_form([list(r) for r in roots], ncols=ambient_dim)
    return sf.torsion_divisors()


def layer_contains(big: Layer, small: Layer) -> bool:
    """Is small a subvariety of big?  Lattice containment + equal constants."""
    for row, val in zip(big.basis, big.char_values):
        try:
            if not small.char_eval(row) == val:
                return False
        except ValueError:
            return False
    return True


def poset_relations(layers: Sequence[Layer]) -> list[tuple[int, int]]:
    """Pairs (i, j) with layers[i] a proper subvariety of layers[j]."""
    out = []
    for i, a in enumerate(layers):
        for j, b in enumerate(layers):
            if i != j and layer_contains(b, a):
                out.append((i, j))
    return out


def covering_relations(layers: Sequence[Layer]) -> list[tuple[int, int]]:
    rel = set(poset_relations(layers))
    covers = []
    for (i, j) in rel:
        if not any((i, k) in rel and (k, j) in rel
                   for k in range(len(layers))):
            covers.append((i, j))
    return covers


# ----------------------------------------------------------------------
# points on layers


def _extension_data(layer: Layer):
    """Smith data of the (saturated) lattice basis, for building points."""
    sf = smith_normal_form([list(r) for r in layer.basis],
                           ncols=layer.ambient_dim)
    assert all(d == 1 for d in sf.divisors), "layer lattice must be saturated"
    return sf


def point_on_layer(layer: Layer, params: Sequence[FieldElement] | None = None,
                   field: CyclotomicField | None = None) -> Point:
    """A point of the layer: character values extended by free parameters.

    params supplies the values on a complement basis of the lattice (one
    per layer dimension); omitted parameters default to 1, giving a
    canonical representative.
    """
    field = field or (layer.char_values[0].field if layer.char_values
                      else CyclotomicField())
    n = layer.ambient_dim
    sf = _extension_data(layer)
    r = sf.rank
    params = list(params or [])
    if len(params) > n - r:
        raise ValueError("too many parameters for layer dimension")
    params += [field.one()] * (n - r - len(params))
    basis_vals = [layer.char_eval(sf.Vinv[i]) for i in range(r)] + params
    point = []
    for j in range(n):
        y = field.one()
        for i in range(n):
            e = sf.V[j][i]
            if e:
                y = y * basis_vals[i] ** e
        point.append(y)
    return tuple(point)


def generic_point(amb: RootAmbient, layer: Layer, seed: int = 0,
                  max_tries: int = 64) -> Point:
    """A point of the layer avoiding every hypersurface it does not lie in."""
    rng = random.Random(("layer-point", seed, layer.basis,
                         tuple(str(v) for v in layer.char_values)).__repr__())
    on_layer = set(layer.roots_pos)
    avoid = [a for a in amb.positive_roots if a not in on_layer]
    free = layer.dim
    for _ in range(max_tries):
        params = [amb.field.from_rational(
            Fraction(rng.randint(2, 97), rng.randint(2, 97)))
            for _ in range(free)]
        pt = point_on_layer(layer, params, amb.field)
        if all(not amb.evaluate(pt, a).is_one() for a in avoid):
            return pt
    raise RuntimeError("could not find a generic point; widen the search")


def centralizer_at_point(amb: RootAmbient, point: Point) -> list[Coords]:
    """Positive roots whose character equals 1 at the point."""
    return [a for a in amb.positive_roots if amb.evaluate(point, a).is_one()]


# ----------------------------------------------------------------------
# boundary strata of the compactified picture: one sub-arrangement per
# subset of the simple roots, each contributing its own layers


def boundary_strata(rs: RootSystem, field: CyclotomicField
                    ) -> list[tuple[tuple[int, ...], Layer]]:
    out: list[tuple[tuple[int, ...], Layer]] = []
    n = rs.rank
    for mask in range(1 << n):
        subset = tuple(i for i in range(n) if mask >> i & 1)
        amb = RootAmbient.restricted(rs, subset, field)
        for layer in enumerate_layers(amb):
            out.append((subset, layer))
    return sorted(out, key=lambda p: (len(p[0]), p[0], p[1].sort_key()))


def layer_to_dict(layer: Layer) -> dict:
    return {
        "ambient_dim": layer.ambient_dim,
        "codim": layer.codim,
        "dim": layer.dim,
        "lattice_basis": [list(r) for r in layer.basis],
        "character": [str(v) for v in layer.char_values],
        "roots": [list(r) for r in layer.roots_pos],
    }
