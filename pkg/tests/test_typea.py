"""The reindexing onto the rational family with a marked origin."""

from fractions import Fraction

import pytest

from trigbethe.field import CyclotomicField
from trigbethe.typea import (RationalTarget, TrigSource,
                             image_matches_scaled_gaudin, marked_points,
                             reindex_map, sample_z, spans_match)

F6 = CyclotomicField(6)


def fracs(field, *vals):
    return tuple(field.from_rational(Fraction(v)) for v in vals)


def test_reindex_n1():
    src = TrigSource(1, F6)
    tgt = RationalTarget(1, F6)
    # tau_1 maps to -t_{01}; the lone rational element at (0, z) is t_{01}/z
    img = reindex_map(src, tgt, src.tau(1))
    vec = tgt.zero()
    tgt.add_pair(vec, 0, 1, -1)
    assert img == vec
    z = fracs(F6, 7)
    assert image_matches_scaled_gaudin(src, tgt, z, 1)


def test_reindex_fixture_n2():
    src = TrigSource(2, F6)
    tgt = RationalTarget(2, F6)
    z = fracs(F6, 2, 3)
    # u = z1/z2 = 2/3, weight -u/(u-1) = 2, so B_1 = tau_1 + 2 t_{12}
    b1 = src.bethe(z, 1)
    expected = src.zero()
    expected[src._index[(1, 2)]] = F6.from_rational(2)
    expected[len(src.pairs)] = F6.one()
    assert b1 == expected
    # image: -t_{01} + 2 t_{12}
    img = reindex_map(src, tgt, b1)
    vec = tgt.zero()
    tgt.add_pair(vec, 0, 1, -1)
    tgt.add_pair(vec, 1, 2, 2)
    assert img == vec
    # and that equals -z_1 times the rational element at (0, 2, 3)
    g1 = tgt.gaudin(marked_points(F6, z), 1)
    assert img == [-(z[0] * c) for c in g1]


def test_identity_all_indices_n2_n3():
    for n in (2, 3):
        src = TrigSource(n, F6)
        tgt = RationalTarget(n, F6)
        for seed in range(6):
            z = sample_z(F6, n, seed)
            for k in range(1, n + 1):
                assert image_matches_scaled_gaudin(src, tgt, z, k)
            assert spans_match(src, tgt, z)


def test_identity_fails_without_marked_point_scaling():
    src = TrigSource(2, F6)
    tgt = RationalTarget(2, F6)
    z = fracs(F6, 2, 3)
    img = reindex_map(src, tgt, src.bethe(z, 1))
    g1 = tgt.gaudin(marked_points(F6, z), 1)
    assert img != g1                       # unscaled comparison is false
    assert img != [z[0] * c for c in g1]   # positive scaling is false too


def test_bethe_coincident_coordinates_rejected():
    src = TrigSource(2, F6)
    with pytest.raises(ZeroDivisionError):
        src.bethe(fracs(F6, 5, 5), 1)
    with pytest.raises(ValueError):
        src.bethe(fracs(F6, 2, 3), 0)


def test_gaudin_distinct_points_required():
    tgt = RationalTarget(2, F6)
    with pytest.raises(ZeroDivisionError):
        tgt.gaudin(fracs(F6, 0, 0, 1), 1)


def test_sample_z_distinct_nonzero_deterministic():
    for n in (2, 3, 4):
        z1 = sample_z(F6, n, 11)
        z2 = sample_z(F6, n, 11)
        assert z1 == z2
        assert len(set(z1)) == n
        assert all(not v.is_zero() for v in z1)


def test_size_mismatch_rejected():
    src = TrigSource(2, F6)
    tgt = RationalTarget(3, F6)
    with pytest.raises(ValueError):
        reindex_map(src, tgt, src.tau(1))
