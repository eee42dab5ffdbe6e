"""The A-type slice family: discriminants, fibers, alpha, rays, lookups."""

import random
from fractions import Fraction

import pytest

from chambergeo.arrangement import locate
from chambergeo.errors import (InconsistentInput, InvalidType, OnWall,
                               UnknownTag)
from chambergeo.exactlin import poly_discriminant
from chambergeo.rootsys import CartanType
from chambergeo.slices import (SlicePoint, alpha_map, ample_chamber_rays,
                               elementary_symmetric_coeffs, fiber_is_singular,
                               singularity_types, slice_family,
                               slodowy_h2_type)
from conftest import braid_arrangement


def random_slice_point(rng, n):
    s = [Fraction(rng.randint(-12, 12), rng.randint(1, 6))
         for _ in range(n - 1)]
    s.append(-sum(s))
    return SlicePoint(tuple(s))


def vandermonde_squared(s):
    prod = Fraction(1)
    for i in range(len(s)):
        for j in range(i + 1, len(s)):
            prod *= (s[i] - s[j]) ** 2
    return prod


def test_slice_point_validation():
    with pytest.raises(InconsistentInput):
        SlicePoint((1, 1))
    with pytest.raises(InvalidType):
        SlicePoint((0,))


def test_elementary_symmetric_coeffs():
    assert elementary_symmetric_coeffs(SlicePoint((1, -1))) == (0, -1)
    assert elementary_symmetric_coeffs(SlicePoint((1, 2, -3))) == (0, -7, 6)
    assert elementary_symmetric_coeffs(SlicePoint((0, 0, 0))) == (0, 0, 0)


def test_fiber_singularity_detection():
    singular, pairs, zvals = fiber_is_singular(SlicePoint((1, 1, -2)))
    assert singular and pairs == ((1, 2),) and zvals == (1,)
    singular, pairs, zvals = fiber_is_singular(SlicePoint((0, 1, -1)))
    assert not singular and pairs == () and zvals == ()


def test_singularity_types():
    assert singularity_types(SlicePoint((0, 0, 0, 0))) == ("A3",)
    assert singularity_types(SlicePoint((1, 1, -1, -1))) == ("A1", "A1")
    assert singularity_types(SlicePoint((0, 1, -1))) == ()


def test_types_agree_with_jacobian_rank_oracle():
    """A_{m-1} at a root of multiplicity m: f and the first m-1 derivatives
    vanish there and the m-th does not."""
    for coords in ((1, 1, -2), (1, 1, -1, -1), (0, 0, 0), (2, 2, 2, -6)):
        p = SlicePoint(coords)
        f = p.poly()
        for z0 in set(p.s):
            m = sum(1 for x in p.s if x == z0)
            g = f
            for k in range(m):
                assert g(z0) == 0
                g = g.derivative()
            assert g(z0) != 0
        labels = sorted(f"A{m - 1}" for m in
                        (sum(1 for x in p.s if x == v) for v in set(p.s))
                        if m >= 2)
        assert sorted(singularity_types(p)) == labels


def test_discriminant_identity_random():
    rng = random.Random(11)
    for _ in range(60):
        n = rng.randint(2, 5)
        p = random_slice_point(rng, n)
        assert poly_discriminant(p.poly()) == vandermonde_squared(p.s)


def test_singularity_agrees_with_wall_membership():
    rng = random.Random(13)
    arrs = {n: braid_arrangement(n) for n in (3, 4)}
    for _ in range(30):
        n = rng.choice((3, 4))
        p = random_slice_point(rng, n)
        singular = fiber_is_singular(p)[0]
        try:
            locate(arrs[n], p.s)
            on_wall = False
        except OnWall:
            on_wall = True
        assert singular == on_wall


def test_alpha_gram_identity():
    for n in range(2, 9):
        alpha, ok = alpha_map(n)
        assert ok
        assert alpha.rank() == n - 1


def test_rays_formula_and_pairing():
    assert ample_chamber_rays(2) == ((-1, 1),)
    assert ample_chamber_rays(3) == ((-2, 1, 1), (-1, -1, 2))
    for n in range(2, 7):
        rays = ample_chamber_rays(n)
        alpha, _ = alpha_map(n)
        assert len(rays) == n - 1
        for i, r in enumerate(rays):
            assert sum(r) == 0
            for j in range(n - 1):
                pairing = sum(r[k] * alpha.rows[k][j] for k in range(n))
                assert pairing == (-n if i == j else 0)


def test_slodowy_lookup():
    assert slodowy_h2_type(CartanType("B", 3), "subregular") == \
        CartanType("A", 5)
    assert slodowy_h2_type(CartanType("C", 3), "subregular") == \
        CartanType("D", 4)
    assert slodowy_h2_type(CartanType("G", 2), "subregular") == \
        CartanType("D", 4)
    assert slodowy_h2_type(CartanType("F", 4), "subregular") == \
        CartanType("E", 6)
    assert slodowy_h2_type(CartanType("G", 2), "8dim") == CartanType("C", 3)
    assert slodowy_h2_type(CartanType("C", 4), "pair-n-n") == \
        CartanType("D", 5)
    assert slodowy_h2_type(CartanType("A", 4)) == CartanType("A", 4)
    with pytest.raises(UnknownTag):
        slodowy_h2_type(CartanType("A", 4), "8dim")
    with pytest.raises(UnknownTag):
        slodowy_h2_type(CartanType("B", 2), "nonsense")


def test_slice_family():
    fam = slice_family(4)
    assert fam.weight == 2
    assert len(fam.arrangement.hyperplanes) == 6
    assert fam.alpha.rows[0] == (1, 0, 0)
