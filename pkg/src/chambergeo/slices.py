"""The A_{n-1} slice family: discriminant locus, fiber singularities, the
isometry alpha onto the sum-zero hyperplane, and ample-chamber rays.

A point s of V = {sum s_i = 0} determines the fiber x^2 + y^2 + f(z) with
f = prod (z - s_i); the fiber is singular exactly on the coordinate-collision
hyperplanes L_ij, detected here through the exact polynomial discriminant.
"""

import json
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from itertools import combinations

from . import cones
from .arrangement import build_arrangement
from .errors import InconsistentInput, InvalidType, UnknownTag
from .exactlin import Mat, RatPoly, as_vec, poly_discriminant, primitive
from .rootsys import CartanType, ambient_realization_A


@dataclass(frozen=True)
class SlicePoint:
    s: tuple

    def __post_init__(self):
        s = as_vec(self.s)
        if len(s) < 2:
            raise InvalidType("slice point needs n >= 2 coordinates")
        if sum(s) != 0:
            raise InconsistentInput("coordinates must sum to zero exactly")
        object.__setattr__(self, "s", s)

    @property
    def n(self):
        return len(self.s)

    def poly(self) -> RatPoly:
        return RatPoly.from_roots(self.s)


def slice_arrangement(n: int):
    """The L_ij arrangement {s_i = s_j} on V, C(n,2) hyperplanes."""
    covs = []
    for i, j in combinations(range(n), 2):
        c = [0] * n
        c[i], c[j] = 1, -1
        covs.append(tuple(c))
    return build_arrangement(covs, [(1,) * n], n)


@dataclass(frozen=True)
class SliceFamily:
    n: int
    arrangement: object
    alpha: Mat
    weight: int = 2


def slice_family(n: int) -> SliceFamily:
    alpha, ok = alpha_map(n)
    if not ok:
        raise InconsistentInput("alpha fails the Gram identity")
    return SliceFamily(n, slice_arrangement(n), alpha)


def elementary_symmetric_coeffs(p: SlicePoint):
    """(sigma_1, ..., sigma_n) with prod (z - s_i) = z^n + sigma_1 z^{n-1}
    + ... + sigma_n; sigma_1 = 0 on V."""
    f = p.poly()
    n = p.n
    return tuple(f.coeffs[n - i] for i in range(1, n + 1))


def fiber_is_singular(p: SlicePoint):
    """(singular?, colliding 1-based index pairs, repeated z-values).

    Singularity is read off the exact discriminant of prod (z - s_i); the
    singular points of x^2 + y^2 + f(z) are (0, 0, z_0) at repeated roots z_0.
    """
    singular = poly_discriminant(p.poly()) == 0
    pairs = tuple((i + 1, j + 1) for i, j in combinations(range(p.n), 2)
                  if p.s[i] == p.s[j])
    zvals = tuple(sorted({p.s[i - 1] for i, _ in pairs}))
    if singular != bool(pairs):
        raise InconsistentInput("discriminant disagrees with collisions")
    return singular, pairs, zvals


def singularity_types(p: SlicePoint):
    """One A_{m-1} label per value of multiplicity m >= 2, sorted."""
    mult = {}
    for x in p.s:
        mult[x] = mult.get(x, 0) + 1
    labels = [f"A{m - 1}" for m in mult.values() if m >= 2]
    return tuple(sorted(labels, key=lambda t: int(t[1:])))


def intersection_gram(n: int) -> Mat:
    """Intersection form of the exceptional curves: diagonal -2, adjacent +1."""
    g = [[0] * (n - 1) for _ in range(n - 1)]
    for i in range(n - 1):
        g[i][i] = -2
        if i + 1 < n - 1:
            g[i][i + 1] = g[i + 1][i] = 1
    return Mat(g)


def alpha_map(n: int):
    """(alpha, gram_check): alpha sends [E_i] to e_i - e_{i+1}; the check is
    Gram(alpha E_i, alpha E_j) = -(intersection Gram), the sign reversal."""
    alpha = ambient_realization_A(n)
    gram = alpha.transpose() @ alpha
    expected = intersection_gram(n)
    check = gram == Mat([[-x for x in row] for row in expected.rows])
    return alpha, check


def ample_chamber_rays(n: int):
    """Rays r_i = (-n+i, ..., -n+i, i, ..., i) with -n+i repeated i times;
    they span the anti-dominant chamber closure {v_1 <= ... <= v_n} in V."""
    if n < 2:
        raise InvalidType("need n >= 2")
    rays = tuple(tuple([Fraction(-n + i)] * i + [Fraction(i)] * (n - i))
                 for i in range(1, n))
    alpha, _ = alpha_map(n)
    for i, r in enumerate(rays):
        if sum(r) != 0:
            raise InconsistentInput("ray leaves V")
        for j in range(n - 1):
            expect = -n if i == j else 0
            if sum(r[k] * alpha.rows[k][j] for k in range(n)) != expect:
                raise InconsistentInput("ray pairing <r_i, alpha(E_j)> wrong")
    # facet representation: v_j <= v_{j+1} means -(e_j - e_{j+1}) . v >= 0
    ineqs = [tuple(-x for x in col) for col in
             (tuple(alpha.rows[k][j] for k in range(n)) for j in range(n - 1))]
    expected = cones.extreme_rays(ineqs, [(1,) * n], n)
    if tuple(sorted({primitive(r) for r in rays})) != expected:
        raise InconsistentInput("rays do not cut out the anti-dominant chamber")
    return rays


def _slodowy_table():
    with resources.files(__package__).joinpath(
            "data/slodowy_table.json").open() as fh:
        return json.load(fh)


def slodowy_h2_type(ambient: CartanType, orbit_tag: str = "default"):
    """Cartan type whose Weyl chamber structure is the chamber structure of
    the slice for the tagged orbit; 'default' returns the ambient type."""
    if orbit_tag == "default":
        return ambient
    for e in _slodowy_table()["entries"]:
        if e["tag"] == orbit_tag and e["ambient"] == ambient.letter:
            a, b = e["rank"]
            return CartanType(e["result"], a * ambient.rank + b)
    raise UnknownTag(
        f"no table entry for tag {orbit_tag!r} with ambient {ambient}")
