"""Polyhedral cone helpers: extreme rays, facet normals, and face tests.

Cones are homogeneous (apex at the origin) and rational. Sizes here are small
(desk-scale fans and chambers), so extreme rays are found by enumerating
candidate active sets rather than by double description.
"""

from fractions import Fraction
from itertools import combinations

from .exactlin import Mat, as_vec, dot, is_zero_vec, primitive, solve_strict_feasible


def span_rank(vectors, dim):
    if not vectors:
        return 0
    return Mat([as_vec(v) for v in vectors]).rank()


def extreme_rays(ineqs, equalities, dim):
    """Extreme rays of {x : a.x >= 0 (a in ineqs), e.x = 0 (e in equalities)}.

    Requires the cone to be pointed (the constraint normals span the ambient
    space); returns primitive integer rays, sorted.
    """
    ineqs = [as_vec(a) for a in ineqs]
    equalities = [as_vec(e) for e in equalities]
    eq_rank = span_rank(equalities, dim)
    t = dim - eq_rank - 1  # independent active inequalities on a ray
    if t < 0:
        return ()
    rays = set()
    for active in combinations(range(len(ineqs)), t):
        rows = equalities + [ineqs[i] for i in active]
        kernel = Mat(rows).kernel_basis() if rows else \
            [tuple(Fraction(int(i == j)) for j in range(dim)) for i in range(dim)]
        if len(kernel) != 1:
            continue
        v = kernel[0]
        pos = all(dot(a, v) >= 0 for a in ineqs)
        neg = all(dot(a, v) <= 0 for a in ineqs)
        if pos:
            rays.add(primitive(v))
        elif neg:
            rays.add(primitive(tuple(-x for x in v)))
    return tuple(sorted(rays))


def lineality_basis(ineqs, equalities, dim):
    rows = [as_vec(a) for a in ineqs] + [as_vec(e) for e in equalities]
    if not rows:
        return [tuple(Fraction(int(i == j)) for j in range(dim)) for i in range(dim)]
    return Mat(rows).kernel_basis()


def generating_rays(ineqs, equalities, dim):
    """Generators of an inequality-cut cone: extreme rays modulo lineality,
    plus +/- a basis of the lineality space."""
    lin = lineality_basis(ineqs, equalities, dim)
    # cut to the orthogonal complement of the lineality space to get pointedness
    extra_eqs = [as_vec(b) for b in lin]
    rays = extreme_rays(ineqs, list(equalities) + extra_eqs, dim)
    gens = list(rays)
    for b in lin:
        p = primitive(b)
        gens.append(p)
        gens.append(tuple(-x for x in p))
    return tuple(sorted(set(gens)))


def facet_normals_from_rays(rays, dim):
    """Inward facet normals of a full-dimensional cone given by generators.

    The facet normals are the extreme rays of the dual cone; the dual is
    pointed exactly because the primal is full-dimensional.
    """
    rays = [as_vec(r) for r in rays]
    if span_rank(rays, dim) != dim:
        raise ValueError("cone is not full-dimensional")
    return extreme_rays(rays, [], dim)


def cone_key(facet_normals):
    """Canonical, presentation-independent key for a full-dimensional cone."""
    return frozenset(primitive(n) for n in facet_normals)


def interior_point(facet_normals, equalities, dim):
    return solve_strict_feasible(facet_normals, equalities, dim)


def interiors_overlap(facets_a, facets_b, dim):
    return solve_strict_feasible(list(facets_a) + list(facets_b), (), dim) is not None


def _nonstrict_feasible_with(strict_row, nonstrict, equalities, dim):
    return solve_strict_feasible([strict_row], equalities, dim,
                                 nonstrict=nonstrict) is not None


def tight_facets_on_intersection(facets_a, facets_b, dim):
    """Indices of facets_a whose inequality is tight on all of A cap B."""
    both = list(facets_a) + list(facets_b)
    tight = []
    for i, h in enumerate(facets_a):
        # tight unless some point of A cap B has h.x > 0
        if not _nonstrict_feasible_with(h, both, (), dim):
            tight.append(i)
    return tight


def cone_contains(facets_outer, facets_inner, equalities_inner, dim):
    """Does {facets_inner >= 0, equalities_inner = 0} sit inside
    {facets_outer >= 0}?"""
    for g in facets_outer:
        neg = tuple(-x for x in as_vec(g))
        if _nonstrict_feasible_with(neg, facets_inner, equalities_inner, dim):
            return False
    return True


def intersection_is_common_face(facets_a, facets_b, dim):
    """Check that A cap B is a face of both A and B (cones intersect facially)."""
    for facets_x, facets_y in ((facets_a, facets_b), (facets_b, facets_a)):
        tight = tight_facets_on_intersection(facets_x, facets_y, dim)
        face_eqs = [facets_x[i] for i in tight]
        # the face of X spanned by the intersection must not leave Y
        if not cone_contains(facets_y, facets_x, face_eqs, dim):
            return False
    return True


def splits_cone(normal, facet_normals, dim):
    """Does the hyperplane {normal = 0} cut the open cone into two pieces?"""
    strict = list(facet_normals)
    n = as_vec(normal)
    plus = solve_strict_feasible(strict + [n], (), dim) is not None
    minus = solve_strict_feasible(strict + [tuple(-x for x in n)], (), dim) is not None
    return plus and minus
