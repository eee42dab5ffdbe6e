"""Chamber enumeration for central rational hyperplane arrangements, wall
adjacency, point location, and the full-hyperplane criterion for fans.

Chambers are sign vectors over the hyperplane list together with an exact
interior witness. Enumeration is by incremental hyperplane insertion: a
chamber splits when its closure meets both sides of the new hyperplane, which
is two exact feasibility questions. Each chamber carries the (superset of)
facet constraints inherited from its parent, so feasibility systems stay small.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from . import cones
from .errors import (DegenerateHyperplane, InconsistentInput, MalformedFan,
                     OffAmbient, OnWall)
from .exactlin import (Mat, as_vec, canonical_normal, dot, is_zero_vec,
                       normalize_witness, primitive, solve_strict_feasible)


@dataclass(frozen=True)
class Hyperplane:
    """Central hyperplane as a primitive integer covector, first nonzero
    entry positive; proportional inputs dedupe to the same Hyperplane."""

    normal: tuple

    @staticmethod
    def from_covector(c):
        return Hyperplane(canonical_normal(c))

    def __call__(self, x):
        return dot(as_vec(self.normal), x)


@dataclass(frozen=True)
class Arrangement:
    dim: int
    hyperplanes: tuple
    equalities: tuple = ()

    def normals(self):
        return [as_vec(h.normal) for h in self.hyperplanes]

    def subspace_basis(self):
        if not self.equalities:
            return [tuple(Fraction(int(i == j)) for j in range(self.dim))
                    for i in range(self.dim)]
        return Mat([as_vec(e) for e in self.equalities]).kernel_basis()

    def to_json(self):
        return {
            "dim": self.dim,
            "equalities": [[int(x) for x in primitive(e)] for e in self.equalities],
            "normals": [list(h.normal) for h in self.hyperplanes],
        }


@dataclass(frozen=True)
class Chamber:
    signs: tuple          # +1/-1 per hyperplane
    witness: tuple        # exact interior point
    facet_constraints: tuple = field(default=(), compare=False)

    def sign_string(self):
        return "".join("+" if s > 0 else "-" for s in self.signs)

    def to_json(self):
        return {"signs": self.sign_string(),
                "witness": [str(x) for x in self.witness]}


@dataclass(frozen=True)
class WallGraph:
    nodes: tuple          # chamber indices
    edges: tuple          # (chamber, chamber, hyperplane index), chamber < chamber

    def neighbors(self, c):
        out = []
        for a, b, h in self.edges:
            if a == c:
                out.append((b, h))
            elif b == c:
                out.append((a, h))
        return out

    def to_json(self):
        return {"nodes": list(self.nodes),
                "edges": [list(e) for e in self.edges]}


@dataclass(frozen=True)
class Fan:
    dim: int
    maximal_cones: tuple  # each a tuple of primitive integer rays

    def to_json(self):
        return {"dim": self.dim,
                "cones": [{"rays": [list(r) for r in c]}
                          for c in self.maximal_cones]}

    @staticmethod
    def from_json(doc):
        return Fan(int(doc["dim"]),
                   tuple(tuple(tuple(int(x) for x in r) for r in c["rays"])
                         for c in doc["cones"]))


def build_arrangement(covectors, equalities=(), dim=None) -> Arrangement:
    """Canonicalize, dedupe, and sort; input order never affects the result."""
    if dim is None:
        raise DegenerateHyperplane("ambient dimension required")
    eqs = tuple(as_vec(e) for e in equalities)
    basis = Mat([list(e) for e in eqs]).kernel_basis() if eqs else None
    seen = {}
    for c in covectors:
        c = as_vec(c)
        if len(c) != dim:
            raise DegenerateHyperplane(f"covector length {len(c)} != dim {dim}")
        if basis is not None:
            restricted = [dot(c, b) for b in basis]
            if all(x == 0 for x in restricted):
                raise DegenerateHyperplane(
                    f"covector {tuple(c)} vanishes on the ambient subspace")
        elif is_zero_vec(c):
            raise DegenerateHyperplane("zero covector")
        h = Hyperplane.from_covector(c)
        seen[h.normal] = h
    hyps = tuple(seen[k] for k in sorted(seen))
    return Arrangement(dim, hyps, eqs)


def _sign(x):
    return 1 if x > 0 else (-1 if x < 0 else 0)


def _step_past_wall(witness, side, normal, lifted, facet_constraints, equalities):
    """Try to produce a witness just across {normal = 0} from a chamber,
    staying inside its other facets. Returns a point or None (inconclusive)."""
    nd = dot(normal, lifted)
    if nd == 0:
        return None
    v = dot(normal, witness)
    t_star = side * v / nd  # walk against the current side
    p = tuple(w - t_star * side * d for w, d in zip(witness, lifted))
    slopes = []
    for g in facet_constraints:
        gp = dot(g, p)
        if gp <= 0:
            return None  # wall is not met in this facet's interior
        slopes.append((gp, side * dot(g, lifted)))
    eps_bound = min((gp / gd for gp, gd in slopes if gd > 0), default=None)
    eps = t_star if t_star > 0 else Fraction(1)
    if eps_bound is not None:
        eps = min(eps, eps_bound / 2)
    q = tuple(w - (t_star + eps) * side * d for w, d in zip(witness, lifted))
    if any(dot(e, q) != 0 for e in equalities):
        return None
    return normalize_witness(q)


def chambers(arr: Arrangement):
    """All realizable sign vectors with exact witnesses, sorted by sign vector
    ('+' before '-')."""
    normals = arr.normals()
    eqs = [as_vec(e) for e in arr.equalities]
    basis = arr.subspace_basis()
    zero = tuple(Fraction(0) for _ in range(arr.dim))
    # lift of each normal into the ambient subspace (for witness stepping)
    lifts = []
    for n in normals:
        coeffs = [dot(n, b) for b in basis]
        lift = [Fraction(0)] * arr.dim
        for c, b in zip(coeffs, basis):
            if c != 0:
                for j in range(arr.dim):
                    lift[j] += c * b[j]
        lifts.append(tuple(lift))

    current = [((), zero, ())]  # (signs, witness, facet constraints)
    for k, n in enumerate(normals):
        nxt = []
        for signs, w, facets in current:
            v = dot(n, w)
            s = _sign(v)
            found = {}
            if s != 0:
                found[s] = w
                other = [-s]
            else:
                other = [1, -1]
            for side in other:
                cand = None
                if s != 0:
                    cand = _step_past_wall(w, s, n, lifts[k], facets, eqs)
                if cand is None:
                    row = tuple(side * x for x in n)
                    cand = solve_strict_feasible(list(facets) + [row], eqs, arr.dim)
                if cand is not None:
                    found[side] = cand
            split = len(found) == 2
            for side, wit in sorted(found.items(), reverse=True):
                f = facets + (tuple(side * x for x in n),) if split else facets
                nxt.append((signs + (side,), wit, f))
        current = nxt
    out = [Chamber(signs, w, facets) for signs, w, facets in current]
    out.sort(key=lambda c: tuple(0 if s > 0 else 1 for s in c.signs))
    return out


def _check_chambers(arr, chs):
    normals = arr.normals()
    seen = set()
    for c in chs:
        if len(c.signs) != len(normals):
            raise InconsistentInput("sign vector length mismatch")
        if c.signs in seen:
            raise InconsistentInput("duplicate sign vector")
        seen.add(c.signs)
        for n, s in zip(normals, c.signs):
            if _sign(dot(n, c.witness)) != s:
                raise InconsistentInput("witness does not realize its signs")
        for e in arr.equalities:
            if dot(as_vec(e), c.witness) != 0:
                raise InconsistentInput("witness violates ambient equality")


def chamber_facets(arr: Arrangement, chamber: Chamber, chs=None):
    """Hyperplane indices spanning full-dimensional facets of the chamber.

    Hyperplane k is a facet exactly when flipping sign k gives another
    realizable sign vector: the witness segment between the two chambers
    crosses {n_k = 0} at a point that is strict for every other hyperplane,
    and conversely a facet point can be pushed slightly across the wall.
    With the full chamber list this is a set lookup; without it, each
    candidate is one exact feasibility question.
    """
    normals = arr.normals()
    if chs is not None:
        realizable = {c.signs for c in chs}
        return [k for k in range(len(normals))
                if tuple(-s if j == k else s
                         for j, s in enumerate(chamber.signs)) in realizable]
    eqs = list(arr.equalities)
    out = []
    for k, n in enumerate(normals):
        strict = [tuple(s * x for x in m)
                  for j, (m, s) in enumerate(zip(normals, chamber.signs)) if j != k]
        # prune with the inherited facet candidates when available
        cands = set(chamber.facet_constraints)
        if cands:
            signed = tuple(chamber.signs[k] * x for x in n)
            if signed not in cands:
                continue
            strict = [g for g in cands if g != signed]
        if solve_strict_feasible(strict, eqs + [n], arr.dim) is not None:
            out.append(k)
    return out


def wall_graph(arr: Arrangement, chs) -> WallGraph:
    """Edges are exactly the full-dimensional shared facets."""
    _check_chambers(arr, chs)
    index = {c.signs: i for i, c in enumerate(chs)}
    edges = set()
    for i, c in enumerate(chs):
        for k in range(len(c.signs)):
            flipped = tuple(-s if j == k else s for j, s in enumerate(c.signs))
            j = index.get(flipped)
            if j is not None and j > i:
                edges.add((i, j, k))
    return WallGraph(tuple(range(len(chs))), tuple(sorted(edges)))


def locate(arr: Arrangement, p, chs=None):
    """Chamber index of p, or raise OnWall with the wall indices."""
    p = as_vec(p)
    for e in arr.equalities:
        if dot(as_vec(e), p) != 0:
            raise OffAmbient("point violates an ambient equality")
    values = [dot(n, p) for n in arr.normals()]
    walls = tuple(i for i, v in enumerate(values) if v == 0)
    if walls:
        raise OnWall(walls)
    signs = tuple(_sign(v) for v in values)
    if chs is None:
        chs = chambers(arr)
    for i, c in enumerate(chs):
        if c.signs == signs:
            return i
    raise InconsistentInput("no chamber with the point's sign vector")


def chamber_cone_key(arr, chamber, facet_indices):
    normals = arr.normals()
    return cones.cone_key(
        tuple(chamber.signs[k] * x for x in normals[k]) for k in facet_indices)


def fan_of_chambers(arr: Arrangement, chs=None) -> Fan:
    """The chamber fan, with generating rays per maximal cone."""
    if chs is None:
        chs = chambers(arr)
    normals = arr.normals()
    eqs = list(arr.equalities)
    cone_list = []
    for c in chs:
        fac = chamber_facets(arr, c, chs)
        ineqs = [tuple(c.signs[k] * x for x in normals[k]) for k in fac]
        rays = cones.generating_rays(ineqs, eqs, arr.dim)
        cone_list.append(tuple(rays))
    return Fan(arr.dim, tuple(cone_list))


def is_arrangement_induced(fan: Fan):
    """Is the fan the chamber fan of the hyperplanes spanned by its own walls?

    Returns (True, []) or (False, offending) where offending lists the
    hyperplanes that cut through the interior of some input cone.
    """
    if not fan.maximal_cones:
        raise MalformedFan("fan has no maximal cones")
    facets_per_cone = []
    for rays in fan.maximal_cones:
        rays = [as_vec(r) for r in rays]
        if any(is_zero_vec(r) for r in rays):
            raise MalformedFan("zero ray")
        if cones.span_rank(rays, fan.dim) != fan.dim:
            raise MalformedFan("maximal cone is not full-dimensional")
        facets = cones.facet_normals_from_rays(rays, fan.dim)
        facets_per_cone.append(facets)
    for i in range(len(facets_per_cone)):
        for j in range(i + 1, len(facets_per_cone)):
            if cones.interiors_overlap(facets_per_cone[i], facets_per_cone[j],
                                       fan.dim):
                raise MalformedFan(f"cones {i} and {j} overlap")
            if not cones.intersection_is_common_face(
                    facets_per_cone[i], facets_per_cone[j], fan.dim):
                raise MalformedFan(f"cones {i} and {j} do not meet in a face")

    covectors = [n for facets in facets_per_cone for n in facets]
    arr = build_arrangement(covectors, (), fan.dim)
    chs = chambers(arr)
    chamber_keys = set()
    for c in chs:
        chamber_keys.add(chamber_cone_key(arr, c, chamber_facets(arr, c, chs)))
    input_keys = {cones.cone_key(f) for f in facets_per_cone}
    if input_keys == chamber_keys:
        return True, []
    offending = []
    for h in arr.hyperplanes:
        if any(cones.splits_cone(h.normal, f, fan.dim) for f in facets_per_cone):
            offending.append(h)
    return False, offending
