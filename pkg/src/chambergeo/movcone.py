"""Movable-cone decomposition: ample chamber, W-action on chambers, orbit
transversal (one chamber per crepant resolution), flop graph, discriminant.

The group acts by exact rational matrices on the ambient space of the
arrangement. The movable region is a connected fundamental domain seeded at
the ample chamber, grown greedily: always adjoin the smallest-sign-vector
neighbor of the region whose W-orbit is not yet covered. The greedy choice is
a global minimum at each step, so the result does not depend on how the
frontier is traversed.
"""

from dataclasses import dataclass

from .arrangement import WallGraph, chambers, locate, wall_graph
from .errors import (DimensionMismatch, FixedChamber, InconsistentInput,
                     NotAWall, NotInvariant, BoundaryWall)
from .exactlin import Mat, as_vec, canonical_normal, dot, row_times_mat


def _action_matrices(weyl, dim):
    """Accept a WeylGroup-like object (with .elements) or a plain iterable of
    matrices; always includes the identity."""
    mats = list(getattr(weyl, "elements", weyl))
    mats = [m if isinstance(m, Mat) else Mat(m) for m in mats]
    ident = Mat.identity(dim)
    if ident not in mats:
        mats.insert(0, ident)
    return mats


def ample_chamber(arr, ample_class, chs=None):
    """Chamber index of a generic polarization; OnWall if it is not generic."""
    return locate(arr, ample_class, chs)


def weyl_chamber_action(arr, weyl, chs):
    """Permutation table of the chambers under each group element.

    Entry [g][i] is the index of the image of chamber i under element g.
    Raises NotInvariant when some element moves a hyperplane (or the ambient
    subspace) off the arrangement.
    """
    mats = _action_matrices(weyl, arr.dim)
    normals = arr.normals()
    normal_set = {h.normal for h in arr.hyperplanes}
    eqs = [as_vec(e) for e in arr.equalities]
    basis = arr.subspace_basis()
    index = {c.signs: i for i, c in enumerate(chs)}
    perms = []
    for g, m in enumerate(mats):
        if len(m.rows) != arr.dim or len(m.rows[0]) != arr.dim:
            raise DimensionMismatch(
                f"group element {g} is not a {arr.dim}x{arr.dim} matrix")
        for b in basis:
            if any(dot(e, m @ b) != 0 for e in eqs):
                raise NotInvariant(
                    f"element {g} does not preserve the ambient subspace")
        for n in normals:
            if canonical_normal(row_times_mat(n, m)) not in normal_set:
                raise NotInvariant(
                    f"element {g} maps hyperplane {tuple(n)} off the arrangement")
        perm = []
        for c in chs:
            w = m @ c.witness
            signs = tuple(1 if dot(n, w) > 0 else -1 for n in normals)
            j = index.get(signs)
            if j is None:
                raise InconsistentInput(
                    "image of a chamber witness is in no listed chamber")
            perm.append(j)
        perms.append(tuple(perm))
    return perms


@dataclass(frozen=True)
class MovDecomposition:
    arrangement: object
    weyl: tuple            # action matrices
    chambers: tuple
    wall_graph: WallGraph  # of the full arrangement
    ample_chamber: int
    mov_chambers: tuple    # sorted chamber indices
    flop_graph: WallGraph  # restricted to mov_chambers
    resolution_count: int

    def to_json(self):
        return {
            "ample_chamber": self.ample_chamber,
            "mov_chambers": list(self.mov_chambers),
            "resolution_count": self.resolution_count,
            "flop_edges": [list(e) for e in self.flop_graph.edges],
            "discriminant_normals": [list(h.normal)
                                     for h in discriminant_hyperplanes(self)],
        }


def mov_decomposition(arr, weyl, ample_class, chs=None,
                      exploration="frontier"):
    """Connected orbit transversal of the chambers, seeded at the ample one.

    The group must act freely on chambers (FixedChamber otherwise); then the
    W-translates of the selected chambers partition the chamber set and
    resolution_count * |W| equals the total chamber count. `exploration`
    picks one of two traversal strategies ("frontier" keeps an incremental
    candidate set, "rescan" recomputes it each round); both realize the same
    greedy rule and return identical decompositions.
    """
    if chs is None:
        chs = chambers(arr)
    wg = wall_graph(arr, chs)
    mats = _action_matrices(weyl, arr.dim)
    perms = weyl_chamber_action(arr, mats, chs)
    n = len(chs)
    ident = Mat.identity(arr.dim)
    for g, (m, p) in enumerate(zip(mats, perms)):
        if m != ident:
            for i in range(n):
                if p[i] == i:
                    raise FixedChamber(
                        f"group element {g} fixes chamber {i}; "
                        "the action on chambers is not free")

    neighbors = {i: [] for i in range(n)}
    for a, b, k in wg.edges:
        neighbors[a].append(b)
        neighbors[b].append(a)

    a0 = ample_chamber(arr, ample_class, chs)
    orbit = lambda i: {p[i] for p in perms}
    selected = {a0}
    covered = set(orbit(a0))
    key = [c.signs for c in chs]  # greedy order: smallest sign vector first
    rank = lambda i: tuple(0 if s > 0 else 1 for s in key[i])

    if exploration == "frontier":
        frontier = set(neighbors[a0])
        while True:
            live = [i for i in frontier if i not in covered]
            if not live:
                break
            pick = min(live, key=rank)
            selected.add(pick)
            covered.update(orbit(pick))
            frontier.update(neighbors[pick])
    elif exploration == "rescan":
        while True:
            live = [j for i in selected for j in neighbors[i]
                    if j not in covered]
            if not live:
                break
            pick = min(live, key=rank)
            selected.add(pick)
            covered.update(orbit(pick))
    else:
        raise InconsistentInput(f"unknown exploration mode {exploration!r}")

    if len(covered) != n:
        raise InconsistentInput(
            "flood fill stalled; the wall graph is not connected")
    mov = tuple(sorted(selected))
    mov_set = set(mov)
    flop_edges = tuple(e for e in wg.edges
                       if e[0] in mov_set and e[1] in mov_set)
    return MovDecomposition(arr, tuple(mats), tuple(chs),
                            wg, a0, mov, WallGraph(mov, flop_edges),
                            len(mov))


def flop(dec: MovDecomposition, chamber: int, wall: int):
    """Adjacent Mov chamber across the wall; an involution on interior walls.

    BoundaryWall when the neighbor lies outside Mov (crossing is a W-twist,
    not a flop); NotAWall when the hyperplane is not a facet of the chamber.
    """
    if chamber not in set(dec.mov_chambers):
        raise InconsistentInput(f"chamber {chamber} is not in Mov")
    signs = dec.chambers[chamber].signs
    if not 0 <= wall < len(signs):
        raise NotAWall(f"no hyperplane with index {wall}")
    flipped = tuple(-s if j == wall else s for j, s in enumerate(signs))
    for i, c in enumerate(dec.chambers):
        if c.signs == flipped:
            if i not in set(dec.mov_chambers):
                raise BoundaryWall(
                    f"wall {wall} of chamber {chamber} is on the boundary of Mov")
            return i
    raise NotAWall(f"hyperplane {wall} is not a facet of chamber {chamber}")


def discriminant_hyperplanes(dec: MovDecomposition):
    """The discriminant: the full deduplicated hyperplane set, each the span
    of a codimension-one nef-cone face."""
    return dec.arrangement.hyperplanes
