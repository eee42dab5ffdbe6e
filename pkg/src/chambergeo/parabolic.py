"""Levi-restricted arrangements and marked parabolic diagrams.

Fix a Levi set I of simple-root indices. The annihilator K of the Levi simple
roots carries the restricted arrangement cut by the functionals of the
non-Levi positive roots; its chambers correspond one-to-one with the
parabolic subgroups having that Levi part. Each chamber gets a marked diagram:
a base of the root system whose white positions span the Levi roots and whose
black roots are positive on the chamber. Crossing the wall of a black root
twists the diagram by the longest element of the subsystem generated by that
root together with the white roots attached to it.
"""

from dataclasses import dataclass
from functools import lru_cache

from .arrangement import build_arrangement, chambers, wall_graph
from .errors import InconsistentInput, InvalidType, NotAWall
from .exactlin import Mat, as_vec, canonical_normal, dot
from .rootsys import CartanType, RootSystem, build_root_system, reflection


@dataclass(frozen=True)
class MarkedDynkin:
    """A Cartan type with a proper subset of white (Levi) vertices."""

    cartan_type: CartanType
    levi: tuple

    def __post_init__(self):
        n = self.cartan_type.rank
        levi = tuple(sorted(set(self.levi)))
        if any(not 0 <= i < n for i in levi):
            raise InvalidType(f"levi indices out of range for rank {n}")
        if len(levi) >= n:
            raise InvalidType("levi set must be a proper subset of the vertices")
        object.__setattr__(self, "levi", levi)


@dataclass(frozen=True)
class ParabolicDiagram:
    base: tuple             # rank roots in simple-root coordinates
    white_positions: tuple  # indices into base spanning the Levi roots
    chamber: int            # index in the restricted arrangement

    def black_positions(self):
        white = set(self.white_positions)
        return tuple(p for p in range(len(self.base)) if p not in white)

    def black_roots(self):
        return tuple(self.base[p] for p in self.black_positions())

    def to_json(self):
        return {"base": [[int(x) for x in r] for r in self.base],
                "white": list(self.white_positions),
                "chamber": self.chamber}


def levi_roots(rs: RootSystem, I):
    """The subsystem spanned by the Levi simple roots: exactly the roots
    supported on I."""
    I = set(I)
    return {r for r in rs.roots
            if all(r[j] == 0 for j in range(rs.rank) if j not in I)}


def levi_subspace(rs: RootSystem, I):
    """Basis of K = {x : (x, a_i) = 0 for i in I}, in simple-root coordinates.

    The basis is normalized to be dual to the non-Levi simple-root
    functionals: K-coordinates of a point x are exactly ((x, a_j)) over the
    black simple roots j, giving natural (u, v)-style functional coordinates.
    """
    I = sorted(set(I))
    complement = [j for j in range(rs.rank) if j not in I]
    if not I:
        kernel = rs.simple_roots
    else:
        rows = [rs.root_functional(rs.simple_roots[i]) for i in I]
        kernel = Mat(rows).kernel_basis()
    funcs = [rs.root_functional(rs.simple_roots[j]) for j in complement]
    m = Mat([[dot(f, b) for f in funcs] for b in kernel])
    minv = m.inverse()
    dual = []
    for m_idx in range(len(kernel)):
        dual.append(tuple(
            sum(minv.rows[m_idx][k] * kernel[k][j] for k in range(len(kernel)))
            for j in range(rs.rank)))
    return tuple(dual)


class LeviContext:
    """Shared geometry for one (root system, Levi set) pair: the subspace
    basis, the restricted arrangement with its chambers and wall graph, and
    the root -> hyperplane index map."""

    def __init__(self, rs, I):
        marked = MarkedDynkin(rs.cartan_type, tuple(I))
        self.rs = rs
        self.levi = marked.levi
        self.basis = levi_subspace(rs, self.levi)
        self.dim = len(self.basis)
        self.levi_root_set = levi_roots(rs, self.levi)
        covs = {}
        for beta in rs.positive_roots:
            if beta in self.levi_root_set:
                continue
            covs[beta] = self.restrict(rs.root_functional(beta))
        self.arrangement = build_arrangement(covs.values(), (), self.dim)
        index = {h.normal: k for k, h in enumerate(self.arrangement.hyperplanes)}
        self.hyperplane_of_root = {
            beta: index[canonical_normal(c)] for beta, c in covs.items()}
        self.chambers = chambers(self.arrangement)
        self.wall_graph = wall_graph(self.arrangement, self.chambers)
        self._signs = {c.signs: i for i, c in enumerate(self.chambers)}

    def restrict(self, functional):
        return tuple(dot(as_vec(functional), b) for b in self.basis)

    def root_value(self, beta, witness):
        """(x, beta) at a point x of K given in K coordinates."""
        return dot(self.restrict(self.rs.root_functional(beta)), witness)

    def neighbor(self, chamber_index, hyperplane_index):
        signs = self.chambers[chamber_index].signs
        flipped = tuple(-s if j == hyperplane_index else s
                        for j, s in enumerate(signs))
        return self._signs.get(flipped)


@lru_cache(maxsize=None)
def _context(type_str, levi):
    rs = build_root_system(CartanType(type_str[0], int(type_str[1:])))
    return LeviContext(rs, levi)


def context(rs: RootSystem, I) -> LeviContext:
    return _context(str(rs.cartan_type), tuple(sorted(set(I))))


def restricted_arrangement(rs: RootSystem, I):
    """The arrangement on K cut by the non-Levi positive-root functionals."""
    return context(rs, I).arrangement


def _component_subgroup(rs, base, white_positions, black_pos):
    """J = the black vertex plus the white vertices connected to it through
    white vertices of the diagram; returns the positions of J."""
    whites = set(white_positions)
    allowed = whites | {black_pos}
    edges = {p: [] for p in allowed}
    for p in allowed:
        for q in allowed:
            if p != q and rs.pair(base[p], base[q]) != 0:
                edges[p].append(q)
    seen = {black_pos}
    stack = [black_pos]
    while stack:
        for q in edges[stack.pop()]:
            if q not in seen:
                seen.add(q)
                stack.append(q)
    return tuple(sorted(seen))


def _longest_element(rs, roots):
    """The element of the reflection subgroup W_J sending the given base of
    Phi_J to its negative; unique, found by closure."""
    gens = [reflection(rs, r) for r in roots]
    target = {tuple(-x for x in r) for r in roots}
    source = {tuple(r) for r in roots}
    ident = Mat.identity(rs.rank)
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for m in frontier:
            if {tuple(m @ r) for r in source} == target:
                return m
            for g in gens:
                p = g @ m
                if p not in seen:
                    seen.add(p)
                    nxt.append(p)
        frontier = nxt
    raise InconsistentInput("reflection subgroup has no longest element")


def _validate(ctx, diagram):
    rs = ctx.rs
    base = diagram.base
    cartan = rs.cartan_matrix
    for i in range(rs.rank):
        for j in range(rs.rank):
            cij = 2 * rs.pair(base[i], base[j]) / rs.pair(base[i], base[i])
            if cij != cartan.rows[i][j]:
                raise InconsistentInput("base does not reproduce the diagram")
    whites = {base[p] for p in diagram.white_positions}
    if len(diagram.white_positions) != len(ctx.levi):
        raise InconsistentInput("white position count != |I|")
    if not all(r in ctx.levi_root_set for r in whites):
        raise InconsistentInput("a white root lies outside the Levi subsystem")
    w = ctx.chambers[diagram.chamber].witness
    for beta in diagram.black_roots():
        if ctx.root_value(beta, w) <= 0:
            raise InconsistentInput("a black root is not positive on the chamber")
    return diagram


def _white_positions(ctx, base):
    return tuple(p for p, r in enumerate(base) if r in ctx.levi_root_set)


def twist(rs: RootSystem, I, diagram: ParabolicDiagram,
          black_pos: int) -> ParabolicDiagram:
    """Cross the wall of the black root at position black_pos.

    The new base is the old one moved by the longest element of the subsystem
    generated by that root and its attached white roots; involutive.
    """
    ctx = context(rs, I)
    if black_pos in diagram.white_positions or \
            not 0 <= black_pos < len(diagram.base):
        raise NotAWall(f"position {black_pos} is not a black vertex")
    beta = diagram.base[black_pos]
    h = ctx.hyperplane_of_root.get(beta)
    if h is None:
        h = ctx.hyperplane_of_root.get(tuple(-x for x in beta))
    if h is None:
        raise NotAWall(f"root {beta} has no hyperplane in the arrangement")
    neighbor = ctx.neighbor(diagram.chamber, h)
    if neighbor is None:
        raise NotAWall(
            f"hyperplane of {beta} is not a facet of chamber {diagram.chamber}")
    j_pos = _component_subgroup(rs, diagram.base, diagram.white_positions,
                                black_pos)
    w0 = _longest_element(rs, [diagram.base[p] for p in j_pos])
    new_base = tuple(tuple(w0 @ as_vec(r)) for r in diagram.base)
    out = ParabolicDiagram(new_base, _white_positions(ctx, new_base), neighbor)
    return _validate(ctx, out)


def parabolics_with_levi(rs: RootSystem, I):
    """One marked diagram per chamber of the restricted arrangement,
    generated from the standard parabolic by twists; sorted by chamber."""
    ctx = context(rs, I)
    base0 = rs.simple_roots
    all_pos = None
    for i, c in enumerate(ctx.chambers):
        if all(ctx.root_value(b, c.witness) > 0 for b in rs.positive_roots
               if b not in ctx.levi_root_set):
            all_pos = i
            break
    if all_pos is None:
        raise InconsistentInput("no chamber with all non-Levi roots positive")
    p0 = _validate(ctx, ParabolicDiagram(base0, _white_positions(ctx, base0),
                                         all_pos))
    found = {p0.chamber: p0}
    frontier = [p0]
    while frontier:
        nxt = []
        for d in frontier:
            for p in d.black_positions():
                try:
                    t = twist(rs, I, d, p)
                except NotAWall:
                    continue
                if t.chamber not in found:
                    found[t.chamber] = t
                    nxt.append(t)
        frontier = nxt
    if len(found) != len(ctx.chambers):
        raise InconsistentInput("twists did not reach every chamber")
    return tuple(found[i] for i in sorted(found))


def _root_label(r):
    terms = []
    for i, x in enumerate(r):
        if x == 0:
            continue
        coeff = "" if abs(x) == 1 else str(abs(x))
        terms.append(("-" if x < 0 else ("+" if terms else ""))
                     + coeff + f"a{i + 1}")
    return "".join(terms) if terms else "0"


def render_diagram(rs: RootSystem, diagram: ParabolicDiagram) -> str:
    """Two-line text picture: open/filled vertex markers over root labels.

    Linear layout in position order; for branching types the chain order is
    positional, not geometric.
    """
    whites = set(diagram.white_positions)
    markers = ["o" if p in whites else "*" for p in range(len(diagram.base))]
    labels = [_root_label(r) for r in diagram.base]
    cells = [max(len(m), len(l)) for m, l in zip(markers, labels)]
    top = "---".join(m.center(w) for m, w in zip(markers, cells))
    bot = "   ".join(l.center(w) for l, w in zip(labels, cells))
    return top + "\n" + bot
