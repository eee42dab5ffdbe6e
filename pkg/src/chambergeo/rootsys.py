"""Root systems of types A-G and their Weyl groups as explicit matrix groups.

All internal computation happens in simple-root coordinates: the i-th simple
root is the i-th standard basis vector, a general root is an integer vector of
coefficients, and the symmetrized Cartan matrix is the bilinear form. The R^n
realization of type A lives in ambient_realization_A.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import DimensionMismatch, InvalidType, NotARoot, OrderCapExceeded
from .exactlin import BilinearForm, Mat, as_vec, dot

LETTERS = ("A", "B", "C", "D", "E", "F", "G")

WEYL_ORDERS = {
    "E6": 51840,
    "E7": 2903040,
    "E8": 696729600,
    "F4": 1152,
    "G2": 12,
}

DEFAULT_ORDER_CAP = 51840


@dataclass(frozen=True)
class CartanType:
    letter: str
    rank: int

    def __post_init__(self):
        if self.letter not in LETTERS:
            raise InvalidType(f"unknown letter {self.letter!r}")
        r = self.rank
        ok = {
            "A": r >= 1,
            "B": r >= 2,
            "C": r >= 2,
            "D": r >= 4,  # D_3 is rejected, not aliased to A_3
            "E": r in (6, 7, 8),
            "F": r == 4,
            "G": r == 2,
        }[self.letter]
        if not ok:
            raise InvalidType(f"inadmissible rank {r} for type {self.letter}")

    def __str__(self):
        return f"{self.letter}{self.rank}"

    def weyl_order(self):
        n = self.rank
        if self.letter == "A":
            return _factorial(n + 1)
        if self.letter in ("B", "C"):
            return 2**n * _factorial(n)
        if self.letter == "D":
            return 2 ** (n - 1) * _factorial(n)
        return WEYL_ORDERS[str(self)]

    def positive_root_count(self):
        n = self.rank
        return {
            "A": n * (n + 1) // 2,
            "B": n * n,
            "C": n * n,
            "D": n * (n - 1),
            "E": {6: 36, 7: 63, 8: 120}.get(n),
            "F": 24,
            "G": 6,
        }[self.letter]


def _factorial(n):
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


def cartan_matrix(t: CartanType) -> Mat:
    """Cartan matrix in Bourbaki ordering: a_ij = 2(a_i,a_j)/(a_i,a_i)."""
    n = t.rank
    a = [[0] * n for _ in range(n)]
    for i in range(n):
        a[i][i] = 2

    def bond(i, j, down=-1, up=-1):
        a[i][j] = down
        a[j][i] = up

    if t.letter == "A":
        for i in range(n - 1):
            bond(i, i + 1)
    elif t.letter == "B":  # a_n short
        for i in range(n - 2):
            bond(i, i + 1)
        bond(n - 2, n - 1, down=-1, up=-2)
    elif t.letter == "C":  # a_n long
        for i in range(n - 2):
            bond(i, i + 1)
        bond(n - 2, n - 1, down=-2, up=-1)
    elif t.letter == "D":
        for i in range(n - 3):
            bond(i, i + 1)
        bond(n - 3, n - 2)
        bond(n - 3, n - 1)
    elif t.letter == "E":
        # Bourbaki: node 2 attaches to node 4; chain 1-3-4-5-...-n
        chain = [0] + list(range(2, n))
        for i, j in zip(chain, chain[1:]):
            bond(i, j)
        bond(1, 3)
    elif t.letter == "F":  # a_1,a_2 long, a_3,a_4 short
        bond(0, 1)
        bond(1, 2, down=-1, up=-2)
        bond(2, 3)
    elif t.letter == "G":  # a_1 short, a_2 long
        bond(0, 1, down=-3, up=-1)
    return Mat(a)


def symmetrizer(t: CartanType):
    """Minimal positive integers d with diag(d).A symmetric."""
    n = t.rank
    d = [1] * n
    if t.letter == "B":
        d = [2] * (n - 1) + [1]
    elif t.letter == "C":
        d = [1] * (n - 1) + [2]
    elif t.letter == "F":
        d = [2, 2, 1, 1]
    elif t.letter == "G":
        d = [1, 3]
    return d


class RootSystem:
    """Roots, Cartan matrix, and symmetrized form of a Cartan type."""

    def __init__(self, cartan_type, cartan, form, positive_roots):
        self.cartan_type = cartan_type
        self.cartan_matrix = cartan
        self.form = form
        self.positive_roots = tuple(positive_roots)
        self.simple_roots = tuple(
            tuple(Fraction(int(i == j)) for j in range(cartan_type.rank))
            for i in range(cartan_type.rank)
        )
        self.roots = self.positive_roots + tuple(
            tuple(-x for x in r) for r in self.positive_roots
        )
        self._root_set = set(self.roots)

    @property
    def rank(self):
        return self.cartan_type.rank

    def is_root(self, v):
        return tuple(Fraction(x) for x in v) in self._root_set

    def pair(self, a, b):
        return self.form.pair(as_vec(a), as_vec(b))

    def root_functional(self, beta):
        """Covector x -> (x, beta) in simple-root coordinates."""
        return self.form.gram @ as_vec(beta)

    def to_json(self):
        return {
            "type": str(self.cartan_type),
            "cartan_matrix": self.cartan_matrix.to_json(),
            "form": self.form.gram.to_json(),
            "positive_roots": [[int(x) for x in r] for r in self.positive_roots],
        }


def build_root_system(t: CartanType) -> RootSystem:
    """Generate the full root system by reflection closure from the Cartan matrix.

    Root order is deterministic: by height, then lexicographic.
    """
    n = t.rank
    a = cartan_matrix(t)
    d = symmetrizer(t)
    gram = Mat([[d[i] * a.rows[i][j] for j in range(n)] for i in range(n)])
    form = BilinearForm(gram)

    simple = [tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)]
    seen = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for v in frontier:
            for i in range(n):
                # s_i(v) = v - <a_i^vee, v> a_i, coefficient from Cartan row i
                c = dot(a.rows[i], v)
                w = list(v)
                w[i] -= c
                w = tuple(w)
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
    positives = [r for r in seen if _is_positive(r)]
    positives.sort(key=lambda r: (sum(r), r))
    expected = t.positive_root_count()
    if len(positives) != expected:
        raise InvalidType(
            f"closure produced {len(positives)} positive roots for {t}, "
            f"expected {expected}")
    return RootSystem(t, a, form, positives)


def _is_positive(r):
    for x in r:
        if x != 0:
            return x > 0
    return False


def reflection(rs: RootSystem, root) -> Mat:
    """Matrix of s_root(x) = x - 2(x,root)/(root,root) root, simple-root coords."""
    root = as_vec(root)
    if not rs.is_root(root):
        raise NotARoot(f"{root} is not a root of {rs.cartan_type}")
    n = rs.rank
    rr = rs.pair(root, root)
    cols = []
    for j in range(n):
        e = tuple(Fraction(int(i == j)) for i in range(n))
        c = 2 * rs.pair(e, root) / rr
        cols.append(tuple(e[i] - c * root[i] for i in range(n)))
    return Mat(list(zip(*cols)))


class WeylGroup:
    """Finite matrix group generated by the simple reflections."""

    def __init__(self, rs, elements, generators):
        self.root_system = rs
        self.elements = tuple(elements)
        self.generators = tuple(generators)
        self.order = len(self.elements)

    def to_json(self):
        return {
            "type": str(self.root_system.cartan_type),
            "order": self.order,
            "generators": list(self.generators),
            "elements": [m.to_json() for m in self.elements],
        }


def weyl_group(rs: RootSystem, order_cap: int = DEFAULT_ORDER_CAP) -> WeylGroup:
    """Full group by breadth-first closure over the simple reflections.

    Element order: BFS layer, then lexicographic on matrix entries.
    """
    classical = rs.cartan_type.weyl_order()
    if classical > order_cap:
        raise OrderCapExceeded(
            f"|W({rs.cartan_type})| = {classical} exceeds cap {order_cap}")
    gens = [reflection(rs, s) for s in rs.simple_roots]
    ident = Mat.identity(rs.rank)
    seen = {ident}
    elements = [ident]
    frontier = [ident]
    while frontier:
        layer = []
        for m in frontier:
            for g in gens:
                p = g @ m
                if p not in seen:
                    seen.add(p)
                    layer.append(p)
        layer.sort(key=lambda m: m.rows)
        elements.extend(layer)
        frontier = layer
    return WeylGroup(rs, elements, range(rs.rank))


def weyl_orbit(w: WeylGroup, v):
    """Full orbit of v under the group, as a sorted tuple of vectors."""
    v = as_vec(v)
    if len(v) != w.root_system.rank:
        raise DimensionMismatch(
            f"vector length {len(v)} != rank {w.root_system.rank}")
    gens = [w.elements[0]] if w.order == 1 else \
        [reflection(w.root_system, s) for s in w.root_system.simple_roots]
    seen = {v}
    frontier = [v]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = g @ x
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return tuple(sorted(seen))


def ambient_realization_A(n: int) -> Mat:
    """The A_{n-1} realization map into V = {s in Q^n : sum s_i = 0}.

    Column i is e_i - e_{i+1}: an n x (n-1) matrix from simple-root
    coordinates to R^n coordinates.
    """
    if n < 2:
        raise InvalidType("ambient realization needs n >= 2")
    cols = []
    for i in range(n - 1):
        c = [0] * n
        c[i] = 1
        c[i + 1] = -1
        cols.append(c)
    return Mat(list(zip(*cols)))
