"""Exact rational linear algebra: vectors, matrices, polynomials, resultants,
and strict-inequality feasibility.

Everything here is a pure function over immutable data, and every number is a
fractions.Fraction. No floating point enters at any stage.
"""

from fractions import Fraction
from functools import reduce
from math import gcd

from .errors import DimensionMismatch, ZeroPolynomial

# ---------------------------------------------------------------------------
# vectors (plain tuples of Fractions)


def vec(*entries):
    return tuple(Fraction(e) for e in entries)


def as_vec(seq):
    return tuple(Fraction(e) for e in seq)


def dot(a, b):
    if len(a) != len(b):
        raise DimensionMismatch(f"dot: {len(a)} vs {len(b)}")
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


def vadd(a, b):
    return tuple(x + y for x, y in zip(a, b))


def vsub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def vscale(c, a):
    c = Fraction(c)
    return tuple(c * x for x in a)


def is_zero_vec(a):
    return all(x == 0 for x in a)


def primitive(a):
    """Smallest integer vector positively proportional to a (zero stays zero)."""
    fracs = [Fraction(x) for x in a]
    if all(x == 0 for x in fracs):
        return tuple(0 for _ in fracs)
    denom = reduce(lambda acc, x: acc * x.denominator // gcd(acc, x.denominator),
                   (x for x in fracs), 1)
    ints = [int(x * denom) for x in fracs]
    g = reduce(gcd, (abs(i) for i in ints))
    return tuple(i // g for i in ints)


def canonical_normal(a):
    """Primitive vector with the first nonzero entry positive.

    Proportional covectors (either sign) map to the same canonical normal, so
    hyperplanes dedupe on it.
    """
    p = primitive(a)
    for x in p:
        if x != 0:
            return p if x > 0 else tuple(-y for y in p)
    return p


def normalize_witness(x):
    """Scale so the largest absolute coordinate is 1 (stable golden files)."""
    m = max((abs(c) for c in x), default=Fraction(0))
    if m == 0:
        return tuple(x)
    return tuple(c / m for c in x)


# ---------------------------------------------------------------------------
# matrices


class Mat:
    """Immutable exact rational matrix, row-major."""

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows):
        self.rows = tuple(tuple(Fraction(e) for e in r) for r in rows)
        self.nrows = len(self.rows)
        self.ncols = len(self.rows[0]) if self.rows else 0
        if any(len(r) != self.ncols for r in self.rows):
            raise DimensionMismatch("ragged matrix")

    @staticmethod
    def identity(n):
        return Mat([[Fraction(int(i == j)) for j in range(n)] for i in range(n)])

    @staticmethod
    def zero(nrows, ncols):
        return Mat([[Fraction(0)] * ncols for _ in range(nrows)])

    def __eq__(self, other):
        return isinstance(other, Mat) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"Mat({[list(map(str, r)) for r in self.rows]})"

    def __matmul__(self, other):
        if isinstance(other, Mat):
            if self.ncols != other.nrows:
                raise DimensionMismatch(f"matmul: {self.ncols} vs {other.nrows}")
            cols = list(zip(*other.rows)) if other.rows else []
            return Mat([[dot(r, c) for c in cols] for r in self.rows])
        # matrix @ vector
        if self.ncols != len(other):
            raise DimensionMismatch(f"matvec: {self.ncols} vs {len(other)}")
        return tuple(dot(r, other) for r in self.rows)

    def transpose(self):
        return Mat(list(zip(*self.rows))) if self.rows else Mat([])

    def col(self, j):
        return tuple(r[j] for r in self.rows)

    def det(self):
        if self.nrows != self.ncols:
            raise DimensionMismatch("det of non-square matrix")
        n = self.nrows
        a = [list(r) for r in self.rows]
        d = Fraction(1)
        for j in range(n):
            piv = next((i for i in range(j, n) if a[i][j] != 0), None)
            if piv is None:
                return Fraction(0)
            if piv != j:
                a[j], a[piv] = a[piv], a[j]
                d = -d
            d *= a[j][j]
            inv = 1 / a[j][j]
            for i in range(j + 1, n):
                if a[i][j] != 0:
                    f = a[i][j] * inv
                    for k in range(j, n):
                        a[i][k] -= f * a[j][k]
        return d

    def rref(self):
        """(reduced rows, pivot column indices); deterministic."""
        a = [list(r) for r in self.rows]
        pivots = []
        row = 0
        for col in range(self.ncols):
            piv = next((i for i in range(row, self.nrows) if a[i][col] != 0), None)
            if piv is None:
                continue
            a[row], a[piv] = a[piv], a[row]
            inv = 1 / a[row][col]
            a[row] = [x * inv for x in a[row]]
            for i in range(self.nrows):
                if i != row and a[i][col] != 0:
                    f = a[i][col]
                    a[i] = [x - f * y for x, y in zip(a[i], a[row])]
            pivots.append(col)
            row += 1
            if row == self.nrows:
                break
        return [tuple(r) for r in a[:row]], pivots

    def rank(self):
        return len(self.rref()[1])

    def kernel_basis(self):
        """Deterministic basis of the right kernel (one vector per free column)."""
        reduced, pivots = self.rref()
        free = [j for j in range(self.ncols) if j not in pivots]
        basis = []
        for f in free:
            v = [Fraction(0)] * self.ncols
            v[f] = Fraction(1)
            for r, p in zip(reduced, pivots):
                v[p] = -r[f]
            basis.append(tuple(v))
        return basis

    def inverse(self):
        if self.nrows != self.ncols:
            raise DimensionMismatch("inverse of non-square matrix")
        n = self.nrows
        aug = Mat([list(r) + list(Mat.identity(n).rows[i])
                   for i, r in enumerate(self.rows)])
        reduced, pivots = aug.rref()
        if pivots != list(range(n)):
            raise ZeroDivisionError("singular matrix")
        return Mat([r[n:] for r in reduced])

    def is_integer(self):
        return all(e.denominator == 1 for r in self.rows for e in r)

    def to_json(self):
        if self.is_integer():
            return [[int(e) for e in r] for r in self.rows]
        return [[str(e) for e in r] for r in self.rows]


def row_times_mat(row, m):
    """Covector times matrix: (row @ m) as a tuple."""
    if len(row) != m.nrows:
        raise DimensionMismatch(f"row_times_mat: {len(row)} vs {m.nrows}")
    return tuple(dot(row, m.col(j)) for j in range(m.ncols))


class BilinearForm:
    """Symmetric bilinear form with a cached signature."""

    def __init__(self, gram):
        if not isinstance(gram, Mat):
            gram = Mat(gram)
        if gram != gram.transpose():
            raise DimensionMismatch("gram matrix is not symmetric")
        self.gram = gram
        self._signature = None

    def pair(self, a, b):
        return dot(a, self.gram @ b)

    def signature(self):
        """(positive, negative, zero) inertia, via symmetric elimination."""
        if self._signature is None:
            n = self.gram.nrows
            a = [list(r) for r in self.gram.rows]
            pos = neg = zero = 0
            k = 0
            while k < n:
                piv = next((i for i in range(k, n) if a[i][i] != 0), None)
                if piv is None:
                    # look for an off-diagonal entry; if all zero, rest is null
                    off = next(((i, j) for i in range(k, n) for j in range(i + 1, n)
                                if a[i][j] != 0), None)
                    if off is None:
                        zero += n - k
                        break
                    i, j = off
                    for r in range(n):  # add row/col j into i to create a diagonal pivot
                        a[i][r] += a[j][r]
                    for r in range(n):
                        a[r][i] += a[r][j]
                    piv = i
                if piv != k:
                    a[k], a[piv] = a[piv], a[k]
                    for r in range(n):
                        a[r][k], a[r][piv] = a[r][piv], a[r][k]
                d = a[k][k]
                if d > 0:
                    pos += 1
                else:
                    neg += 1
                for i in range(k + 1, n):
                    if a[i][k] != 0:
                        f = a[i][k] / d
                        for j in range(k, n):
                            a[i][j] -= f * a[k][j]
                        for j in range(k, n):
                            a[j][i] -= f * a[j][k]
                k += 1
            self._signature = (pos, neg, zero)
        return self._signature

    def is_negative_definite(self):
        p, nn, z = self.signature()
        return p == 0 and z == 0

    def is_positive_definite(self):
        p, nn, z = self.signature()
        return nn == 0 and z == 0


def gram_conjugate(m, form):
    """M^T * gram * M."""
    gram = form.gram if isinstance(form, BilinearForm) else form
    if gram.nrows != m.nrows:
        raise DimensionMismatch("gram_conjugate: shape mismatch")
    return m.transpose() @ gram @ m


# ---------------------------------------------------------------------------
# univariate polynomials (coeffs lowest degree first)


class RatPoly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @staticmethod
    def from_roots(roots):
        p = RatPoly([1])
        for r in roots:
            p = p * RatPoly([-Fraction(r), 1])
        return p

    def is_zero(self):
        return not self.coeffs

    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else -1

    def lc(self):
        if not self.coeffs:
            raise ZeroPolynomial("leading coefficient of zero polynomial")
        return self.coeffs[-1]

    def __call__(self, x):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __mul__(self, other):
        if self.is_zero() or other.is_zero():
            return RatPoly([])
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return RatPoly(out)

    def derivative(self):
        return RatPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def __eq__(self, other):
        return isinstance(other, RatPoly) and self.coeffs == other.coeffs

    def __repr__(self):
        return f"RatPoly({[str(c) for c in self.coeffs]})"


def sylvester_matrix(f, g):
    m, n = f.degree(), g.degree()
    size = m + n
    fc = list(reversed(f.coeffs))  # highest first
    gc = list(reversed(g.coeffs))
    rows = []
    for i in range(n):
        rows.append([Fraction(0)] * i + fc + [Fraction(0)] * (size - m - 1 - i))
    for i in range(m):
        rows.append([Fraction(0)] * i + gc + [Fraction(0)] * (size - n - 1 - i))
    return Mat(rows)


def resultant(f, g):
    """Sylvester-matrix determinant of (f, g)."""
    if f.is_zero() or g.is_zero():
        raise ZeroPolynomial("resultant of the zero polynomial")
    m, n = f.degree(), g.degree()
    if m == 0:
        return f.coeffs[0] ** n
    if n == 0:
        return g.coeffs[0] ** m
    return sylvester_matrix(f, g).det()


def poly_discriminant(f):
    """(-1)^(n(n-1)/2) * resultant(f, f') / lc(f), n = deg f."""
    if f.is_zero():
        raise ZeroPolynomial("discriminant of the zero polynomial")
    n = f.degree()
    if n < 1:
        raise ZeroPolynomial("discriminant needs degree >= 1")
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return sign * resultant(f, f.derivative()) / f.lc()


# ---------------------------------------------------------------------------
# strict feasibility (exact phase-1 simplex, Bland's rule)


def solve_strict_feasible(strict, equalities=(), dim=None, nonstrict=()):
    """Witness x with c.x > 0 for c in strict, a.x >= 0 for a in nonstrict and
    e.x = 0 for e in equalities, or None if the system is infeasible.

    Homogeneous systems only: a strict constraint is encoded as c.x >= 1, which
    is equivalent up to positive scaling. Deterministic for fixed input order.
    """
    strict = [as_vec(c) for c in strict]
    nonstrict = [as_vec(c) for c in nonstrict]
    equalities = [as_vec(e) for e in equalities]
    if dim is None:
        raise DimensionMismatch("ambient dimension required")
    for c in strict + nonstrict + equalities:
        if len(c) != dim:
            raise DimensionMismatch(f"covector length {len(c)} != dim {dim}")

    if equalities:
        kernel = Mat(equalities).kernel_basis()
    else:
        kernel = [tuple(Fraction(int(i == j)) for j in range(dim)) for i in range(dim)]
    k = len(kernel)

    def restrict(c):
        return tuple(dot(c, b) for b in kernel)

    rows = []
    for c in strict:
        r = restrict(c)
        if is_zero_vec(r):
            return None  # 0 > 0 impossible
        rows.append((r, Fraction(1)))
    for c in nonstrict:
        r = restrict(c)
        if not is_zero_vec(r):
            rows.append((r, Fraction(0)))

    if not rows:
        return normalize_witness(tuple(Fraction(0) for _ in range(dim)))
    if k == 0:
        return None if any(b > 0 for _, b in rows) else \
            tuple(Fraction(0) for _ in range(dim))

    y = _phase1_simplex(rows, k)
    if y is None:
        return None
    x = [Fraction(0)] * dim
    for yi, b in zip(y, kernel):
        if yi != 0:
            for j in range(dim):
                x[j] += yi * b[j]
    return normalize_witness(tuple(x))


def _phase1_simplex(rows, k):
    """Find free y in Q^k with a.y >= b per row (b in {0,1}), else None."""
    m = len(rows)
    art = [i for i, (_, b) in enumerate(rows) if b > 0]
    p = len(art)
    ncols = 2 * k + m + p  # u, v, slack, artificial
    tab = []
    basis = []
    art_col = {}
    for idx, i in enumerate(art):
        art_col[i] = 2 * k + m + idx
    for i, (a, b) in enumerate(rows):
        if b > 0:
            # a.(u-v) - s_i + t_i = 1
            row = list(a) + [-x for x in a] + [Fraction(0)] * (m + p)
            row[2 * k + i] = Fraction(-1)
            row[art_col[i]] = Fraction(1)
            row.append(Fraction(1))
            basis.append(art_col[i])
        else:
            # -a.(u-v) + s_i = 0  (slack basic at value 0)
            row = [-x for x in a] + list(a) + [Fraction(0)] * (m + p)
            row[2 * k + i] = Fraction(1)
            row.append(Fraction(0))
            basis.append(2 * k + i)
        tab.append(row)

    # objective: minimize sum of artificials; reduced-cost row
    obj = [Fraction(0)] * (ncols + 1)
    for j in range(2 * k + m, ncols):
        obj[j] = Fraction(1)
    for i, bv in enumerate(basis):
        if obj[bv] != 0:
            f = obj[bv]
            for j in range(ncols + 1):
                obj[j] -= f * tab[i][j]

    while True:
        enter = next((j for j in range(ncols) if obj[j] < 0), None)
        if enter is None:
            break
        # ratio test with Bland tie-breaking on basis variable index
        best = None
        for i in range(m):
            if tab[i][enter] > 0:
                ratio = tab[i][ncols] / tab[i][enter]
                if best is None or ratio < best[0] or \
                        (ratio == best[0] and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        if best is None:
            return None  # cannot happen: phase-1 objective bounded below
        _, r = best
        piv = tab[r][enter]
        tab[r] = [x / piv for x in tab[r]]
        for i in range(m):
            if i != r and tab[i][enter] != 0:
                f = tab[i][enter]
                tab[i] = [x - f * y for x, y in zip(tab[i], tab[r])]
        if obj[enter] != 0:
            f = obj[enter]
            obj = [x - f * y for x, y in zip(obj, tab[r])]
        basis[r] = enter

    if -obj[ncols] > 0:  # residual infeasibility
        return None
    u = [Fraction(0)] * k
    v = [Fraction(0)] * k
    for i, bv in enumerate(basis):
        if bv < k:
            u[bv] = tab[i][ncols]
        elif bv < 2 * k:
            v[bv - k] = tab[i][ncols]
    return tuple(a - b for a, b in zip(u, v))
