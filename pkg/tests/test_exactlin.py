"""Exact linear algebra and polynomial kernels."""

from fractions import Fraction

import pytest

from chambergeo.errors import DimensionMismatch, ZeroPolynomial
from chambergeo.exactlin import (BilinearForm, Mat, RatPoly, as_vec,
                                 canonical_normal, dot, poly_discriminant,
                                 primitive, resultant, solve_strict_feasible)


def test_mat_basic_ops():
    m = Mat([[1, 2], [3, 4]])
    assert m.det() == -2
    assert m.rank() == 2
    assert (m @ m.inverse()) == Mat.identity(2)
    assert m.transpose().rows == ((1, 3), (2, 4))


def test_kernel_and_rref():
    m = Mat([[1, 1, 1]])
    k = m.kernel_basis()
    assert len(k) == 2
    for v in k:
        assert dot((1, 1, 1), v) == 0


def test_matvec_dimension_checked():
    with pytest.raises(DimensionMismatch):
        Mat([[1, 2], [3, 4]]) @ (1, 2, 3)


def test_primitive_and_canonical_normal():
    assert primitive((Fraction(2, 3), Fraction(-4, 3))) == (1, -2)
    assert canonical_normal((0, -2, 4)) == (0, 1, -2)
    assert canonical_normal((0, 2, -4)) == (0, 1, -2)


def test_signatures():
    assert BilinearForm(Mat([[2, -1], [-1, 2]])).signature() == (2, 0, 0)
    assert BilinearForm(Mat([[-2, 1], [1, -2]])).signature() == (0, 2, 0)
    assert BilinearForm(Mat([[1, 0], [0, -1]])).signature() == (1, 1, 0)
    assert BilinearForm(Mat([[0, 0], [0, 0]])).signature() == (0, 0, 2)
    assert BilinearForm(Mat([[2, -1], [-1, 2]])).is_positive_definite()


def test_poly_from_roots_and_eval():
    f = RatPoly.from_roots((1, 2, -3))
    assert f.coeffs == (6, -7, 0, 1)  # z^3 - 7z + 6
    assert f(1) == 0 and f(0) == 6
    assert f.derivative().coeffs == (-7, 0, 3)


def test_resultant_examples():
    f = RatPoly((-1, 1))   # z - 1
    g = RatPoly((1, 1))    # z + 1
    assert resultant(f, g) == 2
    assert resultant(RatPoly((-9, 0, 1)), RatPoly((0, 2))) == -36


def test_resultant_rejects_zero():
    with pytest.raises(ZeroPolynomial):
        resultant(RatPoly((0,)), RatPoly((1, 1)))


def test_discriminant_examples():
    assert poly_discriminant(RatPoly((-1, 0, 1))) == 4      # z^2 - 1
    assert poly_discriminant(RatPoly.from_roots((1, 2, -3))) == 400
    assert poly_discriminant(RatPoly.from_roots((1, 1))) == 0


def test_feasibility_strict():
    w = solve_strict_feasible([(1, 0), (0, 1)], (), 2)
    assert w is not None and w[0] > 0 and w[1] > 0
    assert solve_strict_feasible([(1, 0), (-1, 0)], (), 2) is None


def test_feasibility_with_equalities_and_nonstrict():
    w = solve_strict_feasible([(1, -1, 0)], [(1, 1, 1)], 3)
    assert w is not None
    assert sum(w) == 0 and w[0] > w[1]
    w = solve_strict_feasible([(1, 0)], (), 2, nonstrict=[(0, 1), (0, -1)])
    assert w is not None and w[0] > 0 and w[1] == 0


def test_feasibility_infeasible_mixed():
    # x > 0 and x <= 0 simultaneously
    assert solve_strict_feasible([(1,)], (), 1, nonstrict=[(-1,)]) is None


def test_as_vec_fractions():
    assert as_vec(["1/2", 3]) == (Fraction(1, 2), Fraction(3))
