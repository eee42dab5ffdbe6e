"""Root systems, Cartan data, and Weyl groups."""

import pytest

from chambergeo.errors import (DimensionMismatch, InvalidType, NotARoot,
                               OrderCapExceeded)
from chambergeo.rootsys import (CartanType, ambient_realization_A,
                                build_root_system, cartan_matrix, reflection,
                                symmetrizer, weyl_group, weyl_orbit)


@pytest.mark.parametrize("letter,rank,order,positives", [
    ("A", 1, 2, 1),
    ("A", 2, 6, 3),
    ("A", 4, 120, 10),
    ("B", 2, 8, 4),
    ("B", 3, 48, 9),
    ("C", 3, 48, 9),
    ("D", 4, 192, 12),
    ("G", 2, 12, 6),
    ("F", 4, 1152, 24),
])
def test_root_counts_and_orders(letter, rank, order, positives):
    t = CartanType(letter, rank)
    assert t.weyl_order() == order
    rs = build_root_system(t)
    assert len(rs.positive_roots) == positives
    assert len(rs.roots) == 2 * positives


@pytest.mark.parametrize("letter,rank", [
    ("D", 3), ("E", 5), ("F", 3), ("G", 3), ("A", 0), ("B", 1), ("X", 2),
])
def test_inadmissible_types_rejected(letter, rank):
    with pytest.raises(InvalidType):
        CartanType(letter, rank)


def test_cartan_matrix_is_symmetrizable():
    for t in (CartanType("B", 3), CartanType("C", 3), CartanType("F", 4),
              CartanType("G", 2)):
        a = cartan_matrix(t)
        d = symmetrizer(t)
        n = t.rank
        for i in range(n):
            for j in range(n):
                assert d[i] * a.rows[i][j] == d[j] * a.rows[j][i]


def test_form_is_positive_definite():
    for t in (CartanType("A", 3), CartanType("B", 2), CartanType("G", 2),
              CartanType("E", 6)):
        rs = build_root_system(t)
        assert rs.form.is_positive_definite()


def test_reflections_preserve_form_and_roots():
    rs = build_root_system(CartanType("B", 2))
    for root in rs.roots:
        s = reflection(rs, root)
        assert s @ s == type(s).identity(2)
        for r in rs.roots:
            assert rs.is_root(s @ r)
            assert rs.pair(s @ r, s @ r) == rs.pair(r, r)


def test_reflection_rejects_non_root():
    rs = build_root_system(CartanType("A", 2))
    with pytest.raises(NotARoot):
        reflection(rs, (2, 0))


def test_weyl_group_elements_unique_and_closed():
    rs = build_root_system(CartanType("G", 2))
    w = weyl_group(rs)
    assert w.order == 12
    assert len(set(w.elements)) == 12
    assert w.elements[0] == type(w.elements[0]).identity(2)


def test_order_cap():
    rs = build_root_system(CartanType("E", 7))
    with pytest.raises(OrderCapExceeded):
        weyl_group(rs)


def test_weyl_orbit():
    rs = build_root_system(CartanType("A", 2))
    w = weyl_group(rs)
    orbit = weyl_orbit(w, rs.simple_roots[0])
    assert len(orbit) == 6
    with pytest.raises(DimensionMismatch):
        weyl_orbit(w, (1, 0, 0))


def test_ambient_realization():
    m = ambient_realization_A(4)
    assert m.rows == ((1, 0, 0), (-1, 1, 0), (0, -1, 1), (0, 0, -1))
    with pytest.raises(InvalidType):
        ambient_realization_A(1)
