"""Levi restrictions, parabolic diagrams, and twists (the A_4 worked case)."""

import pytest

from chambergeo.errors import InvalidType, NotAWall
from chambergeo.parabolic import (MarkedDynkin, levi_subspace,
                                  parabolics_with_levi, render_diagram,
                                  restricted_arrangement, twist, context)
from chambergeo.rootsys import CartanType, build_root_system

A4 = build_root_system(CartanType("A", 4))
A2 = build_root_system(CartanType("A", 2))
LEVI = (0, 3)  # Bourbaki vertices 1 and 4

# the six expected black-label sets of the A_4, I={1,4} diagrams
EXPECTED_BLACKS = [
    {(0, 1, 0, 0), (0, 0, 1, 0)},                    # a2, a3
    {(0, -1, 0, 0), (1, 1, 1, 0)},                   # -a2, a1+a2+a3
    {(0, 0, 1, 1), (-1, -1, -1, 0)},                 # a3+a4, -(a1+a2+a3)
    {(0, 0, -1, -1), (-1, -1, 0, 0)},                # -(a3+a4), -(a1+a2)
    {(0, -1, -1, -1), (1, 1, 0, 0)},                 # -(a2+a3+a4), a1+a2
    {(0, 1, 1, 1), (0, 0, -1, 0)},                   # a2+a3+a4, -a3
]


def test_marked_dynkin_validation():
    MarkedDynkin(CartanType("A", 4), (0, 3))
    with pytest.raises(InvalidType):
        MarkedDynkin(CartanType("A", 2), (0, 1))  # not proper
    with pytest.raises(InvalidType):
        MarkedDynkin(CartanType("A", 2), (5,))


def test_levi_subspace_dimensions():
    assert len(levi_subspace(A4, LEVI)) == 2
    assert len(levi_subspace(A2, (0,))) == 1
    assert len(levi_subspace(A2, ())) == 2


def test_restricted_arrangement_is_u_v_uv():
    arr = restricted_arrangement(A4, LEVI)
    assert [h.normal for h in arr.hyperplanes] == [(0, 1), (1, 0), (1, 1)]


def test_restricted_arrangement_collapses():
    arr = restricted_arrangement(A2, (0,))
    assert len(arr.hyperplanes) == 1
    full = restricted_arrangement(A2, ())
    assert len(full.hyperplanes) == 3


def test_six_diagrams_have_expected_black_sets():
    diags = parabolics_with_levi(A4, LEVI)
    assert len(diags) == 6
    got = [set(d.black_roots()) for d in diags]
    for blacks in EXPECTED_BLACKS:
        assert got.count(blacks) == 1


def test_bases_reproduce_dynkin_diagram():
    for d in parabolics_with_levi(A4, LEVI):
        for i in range(4):
            for j in range(4):
                cij = 2 * A4.pair(d.base[i], d.base[j]) / \
                    A4.pair(d.base[i], d.base[i])
                assert cij == A4.cartan_matrix.rows[i][j]


def test_white_roots_span_levi():
    ctx = context(A4, LEVI)
    for d in parabolics_with_levi(A4, LEVI):
        assert len(d.white_positions) == 2
        for p in d.white_positions:
            assert d.base[p] in ctx.levi_root_set


def test_twist_sequence_visits_all_chambers():
    diags = {frozenset(d.black_roots()): d for d in
             parabolics_with_levi(A4, LEVI)}
    cur = diags[frozenset(EXPECTED_BLACKS[0])]
    visited = [cur.chamber]
    for target in EXPECTED_BLACKS[1:]:
        nxt = None
        for p in cur.black_positions():
            try:
                t = twist(A4, LEVI, cur, p)
            except NotAWall:
                continue
            if set(t.black_roots()) == target:
                nxt = t
                break
        assert nxt is not None, f"no single twist reaches {target}"
        cur = nxt
        visited.append(cur.chamber)
    assert len(set(visited)) == 6


def test_twist_is_involutive():
    p0 = parabolics_with_levi(A4, LEVI)[0]
    for p in p0.black_positions():
        t = twist(A4, LEVI, p0, p)
        back = [twist(A4, LEVI, t, q) for q in t.black_positions()
                if twist(A4, LEVI, t, q).chamber == p0.chamber]
        assert any(b.base == p0.base for b in back)


def test_twist_rejects_white_vertex():
    p0 = parabolics_with_levi(A4, LEVI)[0]
    with pytest.raises(NotAWall):
        twist(A4, LEVI, p0, p0.white_positions[0])


def test_empty_levi_gives_weyl_chambers():
    diags = parabolics_with_levi(A2, ())
    assert len(diags) == 6
    assert all(d.white_positions == () for d in diags)


def test_single_levi_vertex():
    diags = parabolics_with_levi(A2, (0,))
    assert len(diags) == 2


def test_render_diagram():
    p0 = parabolics_with_levi(A4, LEVI)[0]
    text = render_diagram(A4, p0)
    lines = text.splitlines()
    assert len(lines) == 2
    assert lines[0].count("o") == 2 and lines[0].count("*") == 2
    assert "a2" in lines[1] and "a4" in lines[1]
