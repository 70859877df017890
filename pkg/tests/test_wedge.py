"""Tests for the product-of-circles simplicial model and its pair complex."""

from __future__ import annotations

import itertools
import math

import pytest

from loophom.wedge import (
    Cell,
    ProductSimplex,
    build_pair_complex,
    cell_face,
    complex_to_json,
    enumerate_basis,
    enumerate_nondegenerate,
    in_Y,
    push_simplex,
    simplex_str,
)

A = ProductSimplex(2, ((1, 2), (1, 1)))
B = ProductSimplex(2, ((1, 1), (1, 2)))


def all_product_simplices(n: int, g: int, d: int) -> list[ProductSimplex]:
    cells: list[Cell] = [None]
    cells += [(e, j) for e in range(1, g + 1) for j in range(1, d + 1)]
    return [ProductSimplex(d, c) for c in itertools.product(cells, repeat=n)]


# ---------------------------------------------------------------------------
# Cells and faces.
# ---------------------------------------------------------------------------


def test_edge_faces_collapse_to_basepoint():
    assert cell_face((1, 1), 1, 0) is None
    assert cell_face((1, 1), 1, 1) is None


def test_cell_face_shifts_jump():
    # dimension 3 cell jumping at 2: deleting an early vertex moves the jump
    assert cell_face((1, 2), 3, 0) == (1, 1)
    assert cell_face((1, 2), 3, 3) == (1, 2)
    assert cell_face((1, 1), 3, 0) is None
    assert cell_face((1, 3), 3, 3) is None


def test_face_frozen_example():
    s = ProductSimplex(2, ((1, 1), (1, 2)))
    assert s.face(1) == ProductSimplex(1, ((1, 1), (1, 1)))


def test_simplicial_face_identities():
    for n in (1, 2, 3):
        for g in (1, 2):
            for d in (2, 3, 4):
                for s in all_product_simplices(n, g, d):
                    for j in range(1, d + 1):
                        for i in range(0, j):
                            assert s.face(j).face(i) == s.face(i).face(j - 1)


def test_validation():
    with pytest.raises(ValueError):
        ProductSimplex(1, ((1, 2),))
    with pytest.raises(ValueError):
        ProductSimplex(2, ((0, 1),))


# ---------------------------------------------------------------------------
# Degeneracy and the collapsed subspace.
# ---------------------------------------------------------------------------


def test_nondegenerate_iff_jumps_cover():
    s = ProductSimplex(2, ((1, 2), (1, 1)))
    assert s.is_nondegenerate()
    assert not ProductSimplex(2, ((1, 2), (1, 2))).is_nondegenerate()
    assert not ProductSimplex(2, (None, (1, 1))).is_nondegenerate()
    assert ProductSimplex(0, (None, None)).is_nondegenerate()


def test_in_Y_frozen_cases():
    assert in_Y(ProductSimplex(1, (None, (1, 1))))
    assert in_Y(ProductSimplex(1, ((1, 1), (1, 1))))
    assert not in_Y(A)
    assert not in_Y(B)


def test_Y_is_closed_under_faces():
    for n in (1, 2, 3):
        for g in (1, 2):
            for d in (1, 2, 3, 4):
                for s in all_product_simplices(n, g, d):
                    if not in_Y(s):
                        continue
                    for i in range(0, d + 1):
                        t = s.face(i)
                        assert in_Y(t) or not t.is_nondegenerate(), (s, i)


# ---------------------------------------------------------------------------
# Basis enumeration.
# ---------------------------------------------------------------------------


def test_top_dimension_count_before_filter():
    for n in (1, 2, 3, 4):
        for g in (1, 2):
            got = enumerate_nondegenerate(n, g, n)
            assert len(got) == g ** n * math.factorial(n)


def test_enumeration_matches_brute_force():
    for n in (1, 2, 3):
        for g in (1, 2):
            for d in range(0, n + 2):
                brute = [
                    s
                    for s in all_product_simplices(n, g, d)
                    if s.is_nondegenerate()
                ]
                got = enumerate_nondegenerate(n, g, d)
                assert sorted(got, key=ProductSimplex.sort_key) == got
                assert set(got) == set(brute)
                assert enumerate_basis(n, g, d) == [s for s in got if not in_Y(s)]


def test_basis_frozen_examples():
    assert enumerate_basis(2, 1, 2) == [A, B]
    assert enumerate_basis(2, 1, 1) == []
    assert enumerate_basis(2, 1, 3) == []
    assert enumerate_basis(3, 1, 4) == []
    # two distinct letters dodge the diagonal in dimension 1
    assert len(enumerate_basis(2, 2, 1)) == 2


def test_known_ranks():
    cx = build_pair_complex(1, 1)
    assert [cx.rank(d) for d in range(0, 3)] == [0, 1, 0]
    cx = build_pair_complex(2, 1)
    assert [cx.rank(d) for d in range(0, 4)] == [0, 0, 2, 0]
    cx = build_pair_complex(3, 1)
    assert cx.rank(3) == 6
    assert cx.rank(2) == 4


# ---------------------------------------------------------------------------
# The pair complex.
# ---------------------------------------------------------------------------


def matmul(a, b):
    if not a or not b:
        return []
    return [
        [sum(a[r][k] * b[k][c] for k in range(len(b))) for c in range(len(b[0]))]
        for r in range(len(a))
    ]


def test_boundary_squares_to_zero():
    for n in (1, 2, 3):
        for g in (1, 2):
            cx = build_pair_complex(n, g)
            for d in range(2, cx.d_max + 1):
                prod = matmul(
                    [list(r) for r in cx.boundary_matrix(d - 1)],
                    [list(r) for r in cx.boundary_matrix(d)],
                )
                assert all(all(v == 0 for v in row) for row in prod), (n, g, d)


def test_boundary_matrix_shapes():
    cx = build_pair_complex(3, 1)
    m = cx.boundary_matrix(3)
    assert len(m) == cx.rank(2)
    assert all(len(row) == cx.rank(3) for row in m)
    beyond = cx.boundary_matrix(cx.d_max + 1)
    assert len(beyond) == cx.rank(cx.d_max)
    assert all(row == () for row in beyond)


# ---------------------------------------------------------------------------
# Pushforward along wedge maps.
# ---------------------------------------------------------------------------


def test_push_simplex_relabel_and_collapse():
    relabel = push_simplex(A, {1: 2})
    assert relabel == ProductSimplex(2, ((2, 2), (2, 1)))
    collapsed = push_simplex(A, {1: None})
    assert collapsed.components == (None, None)
    assert not collapsed.is_nondegenerate()


# ---------------------------------------------------------------------------
# Serialization.
# ---------------------------------------------------------------------------


def test_simplex_str():
    assert simplex_str(A) == "((x,2),(x,1))"
    assert simplex_str(ProductSimplex(1, (None, (2, 1))), "xy") == "(*,(y,1))"


def test_complex_to_json_round_trips_boundary():
    cx = build_pair_complex(3, 1)
    data = complex_to_json(cx)
    assert data["n"] == 3 and data["g"] == 1
    by_d = {entry["d"]: entry for entry in data["dims"]}
    assert len(by_d[3]["basis"]) == 6
    dense = [[0] * cx.rank(3) for _ in range(cx.rank(2))]
    for r, c, v in by_d[3]["boundary"]:
        dense[r][c] = v
    assert dense == [list(r) for r in cx.boundary_matrix(3)]
    for entry in by_d[2]["basis"]:
        assert len(entry) == 3
        for comp in entry:
            assert comp is None or (
                isinstance(comp[0], str) and isinstance(comp[1], int)
            )
