"""Tests for exact-rational affine simplex maps.

The two commuting-diagram properties (involution invariance of the
face-of-piece composites, and the boundary bijection matching composites the
other way round) are checked here at module scale; the acceptance suite
reruns them at the full stated bounds.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from loophom.affine import (
    AffineSimplexMap,
    as_point,
    compose,
    constant_map,
    f_map,
    face_map,
    ftilde_map,
    identity_map,
    in_simplex,
    pointwise_face,
    subdivision_piece,
    vertex_E,
)
from loophom.permutations import bij, enumerate_ens, invol

F = Fraction


def all_perms(n):
    return list(itertools.permutations(range(1, n + 1)))


def simplex_points(q: int, denom: int = 3):
    """A small grid of exact points of the order simplex D^q."""
    vals = [F(a, denom) for a in range(denom + 1)]
    for xs in itertools.combinations_with_replacement(vals, q):
        yield xs


# ---------------------------------------------------------------------------
# Vertices and the map representation.
# ---------------------------------------------------------------------------


def test_vertex_E_frozen():
    assert vertex_E(3, 0) == (0, 0, 0)
    assert vertex_E(3, 1) == (0, 0, 1)
    assert vertex_E(3, 3) == (1, 1, 1)
    assert vertex_E(0, 0) == ()


def test_vertices_are_exact_and_in_simplex():
    for n in range(0, 5):
        for i in range(0, n + 1):
            v = vertex_E(n, i)
            assert all(isinstance(c, Fraction) for c in v)
            assert in_simplex(v)


def test_map_equality_is_vertex_list_equality():
    a = AffineSimplexMap(1, ((0,), (1,)))
    b = AffineSimplexMap(1, ((F(0),), (F(2, 2),)))
    assert a == b
    assert hash(a) == hash(b)
    assert a != AffineSimplexMap(1, ((0,), (F(1, 2),)))


def test_apply_sends_defining_vertices_to_their_images():
    m = AffineSimplexMap(2, ((0, 0), (F(1, 3), F(1, 2)), (1, 1)))
    for i in range(3):
        assert m.apply(vertex_E(2, i)) == m.vertices[i]


def test_apply_rejects_wrong_arity():
    with pytest.raises(ValueError):
        identity_map(2).apply((F(1, 2),))


# ---------------------------------------------------------------------------
# Faces.
# ---------------------------------------------------------------------------


def test_face_map_frozen_examples():
    assert face_map(1, 0).vertices == ((F(0),),)
    assert face_map(1, 1).vertices == ((F(1),),)
    assert face_map(2, 1).apply((F(1, 3),)) == (F(1, 3), F(1, 3))


def test_face_map_matches_pointwise_formula():
    for n in range(1, 5):
        for i in range(0, n + 1):
            fm = face_map(n, i)
            for x in simplex_points(n - 1):
                assert fm.apply(x) == pointwise_face(n, i, x)


def test_simplicial_face_identity():
    # for j <= i: d_i^{n} o d_j^{n-1} == d_j^{n} o d_{i-1}^{n-1} in this
    # indexing convention (checked mechanically over all pairs)
    for n in range(2, 5):
        for i in range(0, n + 1):
            for j in range(0, n):
                lhs = compose(face_map(n, i), face_map(n - 1, j))
                rhs = compose(face_map(n, j + 1), face_map(n - 1, i)) if j >= i else None
                if j >= i:
                    assert lhs == rhs


# ---------------------------------------------------------------------------
# Composition.
# ---------------------------------------------------------------------------


def test_compose_identity_neutral():
    m = subdivision_piece((0, 1), (2, 1), 2)
    assert compose(identity_map(2), m) == m
    assert compose(m, identity_map(2)) == m


def test_compose_associative_on_samples():
    a = face_map(3, 1)
    b = subdivision_piece((0, 1), (2, 1), 2)
    c = face_map(2, 2)
    assert compose(compose(a, b), c) == compose(a, compose(b, c))


def test_compose_agrees_with_pointwise_composition():
    g = subdivision_piece((1, 0, 2), (2, 1, 3), 3)
    f = face_map(3, 2)
    gf = compose(g, f)
    for x in simplex_points(2):
        assert gf.apply(x) == g.apply(f.apply(x))


def test_compose_dimension_mismatch():
    with pytest.raises(ValueError):
        compose(face_map(2, 0), face_map(3, 0))


def test_compose_constant_frozen_example():
    got = compose(subdivision_piece((1,), (1,), 2), face_map(1, 0))
    assert got == constant_map(1, (F(1, 2),))


# ---------------------------------------------------------------------------
# Subdivision pieces.
# ---------------------------------------------------------------------------


def test_subdivision_piece_frozen_examples():
    assert subdivision_piece((0,), (1,), 1) == identity_map(1)
    assert subdivision_piece((0, 0), (1, 2), 1) == identity_map(2)

    half = subdivision_piece((1,), (1,), 2)
    assert half.apply((F(1, 3),)) == (F(2, 3),)
    assert half.vertices == ((F(1, 2),), (F(1),))

    m = subdivision_piece((0, 1), (2, 1), 2)
    assert m.vertices == ((0, F(1, 2)), (F(1, 2), F(1, 2)), (F(1, 2), 1))


def test_subdivision_pieces_stay_in_simplex_on_index_pairs():
    for n in range(0, 5):
        for k in range(1, 5):
            for v, sigma in enumerate_ens(n, k):
                assert subdivision_piece(v, sigma, k).is_simplex_valued()


def test_subdivision_pieces_tile_volume():
    # the k^n pieces are disjoint up to boundary; sample interior points of
    # each piece at k=2 and check they are pairwise distinct
    n, k = 2, 2
    barycenter = (F(1, 3), F(2, 3))
    images = [subdivision_piece(v, s, k).apply(barycenter) for v, s in enumerate_ens(n, k)]
    assert len(set(images)) == k ** n


@given(st.integers(min_value=1, max_value=3), st.integers(min_value=1, max_value=4))
def test_subdivision_piece_pointwise_formula(n, k):
    # x |-> (v + sigma* x) / k, spot-checked against apply()
    for v, sigma in enumerate_ens(n, k):
        piece = subdivision_piece(v, sigma, k)
        for x in itertools.islice(simplex_points(n, 2), 4):
            moved = tuple(x[sigma[p] - 1] for p in range(n))
            expected = tuple(F(v[p] + moved[p], k) for p in range(n))
            assert piece.apply(x) == expected


# ---------------------------------------------------------------------------
# f and f-tilde composites.
# ---------------------------------------------------------------------------


def test_f_map_frozen_examples():
    m, sign = f_map(((0, 0), (1, 2), 0), 1)
    assert (m, sign) == (face_map(2, 0), 1)

    m, sign = f_map(((0, 0), (1, 2), 1), 2)
    assert m.vertices == ((0, 0), (F(1, 2), F(1, 2)))
    assert sign == -1


def test_f_map_shortcut_matches_generic_composition():
    for n in range(1, 4):
        for k in (1, 2, 3):
            for v, sigma in enumerate_ens(n, k):
                for i in range(0, n + 1):
                    m, _ = f_map((v, sigma, i), k)
                    assert m == compose(subdivision_piece(v, sigma, k), face_map(n, i))


def test_f_map_is_invol_invariant_with_opposite_sign():
    for n in (1, 2, 3):
        for k in (1, 2, 3):
            for v in itertools.product(range(-1, k + 1), repeat=n):
                for sigma in all_perms(n):
                    for i in range(0, n + 1):
                        x = (v, sigma, i)
                        mx, sx = f_map(x, k)
                        my, sy = f_map(invol(x), k)
                        assert mx == my
                        assert sx == -sy


def test_ftilde_matches_f_map_through_bij():
    for n in range(1, 4):
        for k in (1, 2, 3):
            for w, tau in enumerate_ens(n - 1, k):
                for i in range(0, n + 1):
                    mt, st_ = ftilde_map(w, tau, i, k)
                    mf, sf = f_map(bij(w, tau, i, k), k)
                    assert mt == mf
                    assert st_ == sf


def test_ftilde_frozen_examples():
    m, sign = ftilde_map((0, 0), (1, 2), 0, 1)
    assert (m, sign) == (face_map(3, 0), 1)
    _, sign = ftilde_map((0,), (1,), 2, 2)
    assert sign == 1
