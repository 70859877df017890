"""Pins and properties for the word-to-homology evaluation."""

import itertools
from fractions import Fraction
from math import comb

import pytest

from loophom.homology import homology, smith_normal_form
from loophom.transform import (
    BASEPOINT,
    ShuffleTerm,
    naturality_check,
    nu_basis_matrix,
    nu_eval,
    nu_vector,
    path_eval,
    push_word,
    random_simplex_points,
    sampling_oracle,
    shuffle_expand,
    symbolic_cancellation,
    term_matches_path,
    term_to_simplex,
    vanishing_sum_check,
)
from loophom.wedge import ProductSimplex, build_pair_complex, in_Y
from loophom.words import parse_word

X = ((1, 1),)
A = ProductSimplex(2, ((1, 2), (1, 1)))
B = ProductSimplex(2, ((1, 1), (1, 2)))


def positive_words(g, max_len):
    for length in range(1, max_len + 1):
        for letters in itertools.product(range(1, g + 1), repeat=length):
            yield tuple((i, 1) for i in letters)


# ---------------------------------------------------------------------------
# Decomposition terms.
# ---------------------------------------------------------------------------


def test_shuffle_expand_counts():
    for length in (1, 2, 3):
        w = tuple((1 + i % 2, 1) for i in range(length))
        for n in (1, 2, 3, 4):
            terms = shuffle_expand(w, n)
            assert len(terms) == length**n
            assert len(set((t.parts, t.sigma) for t in terms)) == len(terms)
            for t in terms:
                assert sum(t.parts) == n
                assert t.sign in (1, -1)


def test_shuffle_expand_frozen():
    terms = {(t.parts, t.sigma, t.sign) for t in shuffle_expand(X + X, 2)}
    assert terms == {
        ((2, 0), (1, 2), 1),
        ((1, 1), (1, 2), 1),
        ((1, 1), (2, 1), -1),
        ((0, 2), (1, 2), 1),
    }


def test_shuffle_expand_errors():
    with pytest.raises(ValueError):
        shuffle_expand((), 2)
    with pytest.raises(ValueError):
        shuffle_expand(((1, -1),), 2)
    with pytest.raises(ValueError):
        shuffle_expand(X, 0)


def test_term_to_simplex_frozen():
    assert term_to_simplex(ShuffleTerm(X, (2,), (1, 2))) == A
    xy = parse_word("xy")
    assert term_to_simplex(ShuffleTerm(xy, (1, 1), (1, 2))) == ProductSimplex(
        2, ((1, 2), (2, 1))
    )
    assert term_to_simplex(ShuffleTerm(xy, (1, 1), (2, 1))) == ProductSimplex(
        2, ((1, 1), (2, 2))
    )
    assert term_to_simplex(ShuffleTerm(X, (3,), (1, 2, 3))) == ProductSimplex(
        3, ((1, 3), (1, 2), (1, 1))
    )


def test_terms_land_in_the_canonical_basis():
    for g in (1, 2):
        for w in positive_words(g, 3):
            for n in (1, 2, 3):
                for t in shuffle_expand(w, n):
                    s = term_to_simplex(t)
                    assert s.is_nondegenerate()
                    assert not in_Y(s)


# ---------------------------------------------------------------------------
# Chain vectors and homology values.
# ---------------------------------------------------------------------------


def test_nu_vector_frozen():
    cx = build_pair_complex(2, 1)
    assert list(cx.basis(2)) == [A, B]
    assert nu_vector((), cx) == [0, 0]
    assert nu_vector(X, cx) == [1, 0]
    assert nu_vector(X * 2, cx) == [3, -1]
    assert nu_vector(X * 3, cx) == [6, -3]


def test_nu_vector_rewrites_inverse_letters():
    cx = build_pair_complex(1, 1)
    assert nu_vector(X, cx) == [1]
    assert nu_vector(((1, -1),), cx) == [-1]
    # a trivial loop written with a cancelling pair evaluates like the
    # empty word
    assert nu_vector(parse_word("xX"), cx) == [0]


def test_nu_chains_are_cycles():
    for g in (1, 2):
        for n in (1, 2, 3):
            cx = build_pair_complex(n, g)
            summary = homology(cx, n)
            for w in positive_words(g, 3):
                assert summary.is_cycle(nu_vector(w, cx))


def test_nu_eval_pins():
    assert nu_eval((), 2, 1) == (0, 0)
    assert nu_eval(X, 2, 1) == (1, 0)
    assert nu_eval(X * 2, 2, 1) == (3, -1)
    assert nu_eval(X * 3, 2, 1) == (6, -3)
    for m in range(4):
        assert nu_eval(X * m, 1, 1) == (m,)


def test_values_follow_expansion_coordinates():
    # the value of x^m is the basis matrix applied to the binomial
    # coordinates (1, C(m,1), ..., C(m,n)) -- equivalently, the evaluation
    # kills every difference of degree above n
    for n in (1, 2, 3):
        cx = build_pair_complex(n, 1)
        summary = homology(cx, n)
        mat = nu_basis_matrix(n, cx, summary)
        for m in range(n + 3):
            coords = [comb(m, d) for d in range(n + 1)]
            expected = tuple(
                sum(row[c] * coords[c] for c in range(n + 1)) for row in mat
            )
            assert nu_eval(X * m, n, 1, cx, summary) == expected


def test_nu_basis_matrix_frozen_and_rank():
    assert nu_basis_matrix(1) == [[0, 1]]
    assert nu_basis_matrix(2) == [[0, 1, 1], [0, 0, -1]]
    for n in (1, 2, 3):
        mat = nu_basis_matrix(n)
        assert len(mat) == n
        assert all(row[0] == 0 for row in mat)
        _, d, _ = smith_normal_form([row[1:] for row in mat])
        rank = sum(1 for i in range(min(n, n)) if d[i][i])
        assert rank == n


def test_kernel_of_the_quotient_vanishes():
    # w * (alpha - 1)^{n+1} evaluates to zero: the n+1-fold difference
    # exhausts the truncation degree
    cases = [
        (1, 1, (), X),
        (1, 1, X, X),
        (2, 1, (), X),
        (2, 1, X, X),
        (2, 2, parse_word("y"), X),
        (2, 2, X, parse_word("y")),
    ]
    for n, g, w, alpha in cases:
        combo = {}
        for j in range(n + 2):
            word = tuple(w) + tuple(alpha) * j
            c = (-1) ** (n + 1 - j) * comb(n + 1, j)
            combo[word] = combo.get(word, 0) + c
        coords = nu_eval(combo, n, g)
        assert not any(coords)


# ---------------------------------------------------------------------------
# Subset-alternating sums.
# ---------------------------------------------------------------------------


def test_vanishing_sum_cases():
    cases = [
        ((), (X, X, X), 2, 1),
        (X, (X, X * 2, X), 2, 1),
        (parse_word("y"), (X, parse_word("y"), parse_word("xy")), 2, 2),
        (X, (X, parse_word("y")), 1, 2),
        ((), (X, X, X, X), 3, 1),
    ]
    for gamma, alphas, n, g in cases:
        ok, coords = vanishing_sum_check(gamma, alphas, n, g)
        assert ok, coords
        assert coords == tuple([0] * len(coords))


def test_vanishing_sum_needs_n_plus_one_loops():
    with pytest.raises(ValueError):
        vanishing_sum_check((), (X, X), 2, 1)


def test_symbolic_cancellation_empty():
    for n in (1, 2, 3):
        assert symbolic_cancellation(n) == {}
    with pytest.raises(ValueError):
        symbolic_cancellation(0)


# ---------------------------------------------------------------------------
# Pointwise sampling oracle.
# ---------------------------------------------------------------------------


def test_path_eval_frozen():
    xy = parse_word("xy")
    assert path_eval(xy, Fraction(0)) == BASEPOINT
    assert path_eval(xy, Fraction(1, 4)) == (1, Fraction(1, 2))
    assert path_eval(xy, Fraction(1, 2)) == BASEPOINT
    assert path_eval(xy, Fraction(3, 4)) == (2, Fraction(1, 2))
    assert path_eval(xy, Fraction(1)) == BASEPOINT
    assert path_eval((), Fraction(1, 3)) == BASEPOINT
    with pytest.raises(ValueError):
        path_eval(xy, Fraction(3, 2))


def test_random_simplex_points_are_exact_and_ordered():
    pts = random_simplex_points(3, 50, seed=7)
    assert len(pts) == 50
    assert pts == random_simplex_points(3, 50, seed=7)
    for x in pts:
        assert all(isinstance(c, Fraction) for c in x)
        assert all(0 <= c <= 1 for c in x)
        assert list(x) == sorted(x)


def test_sampling_oracle_accepts_all_terms():
    for g in (1, 2):
        for w in positive_words(g, 3):
            for n in (1, 2, 3):
                pts = random_simplex_points(n, 25, seed=1000 + n)
                assert sampling_oracle(w, n, pts)


def test_sampling_oracle_rejects_forged_cells():
    xy = parse_word("xy")
    t = ShuffleTerm(xy, (1, 1), (1, 2))
    x = (Fraction(1, 3), Fraction(1, 2))
    assert term_matches_path(t, x)
    wrong_letters = ProductSimplex(2, ((2, 2), (1, 1)))
    assert not term_matches_path(t, x, cell=wrong_letters)
    wrong_jumps = ProductSimplex(2, ((1, 1), (2, 2)))
    assert not term_matches_path(t, x, cell=wrong_jumps)


# ---------------------------------------------------------------------------
# Naturality.
# ---------------------------------------------------------------------------


def test_push_word_frozen():
    w = ((1, 1), (2, -1), (1, 1))
    assert push_word(w, {1: 1, 2: None}) == ((1, 1), (1, 1))
    assert push_word(w, {1: 2, 2: 1}) == ((2, 1), (1, -1), (2, 1))
    assert push_word((), {1: 1}) == ()


def test_naturality_cases():
    cases = [
        ({1: 1}, X, 1, 1, 1),
        ({1: 1}, X * 2, 2, 1, 1),
        ({1: 2}, X * 2, 2, 1, 2),
        ({1: None}, X, 1, 1, 1),
        ({1: None}, X * 2, 2, 1, 1),
        ({1: 1, 2: 1}, parse_word("xy"), 2, 2, 1),
        ({1: 2, 2: 1}, parse_word("xy"), 2, 2, 2),
        ({1: 1, 2: None}, parse_word("xy"), 2, 2, 1),
        ({1: 1, 2: 1}, parse_word("xY"), 2, 2, 1),
    ]
    for gen_map, w, n, g_src, g_tgt in cases:
        assert naturality_check(gen_map, w, n, g_src, g_tgt), (gen_map, w, n)


def test_naturality_validates_generator_ranges():
    with pytest.raises(ValueError):
        naturality_check({3: 1}, X, 1, 1, 1)
    with pytest.raises(ValueError):
        naturality_check({1: 5}, X, 1, 1, 1)
