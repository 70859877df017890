"""Evaluation of the loop-power classes: from a free-group word to homology
coordinates of the pair complex, plus the identities that certify the
construction.

A positive word w of length L, read left to right, is a concatenation of L
generator loops; its n-th power map sends the order simplex D^n into the
n-fold product of the wedge.  Subdividing the traversal into the L segments
decomposes that map as a signed sum over pairs (composition of n into L
parts, shuffle of the composition):

* position p of [1, n] belongs to block b(p) (positions are split
  consecutively by the composition), and travels along the letter of that
  block;
* the parameter it reads is coordinate sigma(p) of the input, so in the
  simplicial model the component is the edge cell with jump n - sigma(p) + 1
  (the coordinate map t -> t_q switches value at vertex n - q + 1);
* the term's sign is the shuffle's sign.

Every term lands in the canonical basis (jumps are then a bijection, and no
component sits at the basepoint), the signed sum is a relative cycle, and
its homology coordinates are the value of the transformation.  Words with
inverse letters are first rewritten as combinations of positive words with
the same degree-n expansion.

The module also houses the cross-checks used by the verification suites: a
pointwise sampling oracle for the decomposition, the symbolic
inclusion-exclusion cancellation over block alphabets, the vanishing of
subset-alternating sums in homology, and naturality under wedge maps.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import ceil, comb
from random import Random
from typing import Mapping, Sequence

from .homology import HomologySummary, homology
from .permutations import Perm, enumerate_shuffles, epsilon, iter_compositions
from .wedge import PairComplex, ProductSimplex, build_pair_complex, in_Y, push_simplex
from .words import Word, WordCombo, check_rank, is_positive, positivize

BASEPOINT = ("*",)


@dataclass(frozen=True)
class ShuffleTerm:
    """One summand of the subdivision of a length-L positive word's n-th
    power: a composition of n into L parts and a shuffle of it."""

    word: Word
    parts: tuple[int, ...]
    sigma: Perm

    def __post_init__(self):
        if sum(self.parts) != len(self.sigma):
            raise ValueError("composition and permutation sizes disagree")
        if len(self.parts) != len(self.word):
            raise ValueError("one composition part per letter is required")

    @property
    def sign(self) -> int:
        return epsilon(self.sigma)

    def block_of(self, p: int) -> int:
        """1-based block index containing position p."""
        total = 0
        for b, size in enumerate(self.parts, start=1):
            total += size
            if p <= total:
                return b
        raise ValueError(f"position {p} out of range")


def shuffle_expand(w: Word, n: int) -> list[ShuffleTerm]:
    """All L^n terms of the decomposition of a positive word's n-th power."""
    if not w:
        raise ValueError("the empty word has no blocks to decompose over")
    if not is_positive(w):
        raise ValueError("only positive words decompose geometrically")
    if n < 1:
        raise ValueError("need n >= 1")
    out = []
    for parts in iter_compositions(n, len(w)):
        for sigma in enumerate_shuffles(parts):
            out.append(ShuffleTerm(w, parts, sigma))
    return out


def term_to_simplex(t: ShuffleTerm) -> ProductSimplex:
    """The basis simplex of a term: position p carries the block letter
    with jump n - sigma(p) + 1."""
    n = len(t.sigma)
    comps = []
    for p in range(1, n + 1):
        letter = t.word[t.block_of(p) - 1][0]
        comps.append((letter, n - t.sigma[p - 1] + 1))
    return ProductSimplex(n, tuple(comps))


# ---------------------------------------------------------------------------
# The transformation.
# ---------------------------------------------------------------------------


def _as_combo(elt: Word | Mapping[Word, int], n: int) -> WordCombo:
    combo: WordCombo = {}
    items = [(elt, 1)] if isinstance(elt, tuple) else elt.items()
    for w, c in items:
        for u, cu in positivize(tuple(w), n).items():
            c2 = combo.get(u, 0) + c * cu
            if c2:
                combo[u] = c2
            else:
                combo.pop(u, None)
    return combo


def nu_vector(elt: Word | Mapping[Word, int], cx: PairComplex) -> list[int]:
    """Chain vector of the transformation on the degree-n basis of the
    pair complex.  Inverse letters are rewritten first; the empty word is
    the constant loop, whose simplices all collapse, so it contributes 0."""
    n = cx.n
    combo = _as_combo(elt, n)
    out = [0] * cx.rank(n)
    index = {s: i for i, s in enumerate(cx.basis(n))}
    for w, c in combo.items():
        if not w:
            continue
        check_rank(w, cx.g)
        for t in shuffle_expand(w, n):
            s = term_to_simplex(t)
            out[index[s]] += c * t.sign
    return out


def nu_eval(
    elt: Word | Mapping[Word, int],
    n: int,
    g: int,
    cx: PairComplex | None = None,
    summary: HomologySummary | None = None,
) -> tuple[int, ...]:
    """Homology coordinates of the transformation applied to a word (or an
    integer combination of words)."""
    if cx is None:
        cx = build_pair_complex(n, g)
    if summary is None:
        summary = homology(cx, n)
    return summary.cycle_class(nu_vector(elt, cx))


def vanishing_sum_check(
    gamma: Word,
    alphas: Sequence[Word],
    n: int,
    g: int,
    cx: PairComplex | None = None,
    summary: HomologySummary | None = None,
) -> tuple[bool, tuple[int, ...]]:
    """Evaluate sum over subsets I of {0..n} of (-1)^{|I|} applied to
    gamma * prod_{i in I} alpha_i (ascending), in homology.

    The summed combination equals gamma * prod_i (1 - alpha_i), a right
    multiple of n+1 augmentation factors, so the result must be zero; the
    coordinates are returned alongside for reporting.
    """
    if len(alphas) != n + 1:
        raise ValueError(f"need exactly {n + 1} loops, got {len(alphas)}")
    combo: WordCombo = {}
    for bits in itertools.product((0, 1), repeat=n + 1):
        word = tuple(gamma)
        for a, bit in zip(alphas, bits):
            if bit:
                word = word + tuple(a)
        c = (-1) ** sum(bits)
        c2 = combo.get(word, 0) + c
        if c2:
            combo[word] = c2
        else:
            combo.pop(word, None)
    coords = nu_eval(combo, n, g, cx, summary)
    return not any(coords), coords


# ---------------------------------------------------------------------------
# Symbolic inclusion-exclusion cancellation.
# ---------------------------------------------------------------------------

# a symbolic term: per output position, (block symbol, source coordinate);
# symbols 0..n are the deletable loops, n+1 the fixed last block
SymbolicMapTerm = tuple[tuple[int, int], ...]


def symbolic_cancellation(n: int) -> dict[SymbolicMapTerm, int]:
    """Expand sum_{I subset of {0..n}} (-1)^{|I|} (subdivision of the
    concatenation of the I-loops then the fixed loop) into canonical
    per-position terms; everything cancels, so the expected value is {}.

    Terms from different I coincide exactly when they use the same blocks
    with the same composition and shuffle (zero blocks are invisible), and
    each such profile is counted with sum_{I containing its support}
    (-1)^{|I|} = 0 -- the support can never be all of {0..n} since the
    composition only carries n units over n+1 candidate blocks.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    acc: dict[SymbolicMapTerm, int] = {}
    for size in range(0, n + 2):
        for chosen in itertools.combinations(range(n + 1), size):
            slots = list(chosen) + [n + 1]
            sign_I = (-1) ** size
            for parts in iter_compositions(n, len(slots)):
                for sigma in enumerate_shuffles(parts):
                    term = []
                    pos = 0
                    for slot, part in zip(slots, parts):
                        for _ in range(part):
                            term.append((slot, sigma[pos]))
                            pos += 1
                    key = tuple(term)
                    c = acc.get(key, 0) + sign_I * epsilon(sigma)
                    if c:
                        acc[key] = c
                    else:
                        acc.pop(key, None)
    return acc


# ---------------------------------------------------------------------------
# Pointwise sampling oracle.
# ---------------------------------------------------------------------------


def path_eval(w: Word, s: Fraction) -> tuple:
    """Evaluate the concatenated-loops path at time s in [0, 1], as
    (letter, local parameter); both endpoints of every loop sit at the
    basepoint, reported as a common token."""
    if not 0 <= s <= 1:
        raise ValueError(f"time {s} outside [0, 1]")
    k = len(w)
    if k == 0:
        return BASEPOINT
    b = max(ceil(k * s), 1)
    u = k * s - (b - 1)
    if u == 0 or u == 1:
        return BASEPOINT
    return (w[b - 1][0], u)


def term_matches_path(
    t: ShuffleTerm,
    x: Sequence[Fraction],
    cell: ProductSimplex | None = None,
) -> bool:
    """Whether, at the sample point x, the simplex encoding the term agrees
    with the subdivided path.

    Position p of the path side evaluates the concatenated loops at time
    (b(p) - 1 + x_{sigma(p)}) / k, the p-th output of the term's
    subdivision piece; the simplex side reads component p of
    ``term_to_simplex(t)``, whose jump j names the source coordinate
    q = n - j + 1.  ``cell`` substitutes a different simplex (for negative
    controls).
    """
    w = t.word
    k = len(w)
    n = len(t.sigma)
    if cell is None:
        cell = term_to_simplex(t)
    for p in range(1, n + 1):
        letter, jump = cell.components[p - 1]
        u = x[(n - jump + 1) - 1]
        lhs = path_eval(w, Fraction(t.block_of(p) - 1 + x[t.sigma[p - 1] - 1], k))
        rhs = BASEPOINT if u in (0, 1) else (letter, u)
        if lhs != rhs:
            return False
    return True


def random_simplex_points(n: int, count: int, seed: int) -> list[tuple[Fraction, ...]]:
    """Seeded exact-rational points of the order simplex (sorted coords)."""
    rng = Random(seed)
    out = []
    for _ in range(count):
        coords = []
        for _ in range(n):
            den = rng.randint(1, 24)
            coords.append(Fraction(rng.randint(0, den), den))
        out.append(tuple(sorted(coords)))
    return out


def sampling_oracle(w: Word, n: int, points: Sequence[Sequence[Fraction]]) -> bool:
    """Check every decomposition term of w against the path at every point."""
    terms = shuffle_expand(w, n)
    return all(term_matches_path(t, x) for t in terms for x in points)


# ---------------------------------------------------------------------------
# Naturality under wedge maps.
# ---------------------------------------------------------------------------


def push_word(w: Word, gen_map: Mapping[int, int | None]) -> Word:
    """Relabel generators along a pointed wedge map; collapsed letters
    disappear (their loop becomes constant)."""
    out = []
    for i, e in w:
        target = gen_map.get(i)
        if target is not None:
            out.append((target, e))
    return tuple(out)


def push_chain_vector(
    src: PairComplex,
    tgt: PairComplex,
    d: int,
    vec: Sequence[int],
    gen_map: Mapping[int, int | None],
) -> list[int]:
    """Push a chain vector forward componentwise, dropping simplices that
    become degenerate or fall into the collapsed subspace."""
    out = [0] * tgt.rank(d)
    basis = src.basis(d)
    index = {s: i for i, s in enumerate(tgt.basis(d))}
    for i, c in enumerate(vec):
        if not c:
            continue
        s = push_simplex(basis[i], gen_map)
        if not s.is_nondegenerate() or in_Y(s):
            continue
        out[index[s]] += c
    return out


def naturality_check(
    gen_map: Mapping[int, int | None],
    w: Word,
    n: int,
    g_src: int,
    g_tgt: int,
    src: PairComplex | None = None,
    tgt: PairComplex | None = None,
    tgt_summary: HomologySummary | None = None,
) -> bool:
    """Evaluate-then-push equals push-then-evaluate, in target homology."""
    for i, target in gen_map.items():
        if not 1 <= i <= g_src:
            raise ValueError(f"source generator {i} out of range")
        if target is not None and not 1 <= target <= g_tgt:
            raise ValueError(f"target generator {target} out of range")
    if src is None:
        src = build_pair_complex(n, g_src)
    if tgt is None:
        tgt = build_pair_complex(n, g_tgt)
    if tgt_summary is None:
        tgt_summary = homology(tgt, n)
    lhs = tgt_summary.cycle_class(nu_vector(push_word(w, gen_map), tgt))
    pushed = push_chain_vector(src, tgt, n, nu_vector(w, src), gen_map)
    rhs = tgt_summary.cycle_class(pushed)
    return lhs == rhs


# ---------------------------------------------------------------------------
# The matrix of the transformation on expansion coordinates.
# ---------------------------------------------------------------------------


def nu_basis_matrix(
    n: int,
    cx: PairComplex | None = None,
    summary: HomologySummary | None = None,
) -> list[list[int]]:
    """For the rank-1 group: columns are the homology coordinates of the
    combinations expanding to the pure powers X^0, X^1, ..., X^n (the
    m-th column evaluates (x - 1)^m, whose expansion is exactly X^m).

    Column 0 is the empty word's value, which vanishes; the remaining n
    columns have full rank n when the transformation is faithful on the
    quotient coordinates.
    """
    if cx is None:
        cx = build_pair_complex(n, 1)
    if summary is None:
        summary = homology(cx, n)
    x = ((1, 1),)
    cols = []
    for m in range(n + 1):
        combo: WordCombo = {}
        for j in range(m + 1):
            combo[x * j] = (-1) ** (m - j) * comb(m, j)
        cols.append(list(nu_eval(combo, n, 1, cx, summary)))
    rows = len(cols[0]) if cols else 0
    return [[cols[c][r] for c in range(len(cols))] for r in range(rows)]
