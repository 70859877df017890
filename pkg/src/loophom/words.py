"""Free-group words and their truncated Magnus coordinates.

Words in the free group on generators 1..g are tuples of letters
``(generator index, exponent +-1)``.  The text form uses one lowercase
letter per generator and the corresponding uppercase letter for its
inverse; which letter names which generator is set by an *alphabet* string
(the default pool starts at ``x`` so that small examples read naturally).

The degree-n Magnus expansion sends generator i to ``1 + X_i`` in the ring
of noncommutative polynomials truncated above total degree n.  Its kernel
on integer combinations of words is exactly the span of the right-multiples
``(word) * (product of n+1 augmentation-ideal factors)``, so the monomials
of degree <= n give a free basis of the corresponding quotient of the group
ring.  ``positivize`` rewrites any word as an integer combination of
positive words with the same expansion, via

    (inverse of x)  ==  sum_{j=0}^{n} (1 - x)^j   (mod degree > n),

which lets the geometric evaluation downstream assume positive words.
"""

from __future__ import annotations

import itertools
from math import comb
from typing import Iterable, Mapping, Sequence

Word = tuple[tuple[int, int], ...]
Monomial = tuple[int, ...]
Tensor = dict[Monomial, int]
WordCombo = dict[Word, int]

# default letter pool: 'x' names generator 1 so the usual one- and
# two-generator examples read as x, y
LETTER_POOL = "xyzabcdefghijklmnopqrstuvw"


def make_alphabet(strings: Iterable[str], g: int) -> str:
    """An alphabet for a rank-g free group covering the given text words.

    Distinct letters used (case-folded) are bound to generators in
    alphabetical order; remaining generator slots take unused letters from
    the default pool.

    >>> make_alphabet(["xx"], 1)
    'x'
    >>> make_alphabet(["y", "xY"], 2)
    'xy'
    """
    strings = list(strings)
    for s in strings:
        if not all(c.isascii() and c.isalpha() for c in s):
            raise ValueError(f"word {s!r} must match [a-zA-Z]*")
    used = sorted({c.lower() for s in strings for c in s})
    if len(used) > g:
        raise ValueError(
            f"words use {len(used)} distinct letters but the group has rank {g}"
        )
    pool = [c for c in LETTER_POOL if c not in used]
    letters = used + pool[: g - len(used)]
    return "".join(letters[:g])


def parse_word(text: str, alphabet: str | None = None) -> Word:
    """Parse a text word; uppercase letters are inverses.

    With no alphabet given, the distinct letters of the text itself (in
    alphabetical order) name generators 1, 2, ...

    >>> parse_word("xXy", "xy")
    ((1, 1), (1, -1), (2, 1))
    """
    if not all(c.isascii() and c.isalpha() for c in text):
        raise ValueError(f"word {text!r} must match [a-zA-Z]*")
    if alphabet is None:
        alphabet = "".join(sorted({c.lower() for c in text}))
    index = {c: i for i, c in enumerate(alphabet, start=1)}
    letters = []
    for c in text:
        i = index.get(c.lower())
        if i is None:
            raise ValueError(f"letter {c!r} not in alphabet {alphabet!r}")
        letters.append((i, 1 if c.islower() else -1))
    return tuple(letters)


def word_str(w: Word, alphabet: str = LETTER_POOL) -> str:
    out = []
    for i, e in w:
        c = alphabet[i - 1]
        out.append(c if e == 1 else c.upper())
    return "".join(out)


def is_positive(w: Word) -> bool:
    return all(e == 1 for _, e in w)


def check_rank(w: Word, g: int) -> None:
    for i, e in w:
        if not 1 <= i <= g:
            raise ValueError(f"generator {i} out of range for rank {g}")
        if e not in (1, -1):
            raise ValueError(f"letter exponent must be +-1, got {e}")


def reduce_word(w: Word) -> Word:
    """Free reduction (cancel adjacent inverse pairs); idempotent.

    >>> reduce_word(((1, 1), (1, -1), (2, 1)))
    ((2, 1),)
    """
    stack: list[tuple[int, int]] = []
    for letter in w:
        if stack and stack[-1][0] == letter[0] and stack[-1][1] == -letter[1]:
            stack.pop()
        else:
            stack.append(letter)
    return tuple(stack)


def concat(*ws: Word) -> Word:
    out: Word = ()
    for w in ws:
        out = out + tuple(w)
    return out


# ---------------------------------------------------------------------------
# Truncated noncommutative polynomials.
# ---------------------------------------------------------------------------


def tensor_one() -> Tensor:
    return {(): 1}


def tensor_add(a: Tensor, b: Tensor, scale: int = 1) -> Tensor:
    out = dict(a)
    for m, c in b.items():
        c = out.get(m, 0) + scale * c
        if c:
            out[m] = c
        else:
            out.pop(m, None)
    return out


def tensor_mul(a: Tensor, b: Tensor, n: int) -> Tensor:
    """Product, dropping monomials of degree above n."""
    out: Tensor = {}
    for ma, ca in a.items():
        room = n - len(ma)
        if room < 0:
            continue
        for mb, cb in b.items():
            if len(mb) > room:
                continue
            m = ma + mb
            c = out.get(m, 0) + ca * cb
            if c:
                out[m] = c
            else:
                out.pop(m, None)
    return out


def _letter_tensor(i: int, e: int, n: int) -> Tensor:
    if e == 1:
        return {(): 1, (i,): 1} if n >= 1 else {(): 1}
    # geometric series for the inverse: sum_j (-X_i)^j, degree <= n
    return {(i,) * j: (-1) ** j for j in range(n + 1)}


def magnus(w: Word, n: int, g: int | None = None) -> Tensor:
    """Degree-n expansion of a word: multiplicative, generator i -> 1 + X_i.

    >>> magnus(((1, 1),), 2)
    {(): 1, (1,): 1}
    """
    if n < 0:
        raise ValueError("truncation degree must be >= 0")
    if g is not None:
        check_rank(w, g)
    out = tensor_one()
    for i, e in w:
        out = tensor_mul(out, _letter_tensor(i, e, n), n)
    return out


def combo_magnus(combo: Mapping[Word, int], n: int, g: int | None = None) -> Tensor:
    out: Tensor = {}
    for w, c in combo.items():
        out = tensor_add(out, magnus(w, n, g), scale=c)
    return out


# ---------------------------------------------------------------------------
# Rewriting into positive words.
# ---------------------------------------------------------------------------


def positivize(w: Word, n: int) -> WordCombo:
    """An integer combination of positive words with the same degree-n
    expansion as w.

    Each inverse letter is replaced by sum_{j<=n} (1-x)^j, whose x^m
    coefficient is (-1)^m C(n+1, m+1); the replacement differs from the
    inverse by a right multiple of (1-x)^{n+1}, hence is invisible at
    degree n.  The expansion equality is rechecked before returning.

    >>> positivize(((1, -1),), 1)
    {(): 2, ((1, 1),): -1}
    """
    combo: WordCombo = {(): 1}
    for i, e in w:
        if e == 1:
            factor: WordCombo = {((i, 1),): 1}
        else:
            factor = {
                ((i, 1),) * m: (-1) ** m * comb(n + 1, m + 1) for m in range(n + 1)
            }
        merged: WordCombo = {}
        for u, cu in combo.items():
            for v, cv in factor.items():
                word = u + v
                c = merged.get(word, 0) + cu * cv
                if c:
                    merged[word] = c
                else:
                    merged.pop(word, None)
        combo = merged
    if combo_magnus(combo, n) != magnus(w, n):
        raise AssertionError(f"positivize broke the degree-{n} expansion of {w}")
    return combo


# ---------------------------------------------------------------------------
# Coordinates on the degree-<= n monomial basis.
# ---------------------------------------------------------------------------


def monomial_basis(n: int, g: int) -> list[Monomial]:
    """Monomials of degree <= n in g letters: by degree, then lexicographic.

    >>> monomial_basis(2, 1)
    [(), (1,), (1, 1)]
    """
    out: list[Monomial] = []
    for d in range(n + 1):
        out.extend(itertools.product(range(1, g + 1), repeat=d))
    return out


def fn_basis_coords(
    combo: Mapping[Word, int] | Sequence[tuple[Word, int]] | Word,
    n: int,
    g: int,
) -> tuple[int, ...]:
    """Coordinates of a combination of words on the monomial basis."""
    if isinstance(combo, tuple):
        combo = {combo: 1}
    elif not isinstance(combo, Mapping):
        combo = dict(combo)
    t = combo_magnus(combo, n, g)
    coords = tuple(t.get(m, 0) for m in monomial_basis(n, g))
    leftovers = set(t) - set(monomial_basis(n, g))
    if leftovers:
        raise ValueError(f"expansion uses out-of-basis monomials: {leftovers}")
    return coords
