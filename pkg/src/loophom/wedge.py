"""Simplicial model of a wedge of circles, its n-fold product, and the
relative chain complex that the loop classes land in.

Each circle is the one-vertex simplicial circle (an edge with both ends at
the basepoint).  Its d-simplices are the totally degenerate basepoint
simplex ``None`` and, for each generator e and jump position j in [1, d],
the degeneracy of the edge whose vertex sequence switches 0 -> 1 between
vertices j-1 and j; we write that cell ``(e, j)``.

A simplex of the n-fold product is an n-tuple of such cells at a common
dimension.  It is nondegenerate exactly when the jumps of its components
cover every slot, i.e. {jumps} contains [1, d].  The subspace quotiented
out (written Y here) is the union of: first component at the basepoint,
last component at the basepoint, and two consecutive components equal.
Chain groups are spanned by the nondegenerate simplices outside Y, and the
boundary drops faces that leave that spanning set.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .words import LETTER_POOL

# a circle cell: None is the basepoint simplex, (generator, jump) an
# edge degeneracy
Cell = Optional[tuple[int, int]]


def cell_face(cell: Cell, d: int, i: int) -> Cell:
    """Face i of a dimension-d cell (result lives at dimension d-1).

    Deleting vertex i shifts the jump down when i sits before it; the
    result collapses to the basepoint when no jump remains inside [1, d-1].
    """
    if not 0 <= i <= d:
        raise ValueError(f"face index {i} out of range for dimension {d}")
    if cell is None:
        return None
    e, j = cell
    j2 = j - 1 if i < j else j
    return (e, j2) if 1 <= j2 <= d - 1 else None


def cell_degenerate_at(cell: Cell, i: int) -> bool:
    """Whether the cell is a degeneracy duplicating vertex i (0-based slot)."""
    if cell is None:
        return True
    return i != cell[1] - 1


@dataclass(frozen=True)
class ProductSimplex:
    """A dimension-``dim`` simplex of the n-fold product of circles."""

    dim: int
    components: tuple[Cell, ...]

    def __post_init__(self):
        for c in self.components:
            if c is not None:
                e, j = c
                if e < 1:
                    raise ValueError(f"bad generator index {e}")
                if not 1 <= j <= self.dim:
                    raise ValueError(f"jump {j} out of range for dimension {self.dim}")

    @property
    def n(self) -> int:
        return len(self.components)

    def face(self, i: int) -> "ProductSimplex":
        return ProductSimplex(
            self.dim - 1,
            tuple(cell_face(c, self.dim, i) for c in self.components),
        )

    def is_nondegenerate(self) -> bool:
        jumps = {c[1] for c in self.components if c is not None}
        return jumps.issuperset(range(1, self.dim + 1))

    def degenerate_at(self, i: int) -> bool:
        return all(cell_degenerate_at(c, i) for c in self.components)

    def sort_key(self):
        d = self.dim
        return tuple((0, 0) if c is None else (c[0], d - c[1] + 1) for c in self.components)


def in_Y(s: ProductSimplex) -> bool:
    """Membership in the collapsed subspace: first or last component at the
    basepoint, or two consecutive components equal."""
    cs = s.components
    if not cs:
        return False
    if cs[0] is None or cs[-1] is None:
        return True
    return any(cs[i] == cs[i + 1] for i in range(len(cs) - 1))


def simplex_str(s: ProductSimplex, alphabet: str = LETTER_POOL) -> str:
    parts = []
    for c in s.components:
        parts.append("*" if c is None else f"({alphabet[c[0] - 1]},{c[1]})")
    return "(" + ",".join(parts) + ")"


def _cells(g: int, d: int) -> list[Cell]:
    out: list[Cell] = [None]
    out.extend((e, j) for e in range(1, g + 1) for j in range(1, d + 1))
    return out


def enumerate_nondegenerate(n: int, g: int, d: int) -> list[ProductSimplex]:
    """All nondegenerate d-simplices of the n-fold product (Y included),
    in canonical order."""
    if d > n:
        return []  # n components supply at most n jumps, too few to cover

    def walk(pos: int, remaining_slots: frozenset[int], acc: list[Cell]):
        if n - pos < len(remaining_slots):
            return  # not enough components left to cover the missing jumps
        if pos == n:
            yield ProductSimplex(d, tuple(acc))
            return
        for c in _cells(g, d):
            acc.append(c)
            yield from walk(
                pos + 1,
                remaining_slots - {c[1]} if c is not None else remaining_slots,
                acc,
            )
            acc.pop()

    found = list(walk(0, frozenset(range(1, d + 1)), []))
    return sorted(found, key=ProductSimplex.sort_key)


def enumerate_basis(n: int, g: int, d: int) -> list[ProductSimplex]:
    """Canonically ordered basis of the relative chain group: nondegenerate
    d-simplices outside Y."""
    return [s for s in enumerate_nondegenerate(n, g, d) if not in_Y(s)]


@dataclass(frozen=True)
class PairComplex:
    """Relative chain complex data: per-dimension bases and boundary
    matrices (rows = dimension d-1 basis, columns = dimension d basis)."""

    n: int
    g: int
    d_max: int
    bases: tuple[tuple[ProductSimplex, ...], ...]
    boundaries: tuple[tuple[tuple[int, ...], ...], ...]  # [d] = matrix of boundary at d

    def basis(self, d: int) -> tuple[ProductSimplex, ...]:
        return self.bases[d] if 0 <= d <= self.d_max else ()

    def rank(self, d: int) -> int:
        return len(self.basis(d))

    def index(self, d: int, s: ProductSimplex) -> int | None:
        try:
            return self.bases[d].index(s)
        except (ValueError, IndexError):
            return None

    def boundary_matrix(self, d: int) -> tuple[tuple[int, ...], ...]:
        """The matrix of the boundary leaving dimension d; rows indexed by
        the dimension d-1 basis.  Zero-shaped when out of range."""
        if 1 <= d <= self.d_max:
            return self.boundaries[d]
        rows = self.rank(d - 1)
        return tuple(() for _ in range(rows))


def boundary_of_simplex(
    s: ProductSimplex, basis_index: dict[ProductSimplex, int]
) -> dict[int, int]:
    """Indices and coefficients of the alternating face sum, keeping only
    faces that stay in the spanning set (nondegenerate, outside Y)."""
    out: dict[int, int] = {}
    for i in range(s.dim + 1):
        t = s.face(i)
        idx = basis_index.get(t)
        if idx is None:
            continue
        c = out.get(idx, 0) + (-1) ** i
        if c:
            out[idx] = c
        else:
            del out[idx]
    return out


def build_pair_complex(n: int, g: int, d_max: int | None = None) -> PairComplex:
    """Bases and boundary matrices up to dimension d_max (default n+1)."""
    if n < 1 or g < 1:
        raise ValueError("need n >= 1 and g >= 1")
    if d_max is None:
        d_max = n + 1
    bases = [tuple(enumerate_basis(n, g, d)) for d in range(d_max + 1)]
    boundaries: list[tuple[tuple[int, ...], ...]] = [()]
    for d in range(1, d_max + 1):
        rows = len(bases[d - 1])
        index = {s: i for i, s in enumerate(bases[d - 1])}
        cols = []
        for s in bases[d]:
            col = [0] * rows
            for r, c in boundary_of_simplex(s, index).items():
                col[r] = c
            cols.append(col)
        # store row-major: boundary[r][c]
        matrix = tuple(
            tuple(cols[c][r] for c in range(len(cols))) for r in range(rows)
        )
        boundaries.append(matrix)
    return PairComplex(n, g, d_max, tuple(bases), tuple(boundaries))


def push_cell(cell: Cell, gen_map: dict[int, int | None]) -> Cell:
    """Apply a pointed map of wedges (generator relabel/collapse) to a cell."""
    if cell is None:
        return None
    e, j = cell
    target = gen_map.get(e)
    return None if target is None else (target, j)


def push_simplex(s: ProductSimplex, gen_map: dict[int, int | None]) -> ProductSimplex:
    return ProductSimplex(
        s.dim, tuple(push_cell(c, gen_map) for c in s.components)
    )


def complex_to_json(cx: PairComplex, alphabet: str = LETTER_POOL) -> dict:
    """JSON-ready description: bases as component lists, boundaries as
    sparse (row, col, value) triplets."""
    dims = []
    for d in range(cx.d_max + 1):
        basis_json = [
            [None if c is None else [alphabet[c[0] - 1], c[1]] for c in s.components]
            for s in cx.basis(d)
        ]
        triplets = []
        if d >= 1:
            matrix = cx.boundary_matrix(d)
            for r, row in enumerate(matrix):
                for c, value in enumerate(row):
                    if value:
                        triplets.append([r, c, value])
        dims.append({"d": d, "basis": basis_json, "boundary": triplets})
    return {"n": cx.n, "g": cx.g, "dims": dims}
