"""Exact integer linear algebra: Smith normal form and homology of the
pair complex, with coordinates for relative cycles.

The Smith reduction is elementary row/column reduction with the pivot
chosen as the minimal-absolute-value nonzero entry of the remaining
submatrix (ties broken by lowest row, then column).  That rule, together
with a final sign normalization and a fixed divisibility-repair order,
makes the output — and therefore the homology coordinate system built on
it — deterministic across runs.

Homology at degree d is computed from two reductions: one of the boundary
matrix leaving degree d (whose transform identifies the cycle lattice),
then one of the degree-(d+1) boundary written in those cycle coordinates.
The second reduction's row transform projects any cycle onto free
coordinates plus torsion residues, vanishing exactly on boundaries.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Protocol, Sequence

Matrix = list[list[int]]


def identity_matrix(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]],
            inner: int | None = None) -> Matrix:
    """Product a @ b; pass `inner` when either factor can have zero rows."""
    if inner is None:
        inner = len(b)
    cols = len(b[0]) if b else 0
    return [
        [sum(row[k] * b[k][c] for k in range(inner)) for c in range(cols)]
        for row in a
    ]


def mat_vec(a: Sequence[Sequence[int]], v: Sequence[int]) -> list[int]:
    return [sum(row[k] * v[k] for k in range(len(v))) for row in a]


def det(a: Sequence[Sequence[int]]) -> int:
    """Determinant by the Bareiss fraction-free elimination."""
    n = len(a)
    if n == 0:
        return 1
    if any(len(row) != n for row in a):
        raise ValueError("determinant needs a square matrix")
    m = [list(row) for row in a]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def _snf(a: Sequence[Sequence[int]], nrows: int, ncols: int):
    """Reduce to Smith form; returns (U, D, V, Vinv) with U a V = D and
    V Vinv = I."""
    d = [list(row) for row in a]
    if len(d) != nrows or any(len(row) != ncols for row in d):
        raise ValueError("matrix shape disagrees with stated dimensions")
    u = identity_matrix(nrows)
    v = identity_matrix(ncols)
    vinv = identity_matrix(ncols)
    t = 0
    while True:
        # deterministic pivot: minimal |entry|, then lowest (row, col)
        piv = None
        best = None
        for i in range(t, nrows):
            for j in range(t, ncols):
                x = d[i][j]
                if x and (best is None or abs(x) < best):
                    best = abs(x)
                    piv = (i, j)
        if piv is None:
            break
        i0, j0 = piv
        if i0 != t:
            d[t], d[i0] = d[i0], d[t]
            u[t], u[i0] = u[i0], u[t]
        if j0 != t:
            for row in d:
                row[t], row[j0] = row[j0], row[t]
            for row in v:
                row[t], row[j0] = row[j0], row[t]
            vinv[t], vinv[j0] = vinv[j0], vinv[t]
        p = d[t][t]
        dirty = False
        for i in range(t + 1, nrows):
            if d[i][t]:
                q = d[i][t] // p
                if q:
                    d[i] = [x - q * y for x, y in zip(d[i], d[t])]
                    u[i] = [x - q * y for x, y in zip(u[i], u[t])]
                if d[i][t]:
                    dirty = True
        for j in range(t + 1, ncols):
            if d[t][j]:
                q = d[t][j] // p
                if q:
                    for row in d:
                        row[j] -= q * row[t]
                    for row in v:
                        row[j] -= q * row[t]
                    vinv[t] = [x + q * y for x, y in zip(vinv[t], vinv[j])]
                if d[t][j]:
                    dirty = True
        if dirty:
            continue  # remainders became new, smaller candidates
        repaired = False
        for i in range(t + 1, nrows):
            row = d[i]
            if any(x % p for x in row[t + 1:]):
                d[t] = [x + y for x, y in zip(d[t], row)]
                u[t] = [x + y for x, y in zip(u[t], u[i])]
                repaired = True
                break
        if repaired:
            continue  # pull the offending row up so the pivot shrinks
        if d[t][t] < 0:
            d[t] = [-x for x in d[t]]
            u[t] = [-x for x in u[t]]
        t += 1
    return u, d, v, vinv


def smith_normal_form(a: Sequence[Sequence[int]]):
    """(U, D, V) with U a V = D, U and V unimodular, D diagonal with each
    entry dividing the next."""
    nrows = len(a)
    ncols = len(a[0]) if nrows else 0
    u, d, v, _ = _snf(a, nrows, ncols)
    return u, d, v


class ChainComplexLike(Protocol):
    def rank(self, d: int) -> int: ...

    def boundary_matrix(self, d: int) -> Sequence[Sequence[int]]: ...


@dataclass(frozen=True)
class HomologySummary:
    """Free rank, torsion, and a deterministic cycle -> coordinates map.

    Coordinates list the free part first, then one residue per torsion
    invariant; boundaries map to all zeros.
    """

    degree: int
    rank: int
    torsion: tuple[int, ...]
    cycle_space_dim: int
    _ambient: int
    _cycle_rank: int
    _vinv: tuple[tuple[int, ...], ...]
    _uprime: tuple[tuple[int, ...], ...]
    _bdry_diag: tuple[int, ...]

    def is_cycle(self, z: Sequence[int]) -> bool:
        if len(z) != self._ambient:
            raise ValueError(f"expected a vector of length {self._ambient}")
        y = mat_vec(self._vinv, z)
        return not any(y[: self._cycle_rank])

    def cycle_class(self, z: Sequence[int]) -> tuple[int, ...]:
        """Coordinates of a relative cycle in this degree's homology."""
        y = mat_vec(self._vinv, z)
        if any(y[: self._cycle_rank]):
            raise ValueError("vector is not a cycle")
        kernel_coords = y[self._cycle_rank:]
        w = mat_vec(self._uprime, kernel_coords)
        r = len(self._bdry_diag)
        free = w[r:]
        residues = [w[i] % di for i, di in enumerate(self._bdry_diag) if di > 1]
        return tuple(free) + tuple(residues)


def homology(cx: ChainComplexLike, d: int) -> HomologySummary:
    """Homology of the complex at degree d, with projection data."""
    nd = cx.rank(d)
    below = cx.rank(d - 1) if d >= 1 else 0
    above = cx.rank(d + 1)
    md = cx.boundary_matrix(d) if d >= 1 else [[] for _ in range(0)]
    md = [list(r) for r in md]
    if d >= 1 and len(md) != below:
        raise ValueError("boundary matrix at d has the wrong shape")
    if d < 1:
        md = [[0] * nd for _ in range(0)]  # no constraints
        below = 0
    md1 = [list(r) for r in cx.boundary_matrix(d + 1)]
    if len(md1) != nd:
        raise ValueError("boundary matrix at d+1 has the wrong shape")
    if below and nd and above:
        square = mat_mul(md, md1, inner=nd)
        if any(any(row) for row in square):
            raise ValueError("not a chain complex: consecutive boundaries do not vanish")

    _, dd, _, vinv = _snf(md, below, nd)
    cycle_rank = sum(1 for i in range(min(below, nd)) if dd[i][i])
    kernel_dim = nd - cycle_rank

    bdry = mat_mul(vinv, md1, inner=nd)
    for i in range(cycle_rank):
        if any(bdry[i]):
            raise ValueError("not a chain complex: a boundary fails to be a cycle")
    projected = bdry[cycle_rank:]
    uprime, dprime, _, _ = _snf(projected, kernel_dim, above)
    diag = tuple(
        dprime[i][i] for i in range(min(kernel_dim, above)) if dprime[i][i]
    )
    return HomologySummary(
        degree=d,
        rank=kernel_dim - len(diag),
        torsion=tuple(x for x in diag if x > 1),
        cycle_space_dim=kernel_dim,
        _ambient=nd,
        _cycle_rank=cycle_rank,
        _vinv=tuple(tuple(r) for r in vinv),
        _uprime=tuple(tuple(r) for r in uprime),
        _bdry_diag=diag,
    )


def cycle_coordinates(cx: ChainComplexLike, d: int, z: Sequence[int]) -> tuple[int, ...]:
    """Homology coordinates of a cycle vector (free part, then residues)."""
    return homology(cx, d).cycle_class(z)
