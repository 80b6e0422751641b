"""Exact symmetric linear algebra over the field with three elements.

Field elements are plain ints restricted to {-1, 0, 1}, with 2 identified
with -1; in this representation the Legendre symbol of x is x itself.
The central primitive is a symmetric-rank certificate: a principal index
set realising the rank of a symmetric matrix together with the
determinant of that principal submatrix.  It is computed by congruence
elimination using 1x1 diagonal pivots and, when every remaining diagonal
entry vanishes, 2x2 off-diagonal blocks (their determinant -b**2 = -1 is
a unit because the characteristic is not 2).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence


def f3(v: int) -> int:
    """Normalize an integer into the signed residue set {-1, 0, 1}."""
    r = v % 3
    return r - 3 if r == 2 else r


def legendre(x: int) -> int:
    """Legendre symbol mod 3; on {-1, 0, 1} it is the identity map."""
    return f3(x)


@dataclass(frozen=True)
class SymF3Matrix:
    """Symmetric matrix with entries in {-1, 0, 1}."""

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        n = len(self.entries)
        for i, row in enumerate(self.entries):
            if len(row) != n:
                raise ValueError(f"row {i} has length {len(row)}, expected {n}")
            for j, v in enumerate(row):
                if v not in (-1, 0, 1):
                    raise ValueError(f"entry ({i},{j}) = {v} not in {{-1, 0, 1}}")
                if self.entries[j][i] != v:
                    raise ValueError(f"not symmetric at ({i},{j})")

    @property
    def n(self) -> int:
        return len(self.entries)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "SymF3Matrix":
        """Build from arbitrary integer rows, reducing entries mod 3."""
        return cls(tuple(tuple(f3(v) for v in row) for row in rows))

    @classmethod
    def zero(cls, n: int) -> "SymF3Matrix":
        return cls(tuple((0,) * n for _ in range(n)))

    @classmethod
    def identity(cls, n: int) -> "SymF3Matrix":
        return cls(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    def principal_submatrix(self, indices: Iterable[int]) -> "SymF3Matrix":
        idx = sorted(indices)
        return SymF3Matrix(tuple(tuple(self.entries[i][j] for j in idx) for i in idx))


@dataclass(frozen=True)
class OrientedIncidence:
    """Oriented vertex-edge incidence B plus diagonal edge weights.

    Column e holds +1 at ``columns[e][0]`` and -1 at ``columns[e][1]``, so
    every column sums to zero.  ``matrix_product`` evaluates B * diag(w) * B^T
    literally; it is the slow-but-obvious route to the weighted Laplacian.
    """

    num_vertices: int
    columns: tuple[tuple[int, int], ...]
    diag_weights: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.columns) != len(self.diag_weights):
            raise ValueError("one weight per column required")
        for e, (u, v) in enumerate(self.columns):
            if u == v:
                raise ValueError(f"column {e} is a loop at vertex {u}")
            for x in (u, v):
                if not 0 <= x < self.num_vertices:
                    raise ValueError(f"column {e}: vertex {x} out of range")

    def matrix_product(self) -> SymF3Matrix:
        n = self.num_vertices
        b = [[0] * len(self.columns) for _ in range(n)]
        for e, (u, v) in enumerate(self.columns):
            b[u][e] = 1
            b[v][e] = -1
        rows = [
            [
                sum(b[i][e] * self.diag_weights[e] * b[j][e] for e in range(len(self.columns)))
                for j in range(n)
            ]
            for i in range(n)
        ]
        return SymF3Matrix.from_rows(rows)


def oriented_incidence(g, weights: Mapping[int, int] | Sequence[int]) -> OrientedIncidence:
    """Oriented incidence of a (multi)graph with per-edge weights keyed by edge id."""
    cols, diag = [], []
    for u, v, eid in g.edge_triples():
        cols.append((u, v))
        diag.append(f3(weights[eid]))
    return OrientedIncidence(g.n, tuple(cols), tuple(diag))


def laplacian(g, weights: Mapping[int, int] | Sequence[int]) -> SymF3Matrix:
    """Weighted Laplace-Kirchhoff matrix of a graph or contracted multigraph.

    Off-diagonal (u, v): minus the sum of weights of u-v edges; diagonal v:
    sum of weights at v.  Row sums vanish identically, so the rank is at
    most n - 1.
    """
    n = g.n
    rows = [[0] * n for _ in range(n)]
    for u, v, eid in g.edge_triples():
        w = weights[eid]
        rows[u][v] -= w
        rows[v][u] -= w
        rows[u][u] += w
        rows[v][v] += w
    return SymF3Matrix.from_rows(rows)


@dataclass(frozen=True)
class PivotCertificate:
    """Principal index set realising the rank of a symmetric matrix.

    ``det`` is the determinant (in {-1, 1}; empty product 1 for rank 0) of
    the principal submatrix on ``pivot_set``, which is nonsingular while no
    larger principal submatrix is.
    """

    rank: int
    pivot_set: tuple[int, ...]
    det: int


def sym_rank_certificate(c: SymF3Matrix) -> PivotCertificate:
    """Rank, greedy-first principal pivot set, and pivot-minor determinant.

    Elimination is by congruence, so each accepted pivot block contributes
    its determinant to the minor on the accumulated pivot set (Schur
    complement factorisation); 1x1 pivots are preferred, 2x2 blocks cover
    the all-zero-diagonal case.
    """
    n = c.n
    a = [[v % 3 for v in row] for row in c.entries]
    active = list(range(n))
    pivots: list[int] = []
    det = 1
    while active:
        piv = next((i for i in active if a[i][i]), -1)
        if piv >= 0:
            d = a[piv][piv]
            det = det * d % 3
            pivots.append(piv)
            active.remove(piv)
            arow = a[piv]
            updates = [(j, a[j][piv] * d % 3) for j in active if a[j][piv]]
            for j, factor in updates:
                aj = a[j]
                for k in active:
                    aj[k] = (aj[k] - factor * arow[k]) % 3
            continue
        pair = next(
            ((i, j) for pos, i in enumerate(active) for j in active[pos + 1 :] if a[i][j]),
            None,
        )
        if pair is None:
            break  # remaining block is zero
        i, j = pair
        b = a[i][j]
        det = det * 2 % 3  # block determinant -b**2 = -1
        pivots += [i, j]
        active.remove(i)
        active.remove(j)
        ai, aj = a[i], a[j]
        updates2 = [
            (k, a[k][j] * b % 3, a[k][i] * b % 3) for k in active if a[k][i] or a[k][j]
        ]
        for k, f0, f1 in updates2:
            ak = a[k]
            for l in active:
                ak[l] = (ak[l] - f0 * ai[l] - f1 * aj[l]) % 3
    return PivotCertificate(rank=len(pivots), pivot_set=tuple(sorted(pivots)), det=f3(det))


def principal_minor_det(c: SymF3Matrix, indices: Iterable[int]) -> int:
    """Determinant over F3 of the principal submatrix on ``indices``.

    Plain row-reduction route, independent of the congruence elimination
    above; the empty set has determinant 1.
    """
    idx = sorted(set(indices))
    if idx and not (0 <= idx[0] and idx[-1] < c.n):
        raise ValueError(f"indices {idx} out of range 0..{c.n - 1}")
    k = len(idx)
    a = [[c.entries[i][j] % 3 for j in idx] for i in idx]
    det = 1
    for col in range(k):
        piv = next((r for r in range(col, k) if a[r][col]), -1)
        if piv < 0:
            return 0
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = det * 2 % 3  # row swap flips the sign
        d = a[col][col]
        det = det * d % 3
        for r in range(col + 1, k):
            factor = a[r][col] * d % 3  # d is its own inverse mod 3
            if factor:
                ar, ac = a[r], a[col]
                for cc in range(col, k):
                    ar[cc] = (ar[cc] - factor * ac[cc]) % 3
    return f3(det)
