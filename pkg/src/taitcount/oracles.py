"""Brute-force ground truth for every quantity in the counting pipeline.

Everything here is deliberately naive: direct backtracking for Tait
colorings, spin enumeration for the Heawood count, explicit spanning-tree
enumeration (never determinants), and Gaussian sums evaluated by summing
3**n exponentials in exact cyclotomic integer arithmetic.  The fast path
must agree with these on every desk-scale instance; the check_* functions
package those comparisons.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Sequence

import numpy as np

from .alphasum import alpha_from_mask, contraction_witness, edge_weights_from_alpha
from .budgets import DEFAULT_BUDGETS, BudgetError
from .gf3 import SymF3Matrix, f3, laplacian, legendre, principal_minor_det, sym_rank_certificate
from .triangulation import ContractedMultigraph, Triangulation, contract


@dataclass(frozen=True)
class CyclotomicInt:
    """Exact value a + b * sqrt(-3); closed under ring operations.

    With the convention sqrt(-3) = -i * sqrt(3), the cube root of unity
    omega = exp(2*pi*i/3) is (-1 - sqrt(-3)) / 2.
    """

    a: int
    b: int

    def __add__(self, other: "CyclotomicInt") -> "CyclotomicInt":
        return CyclotomicInt(self.a + other.a, self.b + other.b)

    def __sub__(self, other: "CyclotomicInt") -> "CyclotomicInt":
        return CyclotomicInt(self.a - other.a, self.b - other.b)

    def __neg__(self) -> "CyclotomicInt":
        return CyclotomicInt(-self.a, -self.b)

    def __mul__(self, other: "CyclotomicInt") -> "CyclotomicInt":
        return CyclotomicInt(
            self.a * other.a - 3 * self.b * other.b,
            self.a * other.b + self.b * other.a,
        )

    @property
    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0


ZERO = CyclotomicInt(0, 0)


def tait_brute(g: Triangulation, *, max_vertices: int = DEFAULT_BUDGETS.max_brute_vertices) -> int:
    """Count edge 3-colorings with all three colors on every face.

    Backtracking, always branching on the uncolored edge with the most
    already-colored face-mates.  The count is a multiple of 3 (rotating
    the three colors permutes solutions); this is asserted.
    """
    if g.n > max_vertices:
        raise BudgetError(f"{g.n} vertices exceeds the backtracking cap {max_vertices}")
    ne = len(g.edges)
    mates: list[list[int]] = [[] for _ in range(ne)]
    for face in g.faces:
        for e in face.edges:
            for other in face.edges:
                if other != e and other not in mates[e]:
                    mates[e].append(other)
    color = [-1] * ne

    def count(uncolored: int) -> int:
        if uncolored == 0:
            return 1
        best, best_score = -1, -1
        for e in range(ne):
            if color[e] < 0:
                score = sum(1 for s in mates[e] if color[s] >= 0)
                if score > best_score:
                    best, best_score = e, score
        taken = {color[s] for s in mates[best] if color[s] >= 0}
        total = 0
        for col in (0, 1, 2):
            if col not in taken:
                color[best] = col
                total += count(uncolored - 1)
        color[best] = -1
        return total

    result = count(ne)
    if result % 3:
        raise AssertionError(f"Tait count {result} is not a multiple of 3")
    return result


def heawood_count(g: Triangulation, *, max_faces: int = DEFAULT_BUDGETS.max_faces) -> int:
    """Number of face spin vectors in {-1,+1} with zero mod-3 sum at every vertex."""
    nf = len(g.faces)
    if nf > max_faces:
        raise BudgetError(f"2**{nf} spin vectors exceeds the cap 2**{max_faces}")
    inc = np.zeros((g.n, nf), dtype=np.int64)
    for v, fids in enumerate(g.vertex_faces):
        for f in fids:
            inc[v, f] = 1
    shifts = np.arange(nf, dtype=np.int64)
    total = 0
    chunk = 1 << 16
    for start in range(0, 1 << nf, chunk):
        masks = np.arange(start, min(start + chunk, 1 << nf), dtype=np.int64)
        spins = 1 - 2 * ((masks[None, :] >> shifts[:, None]) & 1)  # bit set -> spin -1
        sums = inc @ spins
        total += int(np.count_nonzero(np.all(sums % 3 == 0, axis=0)))
    return total


def _connected(n: int, edges: Sequence[tuple[int, int, int]]) -> bool:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    comps = n
    for u, v, _ in edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            comps -= 1
    return comps == 1


def _tree_sum_enumerate(n: int, wedges: Sequence[tuple[int, int, int]]) -> int:
    """Sum tree products by running over (n-1)-subsets of nonzero-weight edges."""
    total = 0
    for combo in itertools.combinations(wedges, n - 1):
        parent = list(range(n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        merges = 0
        for u, v, _ in combo:
            ru, rv = find(u), find(v)
            if ru == rv:
                break
            parent[ru] = rv
            merges += 1
        if merges == n - 1:
            prod = 1
            for _, _, w in combo:
                prod = prod * w % 3
            total += prod
    return total % 3


def _tree_sum_delete_contract(n: int, wedges: list[tuple[int, int, int]]) -> int:
    """Deletion-contraction recursion on the weighted edge list."""
    if n == 1:
        return 1
    if len(wedges) < n - 1:
        return 0
    u, v, w = wedges[0]
    rest = wedges[1:]
    contracted = []
    for x, y, wt in rest:
        x2 = u if x == v else x
        y2 = u if y == v else y
        if x2 == y2:
            continue  # loop created by the contraction
        contracted.append((x2 if x2 < v else x2 - 1, y2 if y2 < v else y2 - 1, wt))
    return (
        w * _tree_sum_delete_contract(n - 1, contracted)
        + _tree_sum_delete_contract(n, rest)
    ) % 3


def spanning_tree_sum(
    h: ContractedMultigraph | Triangulation,
    weights: Mapping[int, int] | Sequence[int],
    *,
    max_enumerate_edges: int = 20,
) -> int:
    """Sum over spanning trees of the product of edge weights, mod 3.

    Computed by explicit tree enumeration (edge subsets for small inputs,
    deletion-contraction above ``max_enumerate_edges``), never through
    determinants.  A single vertex has the empty tree, so the sum is 1.
    """
    edges = [(u, v, f3(weights[eid])) for u, v, eid in h.edge_triples()]
    if h.n > 1 and not _connected(h.n, edges):
        raise ValueError("spanning-tree sum of a disconnected graph")
    if h.n == 1:
        return 1
    nonzero = [e for e in edges if e[2]]
    if len(edges) <= max_enumerate_edges:
        return f3(_tree_sum_enumerate(h.n, nonzero))
    return f3(_tree_sum_delete_contract(h.n, nonzero))


_VECTOR_CACHE: dict[int, np.ndarray] = {}


def _residue_vectors(n: int) -> np.ndarray:
    vecs = _VECTOR_CACHE.get(n)
    if vecs is None:
        if n == 0:
            vecs = np.zeros((1, 0), dtype=np.int64)
        else:
            vecs = np.array(list(itertools.product((0, 1, 2), repeat=n)), dtype=np.int64)
        _VECTOR_CACHE[n] = vecs
    return vecs


def gau_exact(c: SymF3Matrix, *, max_order: int = DEFAULT_BUDGETS.max_gau_order) -> CyclotomicInt:
    """Gaussian sum of the quadratic form of ``c`` over all 3**n vectors.

    Counts how often the form takes each value t and resolves the three
    unit exponentials exactly: the result is N0 - (N1 + N2)/2 plus
    (N2 - N1)/2 times sqrt(-3).  Both halves are integers because vectors
    come in +/- pairs; this is asserted.
    """
    n = c.n
    if n > max_order:
        raise BudgetError(f"3**{n} vectors exceeds the cap 3**{max_order}")
    y = _residue_vectors(n)
    cm = np.array([[v % 3 for v in row] for row in c.entries], dtype=np.int64)
    vals = ((y @ cm) * y).sum(axis=1) % 3 if n else np.zeros(1, dtype=np.int64)
    counts = np.bincount(vals, minlength=3)
    n0, n1, n2 = (int(x) for x in counts)
    if (n1 + n2) % 2 or (n2 - n1) % 2:
        raise AssertionError(f"value counts ({n0}, {n1}, {n2}) break integrality")
    return CyclotomicInt(n0 - (n1 + n2) // 2, (n2 - n1) // 2)


def gau_closed_form(order: int, rank: int, det: int) -> CyclotomicInt:
    """Exact expansion of 3**order * legendre(det) * (i/sqrt(3))**rank.

    Even rank gives the real value legendre(det) * (-1)**(r/2) * 3**(order - r/2);
    odd rank is purely a multiple of sqrt(-3) = -i*sqrt(3).
    """
    sign = legendre(det)
    if rank % 2 == 0:
        return CyclotomicInt(sign * (-1) ** (rank // 2) * 3 ** (order - rank // 2), 0)
    b = -sign * (-1) ** ((rank - 1) // 2) * 3 ** (order - (rank + 1) // 2)
    return CyclotomicInt(0, b)


def check_gau_closed_form(c: SymF3Matrix, **kw) -> bool:
    """Does the enumerated Gaussian sum match the rank-certificate closed form?"""
    cert = sym_rank_certificate(c)
    return gau_exact(c, **kw) == gau_closed_form(c.n, cert.rank, cert.det)


def check_minor_tree_sum(
    g: Triangulation,
    weights: Mapping[int, int] | Sequence[int],
    w: Iterable[int],
) -> bool:
    """Does deleting ``w`` from the Laplacian give the tree sum of G/w?

    ``w`` must be nonempty: the undeleted determinant is identically zero
    (row sums vanish), while contracting a single vertex is already the
    identity, so the empty set carries no content here.
    """
    wset = sorted(set(w))
    if not wset:
        raise ValueError("the contraction set must be nonempty")
    rest = sorted(set(range(g.n)) - set(wset))
    minor = principal_minor_det(laplacian(g, weights), rest)
    return minor == spanning_tree_sum(contract(g, wset), weights)


def check_gau_identity(
    g: Triangulation,
    *,
    max_faces: int = DEFAULT_BUDGETS.max_faces,
    max_order: int = DEFAULT_BUDGETS.max_gau_order,
) -> bool:
    """Does summing Gaussian sums over all sign vectors reproduce the spin count?

    Accumulates sum_alpha Gau(L(x(alpha))) exactly, asserts the imaginary
    part cancels and the real part is divisible by 3**n, and compares the
    quotient with the Heawood spin count.
    """
    nf = len(g.faces)
    if nf > max_faces:
        raise BudgetError(f"2**{nf} sign vectors exceeds the cap 2**{max_faces}")
    total = ZERO
    for mask in range(1 << nf):
        x = edge_weights_from_alpha(g, alpha_from_mask(nf, mask))
        total = total + gau_exact(laplacian(g, x), max_order=max_order)
    if total.b != 0:
        raise AssertionError(f"imaginary part {total.b} did not cancel")
    if total.a % 3**g.n:
        raise AssertionError(f"sum {total.a} not divisible by 3**{g.n}")
    return total.a // 3**g.n == heawood_count(g, max_faces=max_faces)


def iter_symmetric_matrices(order: int) -> Iterator[SymF3Matrix]:
    """All 3**(order*(order+1)/2) symmetric matrices over F3, in a fixed order."""
    cells = [(i, j) for i in range(order) for j in range(i, order)]
    for combo in itertools.product((-1, 0, 1), repeat=len(cells)):
        rows = [[0] * order for _ in range(order)]
        for (i, j), v in zip(cells, combo):
            rows[i][j] = v
            rows[j][i] = v
        yield SymF3Matrix.from_rows(rows)


def random_symmetric(order: int, rng: random.Random) -> SymF3Matrix:
    rows = [[0] * order for _ in range(order)]
    for i in range(order):
        for j in range(i, order):
            v = rng.randrange(3) - 1
            rows[i][j] = v
            rows[j][i] = v
    return SymF3Matrix.from_rows(rows)


def random_invertible(order: int, rng: random.Random) -> tuple[tuple[int, ...], ...]:
    """Uniform-ish nonsingular matrix over F3, by rejection sampling."""
    while True:
        rows = [[rng.randrange(3) for _ in range(order)] for _ in range(order)]
        work = [row[:] for row in rows]
        singular = False
        for col in range(order):
            piv = next((r for r in range(col, order) if work[r][col] % 3), -1)
            if piv < 0:
                singular = True
                break
            work[col], work[piv] = work[piv], work[col]
            d = work[col][col] % 3
            for r in range(col + 1, order):
                factor = work[r][col] * d % 3
                if factor:
                    for cc in range(col, order):
                        work[r][cc] = (work[r][cc] - factor * work[col][cc]) % 3
        if not singular:
            return tuple(tuple(f3(v) for v in row) for row in rows)


def congruent_transform(c: SymF3Matrix, p: Sequence[Sequence[int]]) -> SymF3Matrix:
    """P^T C P over F3; congruence preserves both the Gaussian sum and the rank."""
    n = c.n
    cp = [[sum(c.entries[i][k] * p[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
    rows = [[sum(p[k][i] * cp[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
    return SymF3Matrix.from_rows(rows)


def check_congruence_invariance(c: SymF3Matrix, p: Sequence[Sequence[int]], **kw) -> bool:
    """Gau, rank, and the closed-form value must all survive P^T C P."""
    a = congruent_transform(c, p)
    cert_c = sym_rank_certificate(c)
    cert_a = sym_rank_certificate(a)
    return (
        cert_a.rank == cert_c.rank
        and gau_exact(a, **kw) == gau_exact(c, **kw)
        and gau_closed_form(a.n, cert_a.rank, cert_a.det)
        == gau_closed_form(c.n, cert_c.rank, cert_c.det)
    )


def check_minor_choice_independence(c: SymF3Matrix) -> bool:
    """All maximal nonsingular principal minors carry one Legendre value.

    Also confirms maximality: every principal minor one order above the
    rank vanishes.
    """
    cert = sym_rank_certificate(c)
    r = cert.rank
    seen = set()
    for s in itertools.combinations(range(c.n), r):
        d = principal_minor_det(c, s)
        if d:
            seen.add(legendre(d))
    if seen != {legendre(cert.det)}:
        return False
    if r < c.n:
        for s in itertools.combinations(range(c.n), r + 1):
            if principal_minor_det(c, s):
                return False
    return True


def check_odd_rank_cancellation(
    g: Triangulation,
    *,
    max_order: int = DEFAULT_BUDGETS.max_gau_order,
) -> bool:
    """Odd-rank Gaussian sums cancel: in total and already per +/- pair."""
    nf = len(g.faces)
    full = (1 << nf) - 1
    total = ZERO
    gau: dict[int, CyclotomicInt] = {}
    for mask in range(1 << nf):
        x = edge_weights_from_alpha(g, alpha_from_mask(nf, mask))
        mat = laplacian(g, x)
        if sym_rank_certificate(mat).rank % 2:
            gau[mask] = gau_exact(mat, max_order=max_order)
            total = total + gau[mask]
    if not total.is_zero:
        return False
    return all((gau[mask] + gau[mask ^ full]).is_zero for mask in gau)


def check_wstar_minimality(
    g: Triangulation,
    weights: Mapping[int, int] | Sequence[int],
) -> bool:
    """No contraction to a larger graph than the witness has nonzero tree sum.

    The empty set and singletons both leave the graph unchanged, so
    candidate sets are compared by contracted vertex count rather than raw
    cardinality.
    """
    witness = contraction_witness(g, weights)
    if spanning_tree_sum(contract(g, witness.w_star), weights) != witness.tree_sum:
        return False
    if witness.tree_sum == 0:
        return False
    for k in range(g.n + 1):
        for w in itertools.combinations(range(g.n), k):
            count = g.n - len(w) + 1 if w else g.n
            if count > witness.contracted_vertex_count:
                if spanning_tree_sum(contract(g, w), weights) != 0:
                    return False
    return True
