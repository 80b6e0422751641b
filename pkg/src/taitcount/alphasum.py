"""Exact Tait-coloring counts by enumeration of face-sign vectors.

Every face gets a sign in {-1, +1}; an edge between faces F' and F'' picks
up the weight x_e = sign(F') + sign(F'') in {-1, 0, 1}.  The weighted
Laplacian L(G; x) over F3 then yields one exact term per sign vector: zero
when its rank r is odd, otherwise det * (-1)**(r/2) * 3**(-r/2) with det
the determinant of a maximal nonsingular principal minor (equivalently,
the spanning-tree sum of the graph contracted at the complement of the
pivot set).  Summing over all 2**|F| sign vectors gives one third of the
number of Tait colorings.

Terms are accumulated as integers at the fixed scale 3**floor((n-1)/2),
so the whole computation is exact and bitwise independent of how the
enumeration range is split across workers.
"""

from __future__ import annotations

import multiprocessing
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .budgets import DEFAULT_BUDGETS, BudgetError
from .gf3 import f3, laplacian, legendre, sym_rank_certificate
from .triangulation import Triangulation


def alpha_from_mask(num_faces: int, mask: int) -> tuple[int, ...]:
    """Face-sign vector from a bitmask; bit f set means face f has sign -1."""
    if not 0 <= mask < 1 << num_faces:
        raise ValueError(f"mask {mask} out of range for {num_faces} faces")
    return tuple(-1 if (mask >> f) & 1 else 1 for f in range(num_faces))


def edge_weights_from_alpha(g: Triangulation, alpha: Sequence[int]) -> tuple[int, ...]:
    """Per-edge weights x_e = alpha(F') + alpha(F'') reduced into {-1, 0, 1}.

    Equal signs +1/+1 give -1 (2 = -1 mod 3), -1/-1 give +1, mixed give 0.
    """
    if len(alpha) != len(g.faces):
        raise ValueError(f"need {len(g.faces)} face signs, got {len(alpha)}")
    bad = [s for s in alpha if s not in (-1, 1)]
    if bad:
        raise ValueError(f"face signs must be +1 or -1, got {bad[0]}")
    return tuple(f3(alpha[f1] + alpha[f2]) for f1, f2 in g.edge_faces)


@dataclass(frozen=True)
class ExactWeight:
    """Exact term value sign * (-1)**halfrank * 3**(-halfrank)."""

    sign: int
    halfrank: int

    @classmethod
    def zero(cls) -> "ExactWeight":
        return cls(0, 0)

    @property
    def is_zero(self) -> bool:
        return self.sign == 0

    @property
    def value(self) -> Fraction:
        return Fraction(self.sign * (-1) ** self.halfrank, 3**self.halfrank)


@dataclass(frozen=True)
class ContractionWitness:
    """Vertex set whose contraction first makes the tree sum nonzero.

    ``w_star`` is the complement of the rank certificate's pivot set, so
    the contracted graph has rank + 1 vertices and its spanning-tree sum
    equals ``tree_sum`` (the pivot-minor determinant).
    """

    w_star: tuple[int, ...]
    contracted_vertex_count: int
    tree_sum: int


def term_weight(g, weights: Mapping[int, int] | Sequence[int]) -> ExactWeight:
    """Exact weight of one edge-weight vector; zero whenever the rank is odd."""
    cert = sym_rank_certificate(laplacian(g, weights))
    if cert.rank % 2:
        return ExactWeight.zero()
    return ExactWeight(sign=legendre(cert.det), halfrank=cert.rank // 2)


def contraction_witness(g, weights: Mapping[int, int] | Sequence[int]) -> ContractionWitness:
    """Minimal contraction witness derived from the rank certificate."""
    cert = sym_rank_certificate(laplacian(g, weights))
    if cert.rank >= g.n:
        raise AssertionError("Laplacian rank reached n despite zero row sums")
    w_star = tuple(sorted(set(range(g.n)) - set(cert.pivot_set)))
    return ContractionWitness(
        w_star=w_star,
        contracted_vertex_count=cert.rank + 1,
        tree_sum=cert.det,
    )


@dataclass(frozen=True)
class TaitAlphaResult:
    """Outcome of the full sign-vector enumeration."""

    tait0: int
    rank_histogram: tuple[tuple[int, int], ...]  # (rank, number of sign vectors)
    terms: int

    def histogram_dict(self) -> dict[int, int]:
        return dict(self.rank_histogram)


def _graph_arrays(g: Triangulation) -> tuple[int, tuple, tuple, tuple, tuple]:
    eu, ev = zip(*g.edges)
    ef1, ef2 = zip(*g.edge_faces)
    return g.n, eu, ev, ef1, ef2


def _scan_masks(arrays, start: int, stop: int, step: int) -> tuple[int, list[int]]:
    """Accumulate scaled term weights and a rank histogram over a mask range.

    Works in residues {0, 1, 2} on a flat matrix; the elimination mirrors
    sym_rank_certificate but with physical row/column swaps and without
    pivot-set tracking (the pivot-minor determinant does not depend on the
    pivot choice).
    """
    n, eu, ev, ef1, ef2 = arrays
    ne = len(eu)
    nn = n * n
    m = (n - 1) // 2
    pow3 = [3**k for k in range(m + 1)]
    hist = [0] * (n + 1)
    total = 0
    erange = range(ne)
    for mask in range(start, stop, step):
        a = [0] * nn
        for e in erange:
            b1 = (mask >> ef1[e]) & 1
            b2 = (mask >> ef2[e]) & 1
            if b1 == b2:
                w = 1 if b1 else 2  # residues of +1 and -1 edge weights
                u = eu[e]
                v = ev[e]
                a[u * n + v] -= w
                a[v * n + u] -= w
                a[u * n + u] += w
                a[v * n + v] += w
        for i in range(nn):
            a[i] %= 3
        r = 0
        det = 1
        pos = 0
        while pos < n:
            piv = -1
            for i in range(pos, n):
                if a[i * n + i]:
                    piv = i
                    break
            if piv >= 0:
                if piv != pos:
                    pr = pos * n
                    qr = piv * n
                    a[pr : pr + n], a[qr : qr + n] = a[qr : qr + n], a[pr : pr + n]
                    for i in range(n):
                        row = i * n
                        a[row + pos], a[row + piv] = a[row + piv], a[row + pos]
                prow = pos * n
                d = a[prow + pos]
                det = det * d % 3
                for j in range(pos + 1, n):
                    c = a[prow + j]  # symmetric: equals a[j][pos]
                    if c:
                        factor = c * d % 3
                        jrow = j * n
                        for k in range(pos + 1, n):
                            a[jrow + k] = (a[jrow + k] - factor * a[prow + k]) % 3
                r += 1
                pos += 1
                continue
            fi = fj = -1
            for i in range(pos, n):
                row = i * n
                for j in range(i + 1, n):
                    if a[row + j]:
                        fi, fj = i, j
                        break
                if fi >= 0:
                    break
            if fi < 0:
                break  # remaining block is zero
            for src, dst in ((fi, pos), (fj, pos + 1)):
                if src != dst:
                    sr = src * n
                    dr = dst * n
                    a[sr : sr + n], a[dr : dr + n] = a[dr : dr + n], a[sr : sr + n]
                    for i in range(n):
                        row = i * n
                        a[row + src], a[row + dst] = a[row + dst], a[row + src]
            p0 = pos * n
            p1 = p0 + n
            b = a[p0 + pos + 1]
            det = det * 2 % 3  # 2x2 block determinant -b**2 = -1
            for j in range(pos + 2, n):
                jrow = j * n
                c0 = a[jrow + pos]
                c1 = a[jrow + pos + 1]
                if c0 or c1:
                    f0 = c1 * b % 3
                    f1 = c0 * b % 3
                    for k in range(pos + 2, n):
                        a[jrow + k] = (a[jrow + k] - f0 * a[p0 + k] - f1 * a[p1 + k]) % 3
            r += 2
            pos += 2
        hist[r] += 1
        if not r & 1:
            sign = 1 if det == 1 else -1
            if (r >> 1) & 1:
                sign = -sign
            total += sign * pow3[m - (r >> 1)]
    return total, hist


def _pick_scan(kernel: str, nf: int, n: int):
    """Choose the compiled kernel when allowed, safe, and importable."""
    if kernel not in ("auto", "compiled", "python"):
        raise ValueError(f"kernel must be auto, compiled or python, got {kernel!r}")
    if kernel == "python":
        return _scan_masks, None
    fits_int64 = (1 << nf) * 3 ** ((n - 1) // 2) < 1 << 62
    if not fits_int64 and kernel == "compiled":
        raise ValueError(f"compiled kernel cannot hold 2**{nf} terms in int64")
    if fits_int64:
        try:
            from . import _kernel

            return _kernel.scan_masks_compiled, _kernel
        except ImportError:
            if kernel == "compiled":
                raise
    return _scan_masks, None


def tait0_alpha(
    g: Triangulation,
    *,
    threads: int = 1,
    max_faces: int = DEFAULT_BUDGETS.max_faces,
    sign_symmetry: bool = False,
    kernel: str = "auto",
) -> TaitAlphaResult:
    """One third of the Tait-coloring count, by full sign-vector enumeration.

    ``threads`` > 1 splits the mask range over worker processes; the merge
    is exact integer addition, so the result is identical for any split.
    ``sign_symmetry`` enumerates only vectors with face 0 positive and
    doubles the total (valid because negating all signs preserves every
    even-rank term); it is off by default and the two paths are checked
    equal in the test suite.  ``kernel`` selects the scan implementation:
    the compiled mirror when available and safe (``auto``), or the
    pure-Python reference (``python``); both produce identical integers.
    """
    nf = len(g.faces)
    if nf > max_faces:
        raise BudgetError(f"2**{nf} sign vectors exceeds the cap 2**{max_faces}")
    if threads < 1:
        raise ValueError(f"threads must be >= 1, got {threads}")
    arrays = _graph_arrays(g)
    scan, compiled = _pick_scan(kernel, nf, g.n)
    step = 2 if sign_symmetry else 1
    count = 1 << (nf - 1) if sign_symmetry else 1 << nf

    jobs = []
    workers = min(threads, count)
    chunk = (count + workers - 1) // workers
    for w in range(workers):
        lo, hi = w * chunk, min((w + 1) * chunk, count)
        if lo < hi:
            jobs.append((arrays, lo * step, hi * step, step))

    if len(jobs) == 1 or workers == 1:
        parts = [scan(*job) for job in jobs]
    else:
        if compiled is not None:
            compiled.warm(arrays)  # compile once here, not in every worker
        with multiprocessing.Pool(processes=workers) as pool:
            parts = pool.starmap(scan, jobs)

    n = g.n
    scaled = sum(p[0] for p in parts)
    hist = [0] * (n + 1)
    for _, h in parts:
        for r, c in enumerate(h):
            hist[r] += c
    if sign_symmetry:
        scaled *= 2
        hist = [2 * c for c in hist]

    scale = 3 ** ((n - 1) // 2)
    if scaled < 0 or scaled % scale:
        raise AssertionError(
            f"accumulated sum {scaled} is not a non-negative multiple of {scale}"
        )
    return TaitAlphaResult(
        tait0=scaled // scale,
        rank_histogram=tuple((r, c) for r, c in enumerate(hist) if c),
        terms=1 << nf,
    )
