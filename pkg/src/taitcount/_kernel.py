"""Compiled mirror of ``alphasum._scan_masks``.

Same algorithm, same exact integers; only the loop runs under numba.
Partial sums stay within int64 because callers guard the bound
(terms * 3**scale < 2**62) before choosing this path.  Importing this
module pulls in numba, so it is imported lazily by ``alphasum``.
"""

from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True)
def _scan(n, eu, ev, ef1, ef2, start, stop, step, pow3, m):  # pragma: no cover
    ne = eu.shape[0]
    hist = np.zeros(n + 1, dtype=np.int64)
    total = np.int64(0)
    a = np.zeros((n, n), dtype=np.int64)
    dacc = np.zeros(n, dtype=np.int64)
    for mask in range(start, stop, step):
        for i in range(n):
            dacc[i] = 0
            for j in range(n):
                a[i, j] = 0
        for e in range(ne):
            b1 = (mask >> ef1[e]) & 1
            b2 = (mask >> ef2[e]) & 1
            if b1 == b2:
                w = 1 if b1 else 2
                u = eu[e]
                v = ev[e]
                a[u, v] = 3 - w
                a[v, u] = 3 - w
                dacc[u] += w
                dacc[v] += w
        for i in range(n):
            a[i, i] = dacc[i] % 3
        r = 0
        det = 1
        pos = 0
        while pos < n:
            piv = -1
            for i in range(pos, n):
                if a[i, i] != 0:
                    piv = i
                    break
            if piv >= 0:
                if piv != pos:
                    for k in range(n):
                        t = a[pos, k]
                        a[pos, k] = a[piv, k]
                        a[piv, k] = t
                    for k in range(n):
                        t = a[k, pos]
                        a[k, pos] = a[k, piv]
                        a[k, piv] = t
                d = a[pos, pos]
                det = det * d % 3
                for j in range(pos + 1, n):
                    c = a[pos, j]
                    if c != 0:
                        f = c * d % 3
                        for k in range(pos + 1, n):
                            a[j, k] = (a[j, k] - f * a[pos, k]) % 3
                r += 1
                pos += 1
                continue
            fi = -1
            fj = -1
            for i in range(pos, n):
                for j in range(i + 1, n):
                    if a[i, j] != 0:
                        fi = i
                        fj = j
                        break
                if fi >= 0:
                    break
            if fi < 0:
                break
            for s in range(2):
                src = fi if s == 0 else fj
                dst = pos + s
                if src != dst:
                    for k in range(n):
                        t = a[dst, k]
                        a[dst, k] = a[src, k]
                        a[src, k] = t
                    for k in range(n):
                        t = a[k, dst]
                        a[k, dst] = a[k, src]
                        a[k, src] = t
            b = a[pos, pos + 1]
            det = det * 2 % 3  # 2x2 block determinant -b**2 = -1
            for j in range(pos + 2, n):
                c0 = a[j, pos]
                c1 = a[j, pos + 1]
                if c0 != 0 or c1 != 0:
                    f0 = c1 * b % 3
                    f1 = c0 * b % 3
                    for k in range(pos + 2, n):
                        a[j, k] = (a[j, k] - f0 * a[pos, k] - f1 * a[pos + 1, k]) % 3
            r += 2
            pos += 2
        hist[r] += 1
        if r % 2 == 0:
            sign = 1 if det == 1 else -1
            if (r >> 1) & 1:
                sign = -sign
            total += sign * pow3[m - (r >> 1)]
    return total, hist


def scan_masks_compiled(arrays, start: int, stop: int, step: int) -> tuple[int, list[int]]:
    """Drop-in replacement for ``alphasum._scan_masks``."""
    n, eu, ev, ef1, ef2 = arrays
    m = (n - 1) // 2
    total, hist = _scan(
        n,
        np.array(eu, dtype=np.int64),
        np.array(ev, dtype=np.int64),
        np.array(ef1, dtype=np.int64),
        np.array(ef2, dtype=np.int64),
        start,
        stop,
        step,
        np.array([3**k for k in range(m + 1)], dtype=np.int64),
        m,
    )
    return int(total), [int(h) for h in hist]


def warm(arrays) -> None:
    """Trigger compilation in this process (before forking workers)."""
    scan_masks_compiled(arrays, 0, 0, 1)
