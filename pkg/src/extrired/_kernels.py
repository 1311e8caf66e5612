"""Hot numeric kernels.

Two kernels dominate runtime: row reduction over GF(p) (every Hom space,
kernel, cokernel and rank goes through it) and the exhaustive subset scan
used as the no-pruning oracle for cluster-tilting enumeration.

Both have a numba ``@njit`` version and a pure-numpy version with identical
semantics.  Set ``EXTRIRED_DISABLE_NUMBA=1`` to force the numpy path.
"""
from __future__ import annotations

import os

import numpy as np

_DISABLED = os.environ.get("EXTRIRED_DISABLE_NUMBA", "").strip().lower() in ("1", "true", "yes")

try:
    import numba
    from numba import njit

    HAS_NUMBA = True
except ImportError:  # pragma: no cover - numba is optional
    HAS_NUMBA = False

USE_NUMBA = HAS_NUMBA and not _DISABLED
BACKEND = "numba" if USE_NUMBA else "numpy"


# ---------------------------------------------------------------------------
# GF(p) row reduction
# ---------------------------------------------------------------------------

def _inv_mod_py(x: int, p: int) -> int:
    return pow(int(x), p - 2, p)


def rref_numpy(a: np.ndarray, p: int):
    """Reduce ``a`` (int64, entries in [0, p)) to reduced row echelon form in place.

    Returns ``(rank, pivots)`` where ``pivots`` holds the pivot column of each
    nonzero row.
    """
    m, n = a.shape
    pivots = np.empty(min(m, n), dtype=np.int64)
    r = 0
    for c in range(n):
        if r == m:
            break
        nz = np.flatnonzero(a[r:, c])
        if nz.size == 0:
            continue
        piv = r + nz[0]
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        inv = _inv_mod_py(a[r, c], p)
        a[r] = (a[r] * inv) % p
        col = a[:, c].copy()
        col[r] = 0
        rows = np.flatnonzero(col)
        if rows.size:
            a[rows] = (a[rows] - np.outer(col[rows], a[r])) % p
        pivots[r] = c
        r += 1
    return r, pivots[:r].copy()


def subset_scan_numpy(right_bits: np.ndarray, left_bits: np.ndarray, members: np.ndarray,
                      universe: np.uint64, required: np.uint64) -> np.ndarray:
    """Return every subset S of ``members`` (as roster bitmasks) with
    ``required`` contained in S and S equal to both of its orthogonals.

    ``right_bits[i]`` is the bitmask of roster objects N with some E^j(i, N) != 0;
    ``left_bits[i]`` the objects N with some E^j(N, i) != 0.
    """
    k = members.shape[0]
    size = 1 << k
    masks = np.zeros(size, dtype=np.uint64)
    kill_r = np.zeros(size, dtype=np.uint64)
    kill_l = np.zeros(size, dtype=np.uint64)
    for j in range(k):
        lo, hi = 1 << j, 1 << (j + 1)
        bit = np.uint64(1) << np.uint64(members[j])
        masks[lo:hi] = masks[:lo] | bit
        kill_r[lo:hi] = kill_r[:lo] | right_bits[members[j]]
        kill_l[lo:hi] = kill_l[:lo] | left_bits[members[j]]
    right = universe & ~kill_r
    left = universe & ~kill_l
    ok = (masks == right) & (masks == left) & ((masks & required) == required)
    return masks[ok]


if HAS_NUMBA:

    @njit(cache=True)
    def _inv_mod_nb(x, p):
        result = 1
        base = x % p
        e = p - 2
        while e > 0:
            if e & 1:
                result = (result * base) % p
            base = (base * base) % p
            e >>= 1
        return result

    @njit(cache=True)
    def rref_numba(a, p):
        m, n = a.shape
        pivots = np.empty(min(m, n), dtype=np.int64)
        r = 0
        for c in range(n):
            if r == m:
                break
            piv = -1
            for i in range(r, m):
                if a[i, c] != 0:
                    piv = i
                    break
            if piv < 0:
                continue
            if piv != r:
                for j in range(n):
                    tmp = a[r, j]
                    a[r, j] = a[piv, j]
                    a[piv, j] = tmp
            inv = _inv_mod_nb(a[r, c], p)
            for j in range(n):
                a[r, j] = (a[r, j] * inv) % p
            for i in range(m):
                if i != r:
                    f = a[i, c]
                    if f != 0:
                        for j in range(n):
                            a[i, j] = (a[i, j] - f * a[r, j]) % p
            pivots[r] = c
            r += 1
        return r, pivots[:r].copy()

    @njit(cache=True)
    def subset_scan_numba(right_bits, left_bits, members, universe, required):
        k = members.shape[0]
        size = 1 << k
        out = np.empty(size, dtype=np.uint64)
        count = 0
        one = np.uint64(1)
        for s in range(size):
            mask = np.uint64(0)
            kr = np.uint64(0)
            kl = np.uint64(0)
            for j in range(k):
                if (s >> j) & 1:
                    mask |= one << np.uint64(members[j])
                    kr |= right_bits[members[j]]
                    kl |= left_bits[members[j]]
            if (mask & required) != required:
                continue
            if mask == (universe & ~kr) and mask == (universe & ~kl):
                out[count] = mask
                count += 1
        return out[:count].copy()

else:
    rref_numba = None
    subset_scan_numba = None

# the compiled versions stay importable for cross-checks even when disabled
rref = rref_numba if USE_NUMBA else rref_numpy
subset_scan = subset_scan_numba if USE_NUMBA else subset_scan_numpy


def warmup() -> None:
    """Compile (or load from the on-disk cache) both kernels on tiny inputs, so
    timing-sensitive callers do not pay the one-off JIT cost mid-measurement."""
    rref(np.array([[1, 2], [3, 4]], dtype=np.int64), 7)
    bits = np.zeros(1, dtype=np.uint64)
    subset_scan(bits, bits, np.zeros(1, dtype=np.int64), np.uint64(1), np.uint64(0))
