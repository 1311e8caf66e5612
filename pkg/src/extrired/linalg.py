"""Exact linear algebra over a prime field GF(p).

Matrices are int64 numpy arrays with entries in ``[0, p)``.  All routines
copy their input before handing it to the row-reduction kernel.
"""
from __future__ import annotations

import numpy as np

from . import _kernels


def as_field(a, p: int) -> np.ndarray:
    return np.asarray(a, dtype=np.int64) % p


def zeros(rows: int, cols: int) -> np.ndarray:
    return np.zeros((rows, cols), dtype=np.int64)


def identity(n: int) -> np.ndarray:
    return np.eye(n, dtype=np.int64)


def matmul(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    if a.shape[1] == 0 or a.shape[0] == 0 or b.shape[1] == 0:
        return zeros(a.shape[0], b.shape[1])
    return (a @ b) % p


def rref(a: np.ndarray, p: int) -> tuple[np.ndarray, int, np.ndarray]:
    work = np.ascontiguousarray(as_field(a, p))
    if work.size == 0:
        return work, 0, np.empty(0, dtype=np.int64)
    r, piv = _kernels.rref(work, p)
    return work, int(r), piv


def rank(a: np.ndarray, p: int) -> int:
    if a.size == 0:
        return 0
    return rref(a, p)[1]


def nullspace(a: np.ndarray, p: int) -> np.ndarray:
    """Columns form a basis of {x : a x = 0}."""
    m, n = a.shape
    if n == 0:
        return zeros(0, 0)
    if m == 0:
        return identity(n)
    red, r, piv = rref(a, p)
    pivset = set(int(c) for c in piv)
    free = [c for c in range(n) if c not in pivset]
    basis = zeros(n, len(free))
    for j, f in enumerate(free):
        basis[f, j] = 1
        for i in range(r):
            basis[piv[i], j] = (-red[i, f]) % p
    return basis


def left_nullspace(a: np.ndarray, p: int) -> np.ndarray:
    """Rows form a basis of {y : y a = 0}."""
    return nullspace(a.T, p).T.copy()


def solve(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """Return one solution X of a X = b; raise ValueError if none exists."""
    m, n = a.shape
    k = b.shape[1]
    if m == 0:
        return zeros(n, k)
    aug = np.concatenate([as_field(a, p), as_field(b, p)], axis=1)
    red, r, piv = rref(aug, p)
    if r and piv[r - 1] >= n:
        raise ValueError("inconsistent linear system over GF(p)")
    x = zeros(n, k)
    for i in range(r):
        x[piv[i]] = red[i, n:]
    return x


def in_span(vectors: np.ndarray, v: np.ndarray, p: int) -> bool:
    """Is ``v`` in the row span of ``vectors``?"""
    if vectors.shape[0] == 0:
        return not np.any(as_field(v, p))
    return rank(np.vstack([vectors, v]), p) == rank(vectors, p)
