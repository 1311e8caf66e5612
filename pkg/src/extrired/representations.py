"""Matrix representations of the quiver and the exact linear algebra on them.

This layer is the ground-truth oracle: Hom spaces, kernels, cokernels and
decompositions are computed by solving linear systems over GF(p), with no use
of the interval combinatorics in :mod:`extrired.algebra`.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

import numpy as np

from . import linalg as la
from .algebra import IndecObject, QuiverPresentation, hom_basis_indices
from .errors import InternalMismatch


@dataclass(frozen=True, eq=False)
class MatrixRep:
    Q: QuiverPresentation
    p: int
    dims: tuple
    # arrow k (source s -> target h) acts by a dims[h] x dims[s] matrix
    maps: tuple

    def __post_init__(self):
        for (s, h), A in zip(self.Q.arrows(), self.maps):
            if A.shape != (self.dims[h], self.dims[s]):
                raise ValueError(f"arrow {s}->{h}: matrix shape {A.shape} does not match dims")

    @property
    def total_dim(self) -> int:
        return int(sum(self.dims))

    def arrow_out(self, v: int) -> np.ndarray:
        """Matrix of the arrow leaving v, or None on the last vertex of a linear quiver."""
        if not self.Q.is_cyclic and v == self.Q.vertex_count - 1:
            return None
        return self.maps[v]

    def path_action(self, v: int, steps: int) -> np.ndarray:
        """Matrix of the path of ``steps`` arrows starting at v (dims[end] x dims[v])."""
        n = self.Q.vertex_count
        cur = la.identity(self.dims[v])
        u = v
        for _ in range(steps):
            A = self.arrow_out(u)
            if A is None:
                return la.zeros(0, self.dims[v])
            cur = la.matmul(A, cur, self.p)
            u = (u + 1) % n if self.Q.is_cyclic else u + 1
        return cur

    def satisfies_relations(self) -> bool:
        t = self.Q.nilpotency
        if t is None:
            return True
        return all(not np.any(self.path_action(v, t)) for v in range(self.Q.vertex_count))


def realize(Q: QuiverPresentation, obj: IndecObject, p: int = 32003) -> MatrixRep:
    """Interval module as a representation: basis element d (0 <= d < length)
    lives at vertex top+d and each arrow sends d to d+1."""
    n = Q.vertex_count
    owner = [Q.vertex(obj.top + d) if Q.is_cyclic else obj.top + d for d in range(obj.length)]
    local = {v: [d for d in range(obj.length) if owner[d] == v] for v in range(n)}
    pos = {d: local[owner[d]].index(d) for d in range(obj.length)}
    dims = tuple(len(local[v]) for v in range(n))
    maps = []
    for s, h in Q.arrows():
        A = la.zeros(dims[h], dims[s])
        for d in local[s]:
            if d + 1 < obj.length:
                A[pos[d + 1], pos[d]] = 1
        maps.append(A)
    return MatrixRep(Q, p, dims, tuple(maps))


def zero_rep(Q: QuiverPresentation, p: int) -> MatrixRep:
    n = Q.vertex_count
    return MatrixRep(Q, p, (0,) * n, tuple(la.zeros(0, 0) for _ in Q.arrows()))


def direct_sum(reps, Q: QuiverPresentation | None = None, p: int | None = None) -> MatrixRep:
    reps = list(reps)
    if not reps:
        return zero_rep(Q, p)
    Q, p = reps[0].Q, reps[0].p
    n = Q.vertex_count
    dims = tuple(sum(r.dims[v] for r in reps) for v in range(n))
    maps = []
    for k in range(len(Q.arrows())):
        blocks = [r.maps[k] for r in reps]
        rows = sum(b.shape[0] for b in blocks)
        cols = sum(b.shape[1] for b in blocks)
        A = la.zeros(rows, cols)
        r0 = c0 = 0
        for b in blocks:
            A[r0:r0 + b.shape[0], c0:c0 + b.shape[1]] = b
            r0 += b.shape[0]
            c0 += b.shape[1]
        maps.append(A)
    return MatrixRep(Q, p, dims, tuple(maps))


@dataclass(frozen=True, eq=False)
class Morphism:
    source: MatrixRep
    target: MatrixRep
    comps: tuple  # comps[v] is dims_target[v] x dims_source[v]

    def is_zero(self) -> bool:
        return not any(np.any(c) for c in self.comps)

    def commutes(self) -> bool:
        p = self.source.p
        for k, (s, h) in enumerate(self.source.Q.arrows()):
            lhs = la.matmul(self.target.maps[k], self.comps[s], p)
            rhs = la.matmul(self.comps[h], self.source.maps[k], p)
            if not np.array_equal(lhs, rhs):
                return False
        return True

    def then(self, other: "Morphism") -> "Morphism":
        """``other o self``."""
        p = self.source.p
        return Morphism(self.source, other.target,
                        tuple(la.matmul(b, a, p) for a, b in zip(self.comps, other.comps)))

    def scaled_sum(self, other: "Morphism", c: int = 1) -> "Morphism":
        p = self.source.p
        return Morphism(self.source, self.target,
                        tuple((a + c * b) % p for a, b in zip(self.comps, other.comps)))

    def flat(self) -> np.ndarray:
        return np.concatenate([c.ravel() for c in self.comps]) if self.comps else np.zeros(0, np.int64)

    def is_surjective(self) -> bool:
        return all(la.rank(c, self.source.p) == c.shape[0] for c in self.comps)

    def is_injective(self) -> bool:
        return all(la.rank(c, self.source.p) == c.shape[1] for c in self.comps)


def zero_morphism(V: MatrixRep, W: MatrixRep) -> Morphism:
    return Morphism(V, W, tuple(la.zeros(W.dims[v], V.dims[v]) for v in range(len(V.dims))))


def interval_map(Q: QuiverPresentation, Mo: IndecObject, No: IndecObject, a: int, p: int = 32003,
                 V: MatrixRep | None = None, W: MatrixRep | None = None) -> Morphism:
    """The basis map M -> N of image length ``a``: offset d < a of M goes to
    offset m - a + d of N."""
    if a not in hom_basis_indices(Q, Mo, No):
        raise ValueError(f"no basis map {Mo} -> {No} with image length {a}")
    V = V or realize(Q, Mo, p)
    W = W or realize(Q, No, p)
    n = Q.vertex_count

    def where(obj):
        owner = [Q.vertex(obj.top + d) if Q.is_cyclic else obj.top + d for d in range(obj.length)]
        counts = [0] * n
        pos = []
        for v in owner:
            pos.append(counts[v])
            counts[v] += 1
        return owner, pos

    src_owner, src_pos = where(Mo)
    _, tgt_pos = where(No)
    comps = [la.zeros(W.dims[v], V.dims[v]) for v in range(n)]
    shift = No.length - a
    for d in range(a):
        v = src_owner[d]
        comps[v][tgt_pos[shift + d], src_pos[d]] = 1
    return Morphism(V, W, tuple(comps))


def _hom_system(V: MatrixRep, W: MatrixRep):
    """Linear system whose solutions are the homomorphisms V -> W.

    Unknowns are the row-major entries of each component f_v, stacked over v.
    Each arrow s -> h contributes W_a f_s - f_h V_a = 0.
    """
    n = len(V.dims)
    offsets = [0]
    for v in range(n):
        offsets.append(offsets[-1] + W.dims[v] * V.dims[v])
    rows = []
    for k, (s, h) in enumerate(V.Q.arrows()):
        block = la.zeros(W.dims[h] * V.dims[s], offsets[-1])
        if block.shape[0] == 0:
            continue
        Wa, Va = W.maps[k], V.maps[k]
        block[:, offsets[s]:offsets[s + 1]] += np.kron(Wa, la.identity(V.dims[s]))
        block[:, offsets[h]:offsets[h + 1]] -= np.kron(la.identity(W.dims[h]), Va.T)
        rows.append(block % V.p)
    A = np.vstack(rows) if rows else la.zeros(0, offsets[-1])
    return A, offsets


def hom_space(V: MatrixRep, W: MatrixRep) -> list[Morphism]:
    A, offsets = _hom_system(V, W)
    N = la.nullspace(A, V.p)
    basis = []
    n = len(V.dims)
    for c in range(N.shape[1]):
        col = N[:, c]
        comps = tuple(col[offsets[v]:offsets[v + 1]].reshape(W.dims[v], V.dims[v]).copy() for v in range(n))
        basis.append(Morphism(V, W, comps))
    return basis


def hom_space_dim(V: MatrixRep, W: MatrixRep) -> int:
    A, offsets = _hom_system(V, W)
    return offsets[-1] - la.rank(A, V.p)


def span_rank(maps: list[Morphism], p: int) -> int:
    if not maps:
        return 0
    return la.rank(np.vstack([f.flat() for f in maps]), p)


def kernel(f: Morphism) -> tuple[MatrixRep, Morphism]:
    V, p = f.source, f.source.p
    n = len(V.dims)
    bases = [la.nullspace(f.comps[v], p) if V.dims[v] else la.zeros(0, 0) for v in range(n)]
    bases = [b if b.shape[0] == V.dims[v] else la.zeros(V.dims[v], 0) for v, b in enumerate(bases)]
    dims = tuple(b.shape[1] for b in bases)
    maps = []
    for k, (s, h) in enumerate(V.Q.arrows()):
        rhs = la.matmul(V.maps[k], bases[s], p)
        if dims[h] == 0:
            X = la.zeros(0, dims[s])
        else:
            X = la.solve(bases[h], rhs, p)
        maps.append(X)
    K = MatrixRep(V.Q, p, dims, tuple(maps))
    return K, Morphism(K, V, tuple(bases))


def cokernel(f: Morphism) -> tuple[MatrixRep, Morphism]:
    W, p = f.target, f.target.p
    n = len(W.dims)
    quots = []
    for v in range(n):
        if W.dims[v] == 0:
            quots.append(la.zeros(0, 0))
        elif f.comps[v].shape[1] == 0:
            quots.append(la.identity(W.dims[v]))
        else:
            quots.append(la.left_nullspace(f.comps[v], p))
    dims = tuple(q.shape[0] for q in quots)
    maps = []
    for k, (s, h) in enumerate(W.Q.arrows()):
        target = la.matmul(quots[h], W.maps[k], p)  # dims[h] x W.dims[s]
        if dims[s] == 0:
            Y = la.zeros(dims[h], 0)
        else:
            # Y Q_s = Q_h W_a, solved as Q_s^T Y^T = (Q_h W_a)^T
            Y = la.solve(quots[s].T.copy(), target.T.copy(), p).T.copy()
        maps.append(Y)
    C = MatrixRep(W.Q, p, dims, tuple(maps))
    return C, Morphism(W, C, tuple(quots))


def _rank_function(V: MatrixRep, top: int, length: int) -> int:
    Q = V.Q
    if not Q.is_cyclic and not 0 <= top < Q.vertex_count:
        return 0
    v = Q.vertex(top)
    if V.dims[v] == 0:
        return 0
    P = V.path_action(v, length - 1)
    return la.rank(P, V.p) if P.size else 0


def decompose(V: MatrixRep) -> Counter:
    """Multiplicities of interval summands, read off the ranks of path maps.

    r(i, l) counts basis vectors at i surviving l-1 arrow steps, so vectors at
    i of remaining length exactly l, minus those that are images of vectors at
    i-1 of remaining length l+1, are tops of summands M(i, l).
    """
    Q = V.Q
    n = Q.vertex_count
    out = Counter()
    maxlen = V.total_dim + 1
    if Q.nilpotency is not None:
        maxlen = min(maxlen, Q.nilpotency)
    for i in range(n):
        for l in range(1, maxlen + 1):
            if not Q.is_cyclic and i + l > n:
                break
            m = (_rank_function(V, i, l) - _rank_function(V, i, l + 1)
                 - _rank_function(V, i - 1, l + 1) + _rank_function(V, i - 1, l + 2))
            if m < 0:
                raise InternalMismatch(f"negative multiplicity for M({i},{l})")
            if m:
                out[IndecObject(i, l)] = m
    dims = [0] * n
    for obj, mult in out.items():
        for v, d in enumerate(obj.dim_vector(Q)):
            dims[v] += mult * d
    if tuple(dims) != tuple(V.dims):
        raise InternalMismatch(f"decomposition {dict(out)} does not account for dims {V.dims}")
    return out
