"""Cluster-tilting subcategories: detection, enumeration and the comparison
between cluster-tilting subcategories of a reduction and of the whole category.

A subcategory T is b-cluster-tilting when T = T^{⊥≤b} = ^{⊥≤b}T (so b = n+1
for the (n+2) naming).  Functorial finiteness is automatic at finite type.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from .errors import InputError, NotFrobenius, SearchSpaceExceeded
from .extri import ExtriCategory
from .reduction import ReductionReport, reduce
from .report import COMPUTED, STATED, TRIVIAL, CheckList
from .subcat import Subcat, left_orth, right_orth

DEFAULT_CAP = 200_000


@dataclass
class ClusterSearchConfig:
    bound: int
    must_contain: Subcat | None = None
    cap: int = DEFAULT_CAP

    def __post_init__(self):
        if self.bound < 1:
            raise InputError("bound must be >= 1")


def vanishing_matrix(C: ExtriCategory, b: int) -> np.ndarray:
    """Z[i, j] is True iff E^k(roster i, roster j) = 0 for 1 <= k <= b."""
    n = len(C.roster)
    Z = np.ones((n, n), dtype=bool)
    for k in range(1, b + 1):
        Z &= C.e_table(k) == 0
    return Z


def is_cluster_tilting(C: ExtriCategory, T: Subcat, b: int) -> bool:
    return right_orth(T, b) == T and left_orth(T, b) == T


def _bits(row) -> int:
    out = 0
    for j, v in enumerate(row):
        if v:
            out |= 1 << j
    return out


@dataclass
class SearchStats:
    nodes: int = 0
    pruned_rigidity: int = 0
    pruned_witness: int = 0


def enumerate_cluster_tilting(C: ExtriCategory, cfg: ClusterSearchConfig, candidates=None,
                              stats: SearchStats | None = None) -> list[Subcat]:
    """All b-cluster-tilting T with must_contain ⊆ T, in deterministic order.

    Branch on candidates one at a time (include / exclude).  Including c keeps
    only candidates compatible with c in both directions (rigidity pruning).
    A branch is also cut when some object that can no longer join T has no
    possible witness in T against it on one side, since then it would lie in
    that orthogonal of every completion.
    """
    n = len(C.roster)
    b = cfg.bound
    must = cfg.must_contain if cfg.must_contain is not None else Subcat(C)
    if must.parent is not C:
        raise InputError("must_contain must be a subcategory of C")
    stats = stats if stats is not None else SearchStats()
    Z = vanishing_matrix(C, b)
    compat = [_bits(Z[i] & Z[:, i]) for i in range(n)]
    kill_r = [_bits(~Z[:, x]) for x in range(n)]  # t with E(t, x) != 0
    kill_l = [_bits(~Z[x, :]) for x in range(n)]  # t with E(x, t) != 0
    universe = (1 << n) - 1
    start = must.mask()
    for i in must.indices():
        if start & ~compat[i]:
            return []
    avail = universe
    for i in must.indices():
        avail &= compat[i]
    avail &= ~start
    for i in range(n):
        if not Z[i, i]:
            avail &= ~(1 << i)
    if candidates is not None:
        allowed = 0
        for o in candidates:
            allowed |= 1 << C.index[o]
        avail &= allowed

    found = []

    def feasible(S, av):
        pot = S | av
        out = universe & ~pot
        while out:
            low = out & -out
            x = low.bit_length() - 1
            if not (kill_r[x] & pot) or not (kill_l[x] & pot):
                return False
            out ^= low
        return True

    def rec(S, av):
        stats.nodes += 1
        if stats.nodes > cfg.cap:
            raise SearchSpaceExceeded(f"cluster-tilting search exceeded {cfg.cap} nodes")
        if not feasible(S, av):
            stats.pruned_witness += 1
            return
        if not av:
            found.append(S)
            return
        low = av & -av
        c = low.bit_length() - 1
        rest = av & ~low
        pruned = rest & ~compat[c]
        if pruned:
            stats.pruned_rigidity += 1
        rec(S | low, rest & compat[c])
        rec(S, rest)

    rec(start, avail)
    out = []
    for S in found:
        T = Subcat.from_mask(C, S)
        # a leaf is rigid and every outsider has witnesses on both sides, so it is
        # cluster-tilting; confirm against the orthogonal computation anyway
        if is_cluster_tilting(C, T, b):
            out.append(T)
    out.sort(key=lambda T: T.indices())
    return out


def brute_force_cluster_tilting(C: ExtriCategory, b: int, members, must_contain=()) -> list[Subcat]:
    """No-pruning oracle: test every subset of ``members`` (at most 18 objects)."""
    members = sorted(set(members), key=C.index.__getitem__)
    if len(members) > 18:
        raise InputError("the exhaustive oracle is limited to 18 candidate objects")
    Z = vanishing_matrix(C, b)
    n = len(C.roster)
    right_bits = np.array([_bits(~Z[i, :]) for i in range(n)], dtype=np.uint64)
    left_bits = np.array([_bits(~Z[:, i]) for i in range(n)], dtype=np.uint64)
    idx = np.array([C.index[o] for o in members], dtype=np.int64)
    universe = np.uint64((1 << n) - 1) if n < 64 else np.uint64(0xFFFFFFFFFFFFFFFF)
    required = np.uint64(Subcat(C, must_contain).mask())
    masks = _kernels.subset_scan(right_bits, left_bits, idx, universe, required)
    out = [Subcat.from_mask(C, int(m)) for m in masks]
    out.sort(key=lambda T: T.indices())
    return out


def stably_2cy_proxy(C: ExtriCategory, require_frobenius: bool = True) -> bool:
    """Necessary conditions for stably 2-Calabi-Yau: symmetric E^1 dimensions and
    Y^{⊥1} = ^{⊥1}Y for every indecomposable Y.  A True answer is only a proxy."""
    if require_frobenius and not C.is_frobenius():
        raise NotFrobenius(f"{C!r} has P_E != I_E")
    E = C.e1
    if not np.array_equal(E, E.T):
        return False
    for o in C.roster:
        Y = Subcat(C, [o])
        if right_orth(Y, 1) != left_orth(Y, 1):
            return False
    return True


@dataclass
class CorrespondenceReport:
    reduction: ReductionReport
    in_R: list
    in_C: list
    checks: CheckList = field(default_factory=CheckList)

    def __bool__(self):
        return self.checks.passed

    def to_dict(self) -> dict:
        return {
            "n": self.reduction.n,
            "cluster_tilting_in_R": [T.as_lists() for T in self.in_R],
            "cluster_tilting_in_C_containing_X": [T.as_lists() for T in self.in_C],
            "checks": [c.to_dict() for c in self.checks],
            "passed": bool(self),
        }


def verify_correspondence(C: ExtriCategory, X: Subcat, n: int, cap: int = DEFAULT_CAP,
                          report: ReductionReport | None = None) -> CorrespondenceReport:
    rep = (report or reduce(C, X, n)).require()
    R = rep.R
    b = n + 1
    checks = CheckList()
    checks.add("reduction is functorially finite in C (finite type)", True, TRIVIAL)

    in_R = enumerate_cluster_tilting(R, ClusterSearchConfig(b, None, cap))
    in_C = enumerate_cluster_tilting(C, ClusterSearchConfig(b, X, cap))
    as_sets_R = sorted(sorted(C.index[o] for o in T.members) for T in in_R)
    as_sets_C = sorted(T.indices() for T in in_C)
    checks.add("cluster-tilting in R = cluster-tilting in C containing X", as_sets_R == as_sets_C, STATED,
               {"R": [T.as_lists() for T in in_R], "C": [T.as_lists() for T in in_C]})

    idx = [C.index[o] for o in R.roster]
    for i in range(1, b + 1):
        same = np.array_equal(R.e_table(i), C.e_table(i)[np.ix_(idx, idx)])
        checks.add(f"E^{i} computed in R equals E^{i} in C on R", same, STATED)

    probes = [Subcat(R, T.members) for T in in_R] + [Subcat(R, X.members)]
    probes += [Subcat(R, [o]) for o in R.roster]
    ok_r = ok_l = True
    witness = None
    for T in probes:
        TC = Subcat(C, T.members)
        Rm = Subcat(C, R.roster)
        for m in range(1, b + 1):
            if right_orth(T, m).members != (Rm & right_orth(TC, m)).members:
                ok_r, witness = False, (T, m)
            if left_orth(T, m).members != (Rm & left_orth(TC, m)).members:
                ok_l, witness = False, (T, m)
    checks.add("right orthogonals in R are R ∩ right orthogonals in C", ok_r, STATED, None if ok_r else witness)
    checks.add("left orthogonals in R are R ∩ left orthogonals in C", ok_l, STATED, None if ok_l else witness)

    lifted = all(X.members <= T.members and is_cluster_tilting(C, Subcat(C, T.members), b) for T in in_R)
    checks.add("each cluster-tilting T in R contains X and is cluster-tilting in C", lifted, STATED)
    return CorrespondenceReport(rep, in_R, in_C, checks)
