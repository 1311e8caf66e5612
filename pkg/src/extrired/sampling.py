"""Random instances for the property suites: small Nakayama algebras, rigid
subcategories and conflations drawn from a category."""
from __future__ import annotations

import numpy as np

from .algebra import QuiverPresentation
from .extri import Conflation, ExtriCategory, build_module_cat, build_stable_cat
from .homology import FormalSum
from .subcat import Subcat, is_b_rigid

MAX_VERTICES = 6
MAX_NILPOTENCY = 4


def random_algebra(rng: np.random.Generator, max_vertices: int = MAX_VERTICES,
                   max_t: int = MAX_NILPOTENCY) -> QuiverPresentation:
    n = int(rng.integers(1, max_vertices + 1))
    t = int(rng.integers(2, max_t + 1))
    if rng.random() < 0.5:
        return QuiverPresentation.cyclic(n, t)
    # a linear quiver with t >= n is hereditary; sometimes leave t unbounded
    return QuiverPresentation.linear(n, None if rng.random() < 0.15 else t)


def random_category(rng: np.random.Generator, **kw) -> ExtriCategory:
    """Unmasked module category, or the stable category when self-injective."""
    Q = random_algebra(rng, **kw)
    if Q.is_self_injective() and rng.random() < 0.4:
        C = build_stable_cat(Q)
        if len(C.roster):
            return C
    return build_module_cat(Q)


def random_rigid(C: ExtriCategory, b: int, rng: np.random.Generator, max_size: int | None = None) -> Subcat:
    """Greedy random subcategory with E^1..E^b vanishing on it."""
    order = list(C.roster)
    rng.shuffle(order)
    if max_size is None:
        max_size = int(rng.integers(0, len(order) + 1))
    chosen: list = []
    for o in order:
        if len(chosen) >= max_size:
            break
        if is_b_rigid(Subcat(C, chosen + [o]), b):
            chosen.append(o)
    return Subcat(C, chosen)


def random_subset(C: ExtriCategory, rng: np.random.Generator) -> Subcat:
    keep = rng.random(len(C.roster)) < rng.random()
    return Subcat(C, [o for o, k in zip(C.roster, keep) if k])


def conflation_pool(C: ExtriCategory) -> list[Conflation]:
    """Non-split conflations with indecomposable ends, plus the approximation
    conflations Ω M -> P -> M of every roster object."""
    pool = list(C.nonsplit_conflations())
    P_E = C.projectives()
    for M in C.roster:
        if M in P_E:
            continue
        sources = C.precover_sources(M, P_E)
        P = FormalSum([o for o, _ in sources])
        pool.append(Conflation(C.omega_rel(M), P, FormalSum(M), f"approximation of {M}"))
    return pool


def sample_conflations(C: ExtriCategory, rng: np.random.Generator, count: int) -> list[Conflation]:
    """``count`` conflations: pool members, split sequences and direct sums of two."""
    pool = conflation_pool(C)
    roster = list(C.roster)
    out = []
    for _ in range(count):
        r = rng.random()
        if r < 0.2 or not pool:
            a = roster[int(rng.integers(len(roster)))]
            c = roster[int(rng.integers(len(roster)))]
            out.append(C.split(a, c))
        elif r < 0.4 and pool:
            x = pool[int(rng.integers(len(pool)))]
            y = pool[int(rng.integers(len(pool)))]
            out.append(x + y)
        else:
            out.append(pool[int(rng.integers(len(pool)))])
    return out
