"""Randomized property checks over generated Nakayama instances.

``check_instance`` runs every family on one category and returns a
:class:`Tally`; the acceptance suite sums tallies over a few hundred seeds and
the hypothesis suite calls the single-family helpers directly.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import les
from .errors import TheoremViolation
from .extri import ExtriCategory, extension_closure_witness
from .homology import FormalSum
from .reduction import collapse_analysis, collapse_check, reduce
from .sampling import random_category, random_rigid, random_subset, sample_conflations
from .subcat import Subcat, is_b_rigid, left_orth, right_orth, sub_injectives, sub_projectives

FAMILIES = ("padding", "les", "orthogonals", "projectives", "collapse")


@dataclass
class Tally:
    cases: dict = field(default_factory=lambda: {f: 0 for f in FAMILIES})
    hypotheses: dict = field(default_factory=lambda: {f: 0 for f in FAMILIES})
    failures: list = field(default_factory=list)
    skipped: list = field(default_factory=list)

    def merge(self, other: "Tally"):
        for f in FAMILIES:
            self.cases[f] += other.cases[f]
            self.hypotheses[f] += other.hypotheses[f]
        self.failures += other.failures
        self.skipped += other.skipped

    def fail(self, family: str, what):
        self.failures.append((family, what))


def padding_failures(C: ExtriCategory, rng: np.random.Generator, kmax: int = 3) -> list:
    """Rows of E^k computed from padded approximations that differ from the table."""
    bad = []
    projs = C.projectives()
    for i, M in enumerate(C.roster):
        cur = FormalSum(M)
        for k in range(2, kmax + 1):
            if projs:
                P = projs[int(rng.integers(len(projs)))]
                cur = C.omega_rel(cur, pad=(P, rng))
            else:
                cur = C.omega_rel(cur)
            row = C.vector(cur) @ C.e1
            if not np.array_equal(row, C.e_table(k)[i]):
                bad.append((M, k, str(cur)))
                break
    return bad


def orthogonal_failures(X: Subcat, mmax: int = 3, closure: bool = True) -> list:
    C = X.parent
    bad = []
    for m in range(1, mmax + 1):
        for side, f in (("right", right_orth), ("left", left_orth)):
            D = f(X, m)
            if not f(X, m + 1) <= D:
                bad.append((side, "monotone", m))
            w = extension_closure_witness(C, D.members) if closure else None
            if w is not None:
                bad.append((side, "closed", m, w))
    return bad


def projective_class_failures(X: Subcat, b: int):
    """(hypotheses that held, failures) for the projective/injective description
    of the two orthogonals of a b-rigid X."""
    C = X.parent
    PE, IE = Subcat(C, C.projectives()), Subcat(C, C.injectives())
    right, left = right_orth(X, b), left_orth(X, b)
    held, bad = 0, []
    if PE <= right:
        held += 1
        if sub_projectives(right, check=False) != X | PE:
            bad.append(("P_E of right orthogonal", X, b))
    if IE <= left:
        held += 1
        if sub_injectives(left, check=False) != X | IE:
            bad.append(("I_E of left orthogonal", X, b))
    return held, bad


def collapse_failures(X: Subcat, n: int):
    """(levels where a sufficient condition held, failures) for one reduction."""
    C = X.parent
    rep = reduce(C, X, n)
    if not rep.condition_holds:
        return 0, []
    held, bad = 0, []
    for m in range(1, n + 2):
        v = collapse_analysis(C, X, n, m, rep)
        held += v.predicted
        try:
            collapse_check(C, X, n, m, rep)
        except TheoremViolation as e:
            bad.append((X, n, m, str(e)))
    return held, bad


def check_instance(C: ExtriCategory, rng: np.random.Generator, conflations: int = 100,
                   subcats: int = 4) -> Tally:
    t = Tally()
    # middle terms of a class in a space of dimension > 1 are not enumerated, so
    # such categories skip the families that need them
    multi = int(C.e1.max(initial=0)) > 1
    if multi:
        t.skipped.append((repr(C), "les, extension closure, collapse", "an E-space of dimension > 1"))
    for w in padding_failures(C, rng):
        t.fail("padding", w)
    t.cases["padding"] += len(C.roster)

    for conf in ([] if multi else sample_conflations(C, rng, conflations)):
        r = les.check_conflation(C, conf, C.roster)
        t.cases["les"] += 1
        if r is not None:
            t.fail("les", (str(conf), r))

    for _ in range(subcats):
        n = int(rng.integers(0, 3))
        b = n + 1
        Y = random_subset(C, rng)
        for w in orthogonal_failures(Y, closure=not multi):
            t.fail("orthogonals", w)
        t.cases["orthogonals"] += 1

        X = random_rigid(C, b, rng)
        if not is_b_rigid(X, b):
            t.fail("projectives", ("sampler returned a non-rigid subcategory", X, b))
            continue
        held, bad = projective_class_failures(X, b)
        t.cases["projectives"] += 1
        t.hypotheses["projectives"] += held
        t.failures += [("projectives", w) for w in bad]

        if multi:
            continue
        try:
            held, bad = collapse_failures(X, n)
        except TheoremViolation as e:
            held, bad = 0, [(X, n, "reduce", str(e))]
        t.cases["collapse"] += 1
        t.hypotheses["collapse"] += held
        t.failures += [("collapse", w) for w in bad]
    return t


def run(instances: int, seed: int = 0, conflations: int = 100) -> Tally:
    """Check ``instances`` generated categories, seeds seed, seed+1, ..."""
    total = Tally()
    for s in range(seed, seed + instances):
        rng = np.random.default_rng(s)
        total.merge(check_instance(random_category(rng), rng, conflations))
    return total
