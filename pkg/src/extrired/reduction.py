"""Reduction of a category at a rigid subcategory X.

With b = n+1, the reduction exists when the two orthogonals X^{⊥≤b} and
^{⊥≤b}X coincide; it is then an extension-closed subcategory whose
E-projectives are add(X ∪ P_E(C)) and whose E-injectives are add(X ∪ I_E(C)).
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import InputError, InternalMismatch, NotRigid, OrthogonalityFails, TheoremViolation
from .extri import ExtriCategory, build_extension_closed_sub, extension_closure_witness
from .report import COMPUTED, STATED, TRIVIAL, CheckList
from .subcat import Subcat, is_b_rigid, left_orth, right_orth, sub_injectives, sub_projectives

N_CAP = 8


@dataclass
class ReductionReport:
    n: int
    X: Subcat
    orth_right: Subcat
    orth_left: Subcat
    condition_holds: bool
    R: ExtriCategory | None = None
    R_projectives: Subcat | None = None
    R_injectives: Subcat | None = None
    frobenius: bool | None = None
    collapse: dict = field(default_factory=dict)
    checks: CheckList = field(default_factory=CheckList)

    @property
    def C(self) -> ExtriCategory:
        return self.X.parent

    @property
    def roster(self) -> list:
        return self.orth_right.objects if self.condition_holds else []

    def require(self) -> "ReductionReport":
        if not self.condition_holds:
            only_r = sorted(self.orth_right.members - self.orth_left.members)
            only_l = sorted(self.orth_left.members - self.orth_right.members)
            raise OrthogonalityFails(
                f"orthogonals at level {self.n + 1} differ: right-only {[str(o) for o in only_r]}, "
                f"left-only {[str(o) for o in only_l]}")
        return self

    def to_dict(self) -> dict:
        d = {
            "n": self.n,
            "X": self.X.as_lists(),
            "orth_right": self.orth_right.as_lists(),
            "orth_left": self.orth_left.as_lists(),
            "condition_holds": self.condition_holds,
            "checks": [c.to_dict() for c in self.checks],
        }
        if self.condition_holds:
            d.update({
                "R": self.orth_right.as_lists(),
                "R_projectives": self.R_projectives.as_lists(),
                "R_injectives": self.R_injectives.as_lists(),
                "frobenius": self.frobenius,
                "collapse": {str(m): v for m, v in sorted(self.collapse.items())},
            })
        return d


def _closure_or_violation(C, D: Subcat, what: str, checks: CheckList):
    w = extension_closure_witness(C, D.members)
    checks.add(f"{what} is closed under extensions", w is None, STATED, w)
    if w is not None:
        raise TheoremViolation(f"{what} is not closed under extensions: {w}")


def reduce(C: ExtriCategory, X: Subcat, n: int, n_cap: int = N_CAP) -> ReductionReport:
    """Compute the reduction of C at X with b = n+1.

    A failing orthogonality condition is a reported outcome
    (``condition_holds = False``), not an exception; call ``require()`` to
    turn it into :class:`OrthogonalityFails`.
    """
    if not isinstance(n, int) or n < 0:
        raise InputError("n must be a non-negative integer")
    if n > n_cap:
        raise InputError(f"n = {n} exceeds the cap {n_cap}")
    if X.parent is not C:
        raise InputError("X must be a subcategory of C")
    b = n + 1
    if not is_b_rigid(X, b):
        raise NotRigid(f"{X} has nonzero E^j(X, X) for some 1 <= j <= {b}")

    checks = CheckList()
    checks.add("X is functorially finite (finite Krull-Schmidt)", True, TRIVIAL)
    right = right_orth(X, b)
    left = left_orth(X, b)
    cond = right == left
    PE = Subcat(C, C.projectives())
    IE = Subcat(C, C.injectives())
    XP = X | PE
    XI = X | IE

    # sufficient conditions for P_E(C) ⊆ X^{⊥≤b}, each tested as an implication
    p_in = PE <= right
    i_in = IE <= left
    for label, hyp in (("P_E(C) = I_E(C)", PE.members == IE.members), ("P_E(C) ⊆ X", PE <= X),
                       ("the orthogonals coincide", cond)):
        checks.add(f"{label} implies P_E(C) ⊆ X^⊥≤{b}", (not hyp) or p_in, STATED)
    for label, hyp in (("P_E(C) = I_E(C)", PE.members == IE.members), ("I_E(C) ⊆ X", IE <= X),
                       ("the orthogonals coincide", cond)):
        checks.add(f"{label} implies I_E(C) ⊆ ^⊥≤{b}X", (not hyp) or i_in, STATED)

    _closure_or_violation(C, right, f"X^⊥≤{b}", checks)
    _closure_or_violation(C, left, f"^⊥≤{b}X", checks)
    p_right = sub_projectives(right, check=False)
    i_left = sub_injectives(left, check=False)
    checks.add(f"P_E(C) ⊆ X^⊥≤{b} iff P_E(X^⊥≤{b}) = add(X ∪ P_E(C))", p_in == (p_right == XP), STATED,
               {"P_E(X^perp)": p_right, "add(X+P_E)": XP})
    checks.add(f"I_E(C) ⊆ ^⊥≤{b}X iff I_E(^⊥≤{b}X) = add(X ∪ I_E(C))", i_in == (i_left == XI), STATED,
               {"I_E(perpX)": i_left, "add(X+I_E)": XI})

    report = ReductionReport(n, X, right, left, cond, checks=checks)
    if not cond:
        _raise_on_stated_failure(report)
        return report

    R = build_extension_closed_sub(C, right.members, name=f"R^{b}", check=False)
    report.R = R
    rp_ = Subcat(C, R.projectives())
    ri_ = Subcat(C, R.injectives())
    if rp_ != p_right or ri_ != sub_injectives(right, check=False):
        raise InternalMismatch("E-projectives of the reduction disagree between its own table and C's table")
    report.R_projectives = rp_
    report.R_injectives = ri_
    checks.add("P_E(C) ∪ I_E(C) lies in the reduction", (PE | IE) <= right, STATED)
    checks.add("P_E(R) = add(X ∪ P_E(C))", rp_ == XP, STATED, {"P_E(R)": rp_, "add(X+P_E)": XP})
    checks.add("I_E(R) = add(X ∪ I_E(C))", ri_ == XI, STATED, {"I_E(R)": ri_, "add(X+I_E)": XI})

    f_containments = (IE <= XP) and (PE <= XI)
    f_classes = rp_ == ri_
    f_table = R.is_frobenius()
    checks.add("Frobenius: containment test, class equality and table agree",
               f_containments == f_classes == f_table, STATED,
               {"containments": f_containments, "classes": f_classes, "table": f_table})
    report.frobenius = f_table

    for m in range(1, b + 1):
        rm, lm = right_orth(X, m), left_orth(X, m)
        report.collapse[m] = rm == lm == right
    checks.add(f"collapse at m = {b} is the reduction itself", report.collapse[b], TRIVIAL)
    _raise_on_stated_failure(report)
    return report


def _raise_on_stated_failure(report: ReductionReport):
    bad = [c for c in report.checks if not c.passed and c.source == STATED]
    if bad:
        err = TheoremViolation("; ".join(c.name for c in bad))
        err.report = report
        raise err


@dataclass
class CollapseVerdict:
    m: int
    holds: bool
    hypotheses: dict
    predicted: bool


def collapse_analysis(C: ExtriCategory, X: Subcat, n: int, m: int,
                      report: ReductionReport | None = None) -> CollapseVerdict:
    rep = report or reduce(C, X, n)
    rep.require()
    if not 1 <= m <= n + 1:
        raise InputError(f"m must lie in 1..{n + 1}")
    holds = rep.collapse[m]
    agree_1 = right_orth(X, 1) == left_orth(X, 1)
    agree_m = right_orth(X, m) == left_orth(X, m)
    hyp = {
        "m = 1 and X^⊥1 = ^⊥1X": m == 1 and agree_1,
        "2 <= m, 2m - n >= 1 and X^⊥≤m = ^⊥≤mX": m >= 2 and 2 * m - n >= 1 and agree_m,
        "m = n+1": m == n + 1,
    }
    return CollapseVerdict(m, holds, hyp, any(hyp.values()))


def collapse_check(C: ExtriCategory, X: Subcat, n: int, m: int, report: ReductionReport | None = None) -> bool:
    """Whether X^{⊥≤m} = ^{⊥≤m}X equals the reduction at level n+1.

    Compares the sets directly; raises TheoremViolation if a sufficient
    condition for collapse holds but the sets differ, or if collapse at m does
    not propagate to every level between m and n+1.
    """
    rep = report or reduce(C, X, n)
    v = collapse_analysis(C, X, n, m, rep)
    if v.predicted and not v.holds:
        raise TheoremViolation(f"collapse at m = {m} predicted by {[k for k, h in v.hypotheses.items() if h]} "
                               f"but the orthogonals differ")
    if v.holds:
        gaps = [j for j in range(m, n + 2) if not rep.collapse[j]]
        if gaps:
            raise TheoremViolation(f"collapse at m = {m} but not at levels {gaps}")
    return v.holds
