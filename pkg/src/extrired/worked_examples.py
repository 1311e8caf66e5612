"""Check lists for the bundled example instances ex1..ex5.

Each function takes a parsed instance (normally the bundled fixture) and
returns a :class:`CheckList`.  Claims made by the examples carry the
``stated`` label; comparisons with a second computation carry ``computed``.
Object groups come from the instance file and are compared against the
transcribed AR grids in :mod:`extrired.figures`.
"""
from __future__ import annotations

from . import figures
from .algebra import is_injective, is_projective
from .cluster import (DEFAULT_CAP, ClusterSearchConfig, brute_force_cluster_tilting, enumerate_cluster_tilting,
                      is_cluster_tilting, stably_2cy_proxy, verify_correspondence)
from .errors import OrthogonalityFails
from .extri import extension_closure_witness
from .homology import ext_dim_ambient, extension_middle, stable_hom_dim, sigma_indec
from .instance import InstanceSpec, build_category, load_fixture, subcat_X
from .reduction import reduce
from .report import COMPUTED, STATED, TRIVIAL, CheckList
from .subcat import (Subcat, is_b_rigid, is_functorially_finite, is_strongly_precovering,
                     is_strongly_preenveloping, left_orth, precover, right_orth)

EXAMPLES = ("ex1", "ex2", "ex3", "ex4", "ex5")


def _names(objs):
    return sorted(str(o) for o in objs)


def _same(checks, name, got, want, source=STATED):
    got, want = set(got), set(want)
    return checks.add(name, got == want, source,
                      None if got == want else {"got": _names(got), "expected": _names(want)})


def check_ex1(spec: InstanceSpec) -> CheckList:
    checks = CheckList()
    C = build_category(spec)
    Q = C.Q
    g = {k: v[0] for k, v in spec.groups}
    P1, P2, P3, I1, I2, I3 = (g[k] for k in ("P1", "P2", "P3", "I1", "I2", "I3"))
    X = subcat_X(spec, C)

    checks.add("group labels name the projectives and injectives",
               all(is_projective(Q, o) for o in (P1, P2, P3)) and all(is_injective(Q, o) for o in (I1, I2, I3))
               and len({P1, P2, P3}) == 3 and len({I1, I2, I3}) == 3, TRIVIAL)
    checks.add("P(1) = I(3)", P1 == I3, STATED)
    for c, a, label in ((I1, P2, "I(1), P(2)"), (I2, P3, "I(2), P(3)")):
        checks.add(f"dim E(C; {label}) = 1", C.e_dim(1, c, a) == 1, STATED)
        checks.add(f"dim Ext^1({label}) = 1 from a minimal resolution",
                   ext_dim_ambient(Q, 1, c, a, C.field) == 1, COMPUTED)
    for c, a, label in ((I1, P2, "I(1) by P(2)"), (I2, P3, "I(2) by P(3)")):
        dim, B = extension_middle(Q, c, a, C.p)
        checks.add(f"the non-split extension of {label} has middle term P(1)",
                   dim == 1 and B is not None and B.support() == [P1] and B.multiplicity(P1) == 1, STATED,
                   None if B is None else str(B))
    checks.add("P(1) -> I(3) is an isomorphism (E(I(3), -) = 0)", not C.e1[C.index[I3]].any(), STATED)
    checks.add("the add(P_E)-precover of I(1) is P(1) with kernel P(2)",
               precover(Subcat(C, C.projectives()), I1).object.support() == [P1]
               and C.omega_rel(I1).support() == [P2], STATED)

    for b in range(1, 6):
        checks.add(f"add(M) is rigid up to E^{b}", is_b_rigid(X, b), STATED)
    checks.add("M is not E-projective", not X.members <= set(C.projectives()), STATED,
               _names(X.members - set(C.projectives())))
    ok, _ = is_functorially_finite(X)
    checks.add("add(M) is precovering", ok, TRIVIAL)

    PE = Subcat(C, C.projectives())
    for n in range(4):
        rep = reduce(C, X, n)
        try:
            rep.require()
            raised = False
        except OrthogonalityFails:
            raised = True
        checks.add(f"reduction at n = {n} fails: the orthogonals differ", raised and not rep.condition_holds,
                   STATED, None if raised else rep.orth_right)
        checks.add(f"P_E(C) is not inside X^⊥≤{n + 1}", not PE <= rep.orth_right, STATED)
    return checks


def check_ex2(spec: InstanceSpec) -> CheckList:
    checks = CheckList()
    C = build_category(spec)
    Q = C.Q
    X = subcat_X(spec, C)
    PE, IE = set(C.projectives()), set(C.injectives())
    checks.add("C is Frobenius", C.is_frobenius(), STATED)
    checks.add("C has 5 indecomposable projective-injectives",
               len(PE) == 5 and all(is_projective(Q, o) and is_injective(Q, o) for o in PE), STATED)
    _same(checks, "X matches the transcribed grid", X.members, figures.EX2_X.objects("o"))
    checks.add("X is closed under extensions", extension_closure_witness(C, X.members) is None, STATED)
    checks.add("X is 2-rigid (E^1 vanishes on X)", is_b_rigid(X, 1), STATED)
    r1, l1 = right_orth(X, 1), left_orth(X, 1)
    _same(checks, "X^⊥1 matches the transcribed grid", r1.members, figures.EX2_X_PERP1.objects("o"))
    _same(checks, "X^⊥1 matches the instance group X_perp1", r1.members, spec.group("X_perp1"), COMPUTED)
    _same(checks, "X^⊥1 = ^⊥1X", r1.members, l1.members)
    checks.add("I_E(C) = P_E(C) ⊆ X", IE == PE and PE <= X.members, STATED)

    rep = reduce(C, X, 0).require()
    checks.extend(rep.checks)
    checks.add("the reduction R^1 is Frobenius", rep.frobenius, STATED)
    _same(checks, "P_E(R^1) = add(X)", rep.R_projectives.members, X.members)
    _same(checks, "I_E(R^1) = add(X)", rep.R_injectives.members, X.members)

    ok = all(stable_hom_dim(Q, M, sigma_indec(Q, N), C.field) == C.e_dim(1, M, N)
             for M in C.roster for N in C.roster
             if not is_projective(Q, M) and not is_projective(Q, N))
    checks.add("dim stable Hom(M, ΣN) = dim E(M, N) on non-projective pairs", ok, STATED)
    return checks


def check_ex3(spec: InstanceSpec) -> CheckList:
    checks = CheckList()
    C = build_category(spec)   # raises NotExtensionClosed if the subset is not closed
    checks.add("C is closed under extensions in mod", True, STATED)
    g = dict(spec.groups)
    grid = figures.EX3
    for name, sym in (("diamond", "D"), ("lozenge", "B"), ("circle", "o"), ("club", "C"), ("heart", "H")):
        _same(checks, f"group {name} matches the transcribed grid", g[name], grid.objects(sym), COMPUTED)
    X = subcat_X(spec, C)
    heart = set(g["heart"])
    _same(checks, "X = diamond + lozenge + circle", X.members, set(g["diamond"]) | set(g["lozenge"]) | set(g["circle"]))
    checks.add("E vanishes between B1 and B2",
               all(C.e_dim(1, a, b) == 0 and C.e_dim(1, b, a) == 0 for a in C.roster for b in heart), STATED)
    PE, IE = set(C.projectives()), set(C.injectives())
    _same(checks, "P_E(C) = diamond + lozenge + heart", PE, set(g["diamond"]) | set(g["lozenge"]) | heart)
    _same(checks, "I_E(C) = lozenge + circle + heart", IE, set(g["lozenge"]) | set(g["circle"]) | heart)
    checks.add("C is not Frobenius", not C.is_frobenius(), STATED)
    checks.add("P_E(C) ∪ I_E(C) is not inside X", not (PE | IE) <= X.members, STATED)
    checks.add("X is 2-rigid (E^1 vanishes on X)", is_b_rigid(X, 1), STATED)
    checks.add("X is functorially finite", is_functorially_finite(X)[0], TRIVIAL)
    checks.add("X is not strongly functorially finite",
               not (is_strongly_precovering(X) and is_strongly_preenveloping(X)), STATED)
    r1, l1 = right_orth(X, 1), left_orth(X, 1)
    _same(checks, "X^⊥1 = add(X ∪ heart)", r1.members, X.members | heart)
    _same(checks, "^⊥1X = add(X ∪ heart)", l1.members, X.members | heart)
    checks.add("P_E(C) ⊆ add(X ∪ I_E(C))", PE <= X.members | IE, STATED)
    checks.add("I_E(C) ⊆ add(X ∪ P_E(C))", IE <= X.members | PE, STATED)

    rep = reduce(C, X, 0).require()
    checks.extend(rep.checks)
    checks.add("the reduction R^1 is Frobenius", rep.frobenius, STATED)
    _same(checks, "P_E(R^1) = add(X ∪ heart)", rep.R_projectives.members, X.members | heart)
    _same(checks, "I_E(R^1) = add(X ∪ heart)", rep.R_injectives.members, X.members | heart)
    for k in (2, 3):
        checks.add(f"E^{k} table: syzygy route equals cosyzygy route",
                   (C.e_table(k) == C.e_table_dual(k)).all(), COMPUTED)
    return checks


def _ex4_common(spec: InstanceSpec, checks: CheckList):
    C = build_category(spec)
    checks.add("C is closed under extensions in the stable category", True, STATED)
    checks.add("the stable category has 36 indecomposables", len(C.parent.roster) == 36, COMPUTED)
    g = dict(spec.groups)
    grid = figures.EX4
    for name, sym in (("club", "C"), ("spade", "S"), ("star", "K"), ("bullet", "*")):
        _same(checks, f"group {name} matches the transcribed grid", g[name], grid.objects(sym), COMPUTED)
    _same(checks, "C = club + bullet + spade + star", C.roster,
          set(g["club"]) | set(g["bullet"]) | set(g["spade"]) | set(g["star"]), COMPUTED)
    X = subcat_X(spec, C)
    club, spade, star = set(g["club"]), set(g["spade"]), set(g["star"])
    _same(checks, "X = club + spade", X.members, club | spade)
    return C, X, club, spade, star


def check_ex4(spec: InstanceSpec) -> CheckList:
    checks = CheckList()
    C, X, club, spade, star = _ex4_common(spec, checks)
    _same(checks, "P_E(C) = club + star", C.projectives(), club | star)
    _same(checks, "I_E(C) = spade + star", C.injectives(), spade | star)
    checks.add("X is 4-rigid (E^1..E^3 vanish on X)", is_b_rigid(X, 3), STATED)
    checks.add("X is functorially finite", is_functorially_finite(X)[0], TRIVIAL)
    r3, l3 = right_orth(X, 3), left_orth(X, 3)
    _same(checks, "X^⊥≤3 = ^⊥≤3X", r3.members, l3.members)
    rep = reduce(C, X, spec.n).require()
    checks.extend(rep.checks)
    _same(checks, "R^3 = club + spade + star", rep.orth_right.members, club | spade | star, COMPUTED)
    checks.add("X^⊥1 != ^⊥1X", right_orth(X, 1) != left_orth(X, 1), STATED)
    R = rep.R
    idx = [C.index[o] for o in R.roster]
    for i in (1, 2, 3):
        checks.add(f"E^{i} computed in R agrees with C", (R.e_table(i) == C.e_table(i)[idx][:, idx]).all(), STATED)
    for k in (2, 3):
        checks.add(f"E^{k} table: syzygy route equals cosyzygy route",
                   (C.e_table(k) == C.e_table_dual(k)).all(), COMPUTED)
    return checks


def check_ex5(spec: InstanceSpec) -> CheckList:
    checks = CheckList()
    C, X, club, spade, star = _ex4_common(spec, checks)
    b = spec.cluster.bound if spec.cluster else spec.n + 1
    rep = reduce(C, X, spec.n).require()
    R = Subcat(C, rep.orth_right.members)
    checks.add("X^⊥1 != ^⊥1X, so the stably 2-CY proxy is false",
               right_orth(X, 1) != left_orth(X, 1) and not stably_2cy_proxy(C, require_frobenius=False), STATED)
    checks.add("R^3 is 4-cluster-tilting in C", is_cluster_tilting(C, R, b), STATED)
    checks.add("X is not 4-cluster-tilting in C", not is_cluster_tilting(C, X, b), STATED)
    cap = (spec.cluster.cap if spec.cluster else None) or DEFAULT_CAP
    found = enumerate_cluster_tilting(C, ClusterSearchConfig(b, X, cap))
    checks.add("the only 4-cluster-tilting T with X ⊆ T is R^3", found == [R], STATED,
               None if found == [R] else [T.as_lists() for T in found])
    corr = verify_correspondence(C, X, spec.n, report=rep)
    checks.extend(corr.checks)

    # exhaustive pass over X, the star and the first bullets (17 objects)
    bullets = sorted(set(C.roster) - club - spade - star)
    members = sorted(X.members | star | set(bullets[:11]))
    brute = brute_force_cluster_tilting(C, b, members, must_contain=X.members)
    pruned = enumerate_cluster_tilting(C, ClusterSearchConfig(b, X), candidates=members)
    checks.add(f"no-pruning search over {len(members)} objects agrees with the pruned search",
               brute == pruned, COMPUTED, None if brute == pruned else {"brute": brute, "pruned": pruned})
    return checks


CHECKERS = {"ex1": check_ex1, "ex2": check_ex2, "ex3": check_ex3, "ex4": check_ex4, "ex5": check_ex5}


def run_example(name: str, spec: InstanceSpec | None = None) -> CheckList:
    if spec is None:
        spec = load_fixture(name)
    return CHECKERS[name](spec)
