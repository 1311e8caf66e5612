import pytest

from extrired.algebra import QuiverPresentation
from extrired.errors import InputError, NotRigid, OrthogonalityFails
from extrired.extri import build_module_cat
from extrired.instance import subcat_X
from extrired.reduction import N_CAP, collapse_analysis, collapse_check, reduce
from extrired.report import STATED
from extrired.subcat import Subcat, right_orth


def test_ex1_never_reduces(cat):
    spec, C = cat("ex1")
    X = subcat_X(spec, C)
    for n in range(4):
        rep = reduce(C, X, n)
        assert not rep.condition_holds and rep.R is None
        assert rep.orth_right != rep.orth_left
        with pytest.raises(OrthogonalityFails):
            rep.require()
        assert rep.to_dict()["condition_holds"] is False


def test_ex2(cat):
    spec, C = cat("ex2")
    X = subcat_X(spec, C)
    rep = reduce(C, X, 0).require()
    assert rep.frobenius
    assert rep.R_projectives == X == rep.R_injectives
    assert list(rep.R.roster) == rep.orth_right.objects
    assert rep.checks.passed


def test_ex3(cat):
    spec, C = cat("ex3")
    X = subcat_X(spec, C)
    rep = reduce(C, X, 0).require()
    want = X.members | set(spec.group("heart"))
    assert rep.frobenius
    assert rep.R_projectives.members == want == rep.R_injectives.members


def test_ex4(cat):
    spec, C = cat("ex4")
    X = subcat_X(spec, C)
    rep = reduce(C, X, 2).require()
    star = set(spec.group("star"))
    assert rep.orth_right.members == X.members | star
    PE, IE = set(C.projectives()), set(C.injectives())
    assert PE | IE <= rep.orth_right.members
    assert rep.R_projectives.members == X.members | PE
    assert rep.R_injectives.members == X.members | IE
    assert rep.collapse == {1: False, 2: False, 3: True}


@pytest.mark.parametrize("name", ["ex2", "ex3", "ex4"])
def test_stated_checks_pass(cat, name):
    spec, C = cat(name)
    rep = reduce(C, subcat_X(spec, C), spec.n)
    assert all(c.passed for c in rep.checks if c.source == STATED)
    d = rep.to_dict()
    assert d["R"] == rep.orth_right.as_lists()


def test_preconditions(cat):
    spec, C = cat("ex2")
    X = subcat_X(spec, C)
    with pytest.raises(NotRigid):
        reduce(C, Subcat.whole(C), 0)
    with pytest.raises(InputError):
        reduce(C, X, N_CAP + 1)
    with pytest.raises(InputError):
        reduce(C, X, -1)
    _, C1 = cat("ex1")
    with pytest.raises(InputError):
        reduce(C1, X, 0)


def test_empty_x_reduces_to_the_whole_category(cat):
    _, C = cat("ex2")
    rep = reduce(C, Subcat(C), 1).require()
    assert rep.orth_right == Subcat.whole(C)
    assert rep.R_projectives.members == set(C.projectives())


def test_collapse(cat):
    spec, C = cat("ex4")
    X = subcat_X(spec, C)
    rep = reduce(C, X, 2)
    assert [collapse_check(C, X, 2, m, rep) for m in (1, 2, 3)] == [False, False, True]
    v = collapse_analysis(C, X, 2, 3, rep)
    assert v.predicted and v.holds
    v = collapse_analysis(C, X, 2, 2, rep)
    assert not v.predicted and not v.holds
    with pytest.raises(InputError):
        collapse_check(C, X, 2, 4, rep)


def test_collapse_needs_a_reduction(cat):
    spec, C = cat("ex1")
    with pytest.raises(OrthogonalityFails):
        collapse_check(C, subcat_X(spec, C), 0, 1)


def test_collapse_on_a_symmetric_category():
    C = build_module_cat(QuiverPresentation.cyclic(2, 2))
    for o in C.roster:
        X = Subcat(C, [o])
        if not C.e_dim(1, o, o):
            for n in range(3):
                try:
                    rep = reduce(C, X, n)
                except NotRigid:
                    break
                if rep.condition_holds:
                    assert collapse_check(C, X, n, 1, rep)
                    assert rep.orth_right == right_orth(X, 1)
