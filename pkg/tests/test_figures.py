import pytest

from extrired import figures
from extrired.algebra import M, QuiverPresentation
from extrired.errors import InputError
from extrired.instance import load_fixture


def test_ex2_grid():
    assert len(figures.EX2_X.read()["o"]) == 7   # five projective-injectives and two simples
    ps = [o for o in figures.EX2_X.objects("o") if o.length == 3]
    assert len(ps) == 5
    assert set(figures.EX2_X.objects("o")) <= set(figures.EX2_X_PERP1.objects("o"))


def test_ex3_grid_covers_the_subcategory():
    spec = load_fixture("ex3")
    drawn = figures.EX3.objects("D", "B", "o", "C", "H")
    assert sorted(drawn) == sorted(spec.subset)
    assert figures.EX3.objects("H") == [M(0, 1)]


def test_ex4_grid_covers_the_subcategory():
    spec = load_fixture("ex4")
    assert sorted(figures.EX4.objects("C", "S", "K", "*")) == sorted(spec.subset)
    # the stable category has 36 non-projective indecomposables
    assert sum(len(v) for v in figures.EX4.read().values()) == 36


def test_cell_conventions():
    g = figures.ARGrid(QuiverPresentation.linear(3), 4, ((1, "a"), (2, "b"), (1, "c")))
    assert g.cell(3, 1) == M(1, 1)
    assert g.cell(1, 1) == M(0, 3)
    with pytest.raises(InputError):
        g.cell(1, 2)
    with pytest.raises(InputError):
        g.cell(3, 9)


def test_conflicting_wrapped_cells():
    Q = QuiverPresentation.cyclic(2, 2)
    g = figures.ARGrid(Q, 3, ((1, "a b a"), (2, "c d")))
    g.read()
    bad = figures.ARGrid(Q, 3, ((1, "a b b"), (2, "c d")))
    with pytest.raises(InputError):
        bad.read()
