import itertools

import pytest

from extrired.algebra import (FieldSpec, IndecObject, M, QuiverPresentation, enumerate_indecomposables,
                              hom_basis_indices, hom_dim, hom_dim_interval, injective, projective, simple)
from extrired.errors import InputError, InternalMismatch, InvalidPresentation
from extrired import representations as rp

EX1 = QuiverPresentation.linear(3)
SMALL = [QuiverPresentation.linear(3), QuiverPresentation.linear(4, 2), QuiverPresentation.linear(5, 3),
         QuiverPresentation.cyclic(1, 3), QuiverPresentation.cyclic(3, 2), QuiverPresentation.cyclic(4, 4),
         QuiverPresentation.cyclic(5, 3)]


def test_presentation_invariants():
    with pytest.raises(InvalidPresentation):
        QuiverPresentation.cyclic(3, None)
    with pytest.raises(InvalidPresentation):
        QuiverPresentation.linear(0)
    with pytest.raises(InvalidPresentation):
        QuiverPresentation.linear(3, 1)
    with pytest.raises(InputError):
        FieldSpec(15)
    assert QuiverPresentation("cyclic", 5, 3) == QuiverPresentation.cyclic(5, 3)


@pytest.mark.parametrize("Q,count", [(QuiverPresentation.linear(3), 6), (QuiverPresentation.cyclic(5, 3), 15),
                                     (QuiverPresentation.linear(1), 1), (QuiverPresentation.cyclic(12, 4), 48)])
def test_enumerate_counts(Q, count):
    objs = enumerate_indecomposables(Q)
    assert len(objs) == count == len(set(objs))
    assert objs == sorted(objs)


def test_brute_force_interval_count():
    # intervals [i, j] of a linear quiver with at most t factors
    for n, t in ((4, None), (5, 2), (6, 3)):
        Q = QuiverPresentation.linear(n, t)
        brute = sum(1 for i in range(n) for j in range(i, n) if t is None or j - i + 1 <= t)
        assert len(enumerate_indecomposables(Q)) == brute


def test_ex1_projectives_and_injectives():
    P1 = projective(EX1, 0)
    assert P1.dim_vector(EX1) == (1, 1, 1)
    assert injective(EX1, 0) == simple(EX1, 0)
    assert injective(EX1, 0).dim_vector(EX1) == (1, 0, 0)
    assert P1 == injective(EX1, 2)
    assert hom_dim(EX1, P1, projective(EX1, 1)) == 0
    assert hom_dim(EX1, projective(EX1, 1), P1) == 1


def test_realize_shapes():
    S = rp.realize(EX1, simple(EX1, 0))
    assert tuple(S.dims) == (1, 0, 0)
    assert all(m.size == 0 for m in S.maps)
    P = rp.realize(EX1, projective(EX1, 0))
    assert tuple(P.dims) == (1, 1, 1)
    assert [m.tolist() for m in P.maps] == [[[1]], [[1]]]
    Q = QuiverPresentation.cyclic(5, 3)
    V = rp.realize(Q, M(3, 2))
    assert tuple(V.dims) == (0, 0, 0, 1, 1)


@pytest.mark.parametrize("Q", SMALL, ids=lambda Q: Q.describe())
def test_relations_and_local_endomorphisms(Q):
    for o in enumerate_indecomposables(Q):
        V = rp.realize(Q, o)
        assert V.satisfies_relations()
        # local endomorphism ring; it is the field once the module is shorter than the cycle
        assert hom_dim(Q, o, o) >= 1
        if o.length <= Q.n:
            assert hom_dim(Q, o, o) == 1
        assert sum(o.dim_vector(Q)) == o.length


@pytest.mark.parametrize("Q", SMALL, ids=lambda Q: Q.describe())
def test_hom_from_projective_is_evaluation(Q):
    for o in enumerate_indecomposables(Q):
        for v in range(Q.n):
            assert hom_dim(Q, projective(Q, v), o) == o.dim_vector(Q)[v]


@pytest.mark.parametrize("Q", SMALL, ids=lambda Q: Q.describe())
def test_hom_routes_agree(Q):
    objs = enumerate_indecomposables(Q)
    for a, b in itertools.product(objs, objs):
        V, W = rp.realize(Q, a), rp.realize(Q, b)
        assert hom_dim_interval(Q, a, b) == rp.hom_space_dim(V, W)


@pytest.mark.parametrize("Q", SMALL, ids=lambda Q: Q.describe())
def test_no_two_objects_isomorphic(Q):
    objs = enumerate_indecomposables(Q)
    for a, b in itertools.combinations(objs, 2):
        V, W = rp.realize(Q, a), rp.realize(Q, b)
        if V.dims != W.dims:
            continue
        for f in rp.hom_space(V, W):
            assert not (f.is_injective() and f.is_surjective())


def test_illegal_object_rejected():
    with pytest.raises(InputError):
        hom_dim(EX1, M(2, 2), M(0, 1))
    with pytest.raises((InputError, ValueError)):
        IndecObject(0, 0)


def test_basis_maps_commute_and_are_independent():
    Q = QuiverPresentation.cyclic(4, 4)
    for a, b in itertools.product(enumerate_indecomposables(Q), repeat=2):
        maps = [rp.interval_map(Q, a, b, k) for k in hom_basis_indices(Q, a, b)]
        assert all(f.commutes() for f in maps)
        assert rp.span_rank(maps, 32003) == len(maps) == hom_dim(Q, a, b)


def test_decompose_direct_sum():
    Q = QuiverPresentation.cyclic(3, 3)
    objs = [M(0, 2), M(1, 3), M(0, 2), M(2, 1)]
    V = rp.direct_sum([rp.realize(Q, o) for o in objs], Q, 32003)
    got = rp.decompose(V)
    assert got == {M(0, 2): 2, M(1, 3): 1, M(2, 1): 1}


def test_hom_mismatch_would_raise(monkeypatch):
    from extrired import algebra
    algebra._hom_dim_checked.cache_clear()
    monkeypatch.setattr(algebra, "hom_dim_interval", lambda Q, a, b: 99)
    with pytest.raises(InternalMismatch):
        algebra.hom_dim(EX1, M(0, 1), M(0, 1))
    algebra._hom_dim_checked.cache_clear()
