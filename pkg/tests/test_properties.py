import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from extrired import les, properties
from extrired.algebra import is_injective, is_projective
from extrired.extri import Conflation, build_module_cat
from extrired.homology import FormalSum, ext_dim_ambient
from extrired.sampling import random_algebra, random_category, random_rigid, random_subset, sample_conflations
from extrired.subcat import Subcat, is_b_rigid, right_orth

seeds = st.integers(min_value=0, max_value=2**32 - 1)


def _category(seed):
    rng = np.random.default_rng(seed)
    return random_category(rng), rng


def _single_classes(C):
    return int(C.e1.max(initial=0)) <= 1


@given(seeds)
def test_padding_does_not_change_higher_extensions(seed):
    C, rng = _category(seed)
    assert properties.padding_failures(C, rng) == []


@given(seeds)
def test_syzygy_and_cosyzygy_tables_agree(seed):
    C, _ = _category(seed)
    for k in (1, 2, 3):
        assert np.array_equal(C.e_table(k), C.e_table_dual(k))


@given(seeds)
@settings(max_examples=25)
def test_module_tables_match_minimal_resolutions(seed):
    rng = np.random.default_rng(seed)
    Q = random_algebra(rng, max_vertices=4)
    C = build_module_cat(Q)
    for k in (1, 2, 3):
        T = C.e_table(k)
        for i in rng.integers(len(C.roster), size=4):
            for j in rng.integers(len(C.roster), size=4):
                assert T[i, j] == ext_dim_ambient(Q, k, C.roster[i], C.roster[j], C.field)


@given(seeds)
def test_projectives_and_injectives_of_module_categories(seed):
    rng = np.random.default_rng(seed)
    Q = random_algebra(rng)
    C = build_module_cat(Q)
    assert set(C.projectives()) == {o for o in C.roster if is_projective(Q, o)}
    assert set(C.injectives()) == {o for o in C.roster if is_injective(Q, o)}
    assert C.is_frobenius() == Q.is_self_injective()


@given(seeds)
@settings(max_examples=25)
def test_long_exact_sequences(seed):
    C, rng = _category(seed)
    if not _single_classes(C):
        return
    for conf in sample_conflations(C, rng, 20):
        assert les.check_conflation(C, conf, C.roster) is None, str(conf)


def test_les_check_catches_a_wrong_middle_term():
    C = build_module_cat(random_algebra(np.random.default_rng(3)))
    confs = C.nonsplit_conflations()
    assert confs
    for conf in confs:
        bad = Conflation(conf.A, conf.B + conf.A, conf.C, "extra summand in the middle")
        assert les.check_conflation(C, bad, C.roster) is not None, str(bad)


def test_rank_profile():
    assert les.rank_profile([0, 1, 1, 0], True) == (True, [0, 1, 0, 0])
    assert les.rank_profile([1, 0, 1], True) == (False, 1)
    assert les.rank_profile([2, 1, 0], False) == (True, [1, 0, 0])
    assert les.rank_profile([3, 1], False) == (True, [None, None])


@given(seeds)
def test_orthogonals_are_monotone_and_closed(seed):
    C, rng = _category(seed)
    Y = random_subset(C, rng)
    assert properties.orthogonal_failures(Y, closure=_single_classes(C)) == []


@given(seeds, st.integers(min_value=0, max_value=2))
def test_projectives_of_orthogonals(seed, n):
    C, rng = _category(seed)
    X = random_rigid(C, n + 1, rng)
    assert is_b_rigid(X, n + 1)
    _, bad = properties.projective_class_failures(X, n + 1)
    assert bad == []


@given(seeds, st.integers(min_value=0, max_value=3))
@settings(max_examples=30)
def test_collapse_theorems(seed, n):
    C, rng = _category(seed)
    if not _single_classes(C):
        return
    X = random_rigid(C, n + 1, rng)
    _, bad = properties.collapse_failures(X, n)
    assert bad == []


@given(seeds)
def test_orthogonal_of_everything_rigid_is_itself(seed):
    C, rng = _category(seed)
    X = random_rigid(C, 1, rng, max_size=len(C.roster))
    # a maximal greedy rigid subcategory contains every object orthogonal to it on both sides
    both = right_orth(X, 1) & Subcat(C, [o for o in C.roster if C.e_dim(1, o, o) == 0])
    for o in both:
        if all(C.e_dim(1, x, o) == 0 and C.e_dim(1, o, x) == 0 for x in X):
            assert o in X


@given(seeds)
def test_formal_sums_are_additive(seed):
    C, rng = _category(seed)
    a, b = (C.roster[int(i)] for i in rng.integers(len(C.roster), size=2))
    s = FormalSum(a) + FormalSum(b)
    assert np.array_equal(C.vector(s), C.vector(a) + C.vector(b))
    for k in (1, 2):
        assert C.e_dim(k, s, a) == C.e_dim(k, a, a) + C.e_dim(k, b, a)
