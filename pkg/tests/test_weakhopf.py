import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from weakhopf.algebra import AlgebraError
from weakhopf.gallery import QF_GALLERY, build_example
from weakhopf.linalg import GF, QQ, Matrix
from weakhopf.wedderburn import simple_modules
from weakhopf.weakhopf import (
    Groupoid,
    NotAGroupoidError,
    WeakHopfAlgebra,
    block_inclusion,
    build_groupoid_algebra,
    check_all,
    check_antipode,
    check_morphism,
    check_weak_bialgebra,
    dual,
    group_algebra,
    matrix_weak_hopf,
    mutate,
    pair_groupoid,
    swap_summands,
    tensor_product,
)


def test_eps_s_hopf_case_is_counit_times_one():
    w = group_algebra(QQ, "S3")
    for i in range(w.dim):
        h = w.algebra.basis_vector(i)
        assert w.eps_s(h) == [w.eps(h) * u for u in w.algebra.unit]


def test_eps_s_on_pair_groupoid_arrow():
    w = build_example("pair-groupoid:2")
    # E12 runs from object 2 to object 1, so eps_s picks out the identity E22
    assert w.eps_s([0, 1, 0, 0]) == [0, 0, 0, 1]
    assert w.eps_s(w.algebra.unit) == w.algebra.unit


@pytest.mark.parametrize("name", ["pair-groupoid:3", "union:pair-groupoid:2,group:S3", "group:D4:F2"])
def test_groupoid_algebras_pass(name):
    assert check_all(build_example(name)).passed


def test_c2_is_a_genuine_bialgebra():
    w = build_example("group:C2")
    rep = check_weak_bialgebra(w)
    assert rep.passed and rep.genuine_bialgebra
    assert w.is_bialgebra_unit()


def test_kk_is_genuinely_weak():
    w = build_example("kk")
    assert w.dim == 2
    assert w.delta_one_terms() == {(0, 0): 1, (1, 1): 1}
    rep = check_weak_bialgebra(w)
    assert rep.passed and not rep.genuine_bialgebra


def test_zero_counit_on_one_arrow_fails():
    w = build_example("pair-groupoid:2")
    counit = Matrix(QQ, [[1, 0, 1, 1]])
    rep = check_weak_bialgebra(w.with_data(counit=counit))
    assert not rep.passed
    assert "counit-multiplicativity" in rep.failed_axioms() or "counit" in rep.failed_axioms()


def test_identity_antipode_on_nonabelian_group_fails():
    w = build_example("group:S3")
    rep = check_antipode(w.with_data(antipode=Matrix.identity(QQ, w.dim)))
    assert not rep.passed


def test_identity_antipode_on_c2_passes():
    w = build_example("group:C2")
    assert check_antipode(w.with_data(antipode=Matrix.identity(QQ, 2))).passed


def test_pair_groupoid_is_matrix_algebra():
    w = build_example("pair-groupoid:3")
    assert w.dim == 9
    assert [s.dim for s in simple_modules(w.algebra)] == [3]


def test_tensor_with_field_is_same_dimension():
    k = build_example("pair-groupoid:1")
    w = build_example("group:S3")
    t = tensor_product(k, w)
    assert t.dim == w.dim and check_all(t).passed


def test_matrix_weak_hopf_passes():
    w = matrix_weak_hopf(2, build_example("group:C2:F2"))
    assert w.dim == 8 and check_all(w).passed


def test_dual_of_groupoid_algebra():
    w = build_example("pair-groupoid:2")
    assert check_all(dual(w)).passed


def test_morphisms():
    w = build_example("group:C2")
    assert check_morphism(Matrix.identity(QQ, 2), w, w).passed
    ww = build_example("dsum:group:C2,group:C2")
    assert check_morphism(swap_summands(ww, 2), ww, ww).passed
    assert not check_morphism(block_inclusion(w, w), w, ww).passed


def test_not_a_groupoid():
    g = Groupoid(1, [(0, 0), (0, 0)], {(0, 0): 0, (0, 1): 1, (1, 0): 1, (1, 1): 1}, ["e", "x"])
    with pytest.raises(NotAGroupoidError):
        build_groupoid_algebra(QQ, g)


def test_shape_errors():
    a = build_example("group:C2").algebra
    with pytest.raises(AlgebraError):
        WeakHopfAlgebra(a, Matrix.zeros(QQ, 3, 2), Matrix.zeros(QQ, 1, 2))


def test_pair_groupoid_arrow_bookkeeping():
    g = pair_groupoid(3)
    for x in range(3):
        assert g.inverse(g.identity(x)) == g.identity(x)


@pytest.mark.parametrize("name", QF_GALLERY)
def test_gallery_axioms(name):
    w = build_example(name)
    assert check_weak_bialgebra(w).passed
    assert check_antipode(w).passed


# every single-entry mutation is noticed by some checker
@settings(max_examples=30, deadline=None)
@given(st.sampled_from(["group:C2", "kk", "pair-groupoid:2", "group:S3:F2", "dsum:group:C2,group:C2@F3"]),
       st.sampled_from(["comul", "counit", "antipode"]), st.randoms(use_true_random=False))
def test_mutations_are_caught(name, part, rng):
    w = build_example(name)
    nrows = {"comul": w.dim * w.dim, "counit": 1, "antipode": w.dim}[part]
    idx = (rng.randrange(nrows), rng.randrange(w.dim))
    m = mutate(w, part, idx, 1)
    assert not (check_weak_bialgebra(m).passed and check_antipode(m).passed)


def test_mutation_over_f2_flips_the_entry():
    w = build_example("group:C2:F2")
    m = mutate(w, "counit", (0, 1))
    assert m.counit.rows[0][1] == GF(2).reduce(w.counit.rows[0][1] + 1)
