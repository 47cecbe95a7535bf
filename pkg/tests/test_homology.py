"""Resolutions, Ext, injective dimension and the condition checks."""
import pytest

from weakhopf.algebra import direct_sum_algebra, field_algebra, matrix_algebra, upper_triangular_algebra
from weakhopf.corpus import radical_sequences, split_sequences
from weakhopf.gallery import build_example
from weakhopf.homology import (
    INCONCLUSIVE,
    INF,
    REFUTED,
    VERIFIED,
    NotGorensteinError,
    NotWeakHopfError,
    check_auslander_buchsbaum_d0,
    check_auslander_condition_partial,
    check_ext_adjunction,
    check_ext_duality,
    check_L1,
    check_L2,
    check_propexact,
    check_quasi_frobenius,
    check_R1,
    combine,
    contravariant_exactness,
    depth,
    double_dual_evaluation,
    ext_dims,
    ext_dims_via_injectives,
    ext_group,
    ext_profile,
    grade,
    hom_dual,
    injective_dimension,
    projective_dimension,
    projective_resolution,
    quasi_frobenius_verdicts,
    verdict_by_blocks,
)
from weakhopf.linalg import QQ, Matrix
from weakhopf.modcat import unit_object
from weakhopf.modules import regular_module, zero_module
from weakhopf.weakhopf import WeakHopfAlgebra
from weakhopf.wedderburn import identify_simple, indecomposable_projective, simple_modules


@pytest.fixture(scope="module")
def f2c2():
    return build_example("group:C2:F2")


@pytest.fixture(scope="module")
def a2():
    return upper_triangular_algebra(QQ)


def simple(a, i=0):
    return simple_modules(a)[i].module


def test_combine():
    assert combine([VERIFIED, VERIFIED]) == VERIFIED
    assert combine([VERIFIED, INCONCLUSIVE]) == INCONCLUSIVE
    assert combine([INCONCLUSIVE, REFUTED]) == REFUTED


# resolutions ----------------------------------------------------------------


def test_projective_has_length_zero_resolution(a2):
    P = indecomposable_projective(a2, 0)
    res = projective_resolution(P, 4)
    assert res.complete and res.length == 0
    assert projective_dimension(P).value == 0


def test_periodic_resolution_over_f2c2(f2c2):
    S = simple(f2c2.algebra)
    res = projective_resolution(S, 4)
    assert res.ranks == [2, 2, 2, 2, 2]
    assert res.is_exact() and res.is_minimal()
    assert projective_dimension(S).value == INF


def test_zero_module_resolution(f2c2):
    res = projective_resolution(zero_module(f2c2.algebra), 3)
    assert res.terms == [] or all(t.dim == 0 for t in res.terms)


def test_a2_simple_resolution(a2):
    # the simple that is not projective has a length-one resolution 0 -> P -> P' -> S -> 0
    dims = [projective_dimension(s.module).value for s in simple_modules(a2)]
    assert sorted(dims) == [0, 1]


# Ext ------------------------------------------------------------------------


def test_ext0_of_split_simple():
    a = build_example("group:S3").algebra
    for s in simple_modules(a):
        assert ext_group(s.module, s.module, 0).dim == 1


def test_ext1_trivial_over_f2c2(f2c2):
    S = simple(f2c2.algebra)
    assert ext_group(S, S, 1).dim == 1
    assert ext_dims(S, S, 3) == [1, 1, 1, 1]


def test_ext_of_projective_vanishes(a2):
    R = regular_module(a2)
    for s in simple_modules(a2):
        assert ext_dims(R, s.module, 3)[1:] == [0, 0, 0]


@pytest.mark.parametrize("name", ["group:C2:F2", "group:S3:F3", "pair-groupoid:2", "group:C4:F2"])
def test_balanced_ext(name):
    a = build_example(name).algebra
    mods = [s.module for s in simple_modules(a)] + [regular_module(a)]
    for m in mods:
        for n in mods:
            assert ext_dims(m, n, 3) == ext_dims_via_injectives(m, n, 3)


def test_balanced_ext_a2(a2):
    mods = [s.module for s in simple_modules(a2)]
    for m in mods:
        for n in mods:
            assert ext_dims(m, n, 2) == ext_dims_via_injectives(m, n, 2)


# grade, depth, injective dimension -----------------------------------------


def test_grade_of_zero_is_infinite(f2c2):
    assert grade(zero_module(f2c2.algebra)).value == INF


def test_grade_zero_over_quasi_frobenius(f2c2):
    for m in (simple(f2c2.algebra), regular_module(f2c2.algebra)):
        assert grade(m).value == 0


def test_grade_one_over_a2(a2):
    grades = sorted(grade(s.module).value for s in simple_modules(a2))
    assert grades == [0, 1]


def test_depth(f2c2):
    S = simple(f2c2.algebra)
    assert depth(S).value == 0
    assert depth(regular_module(f2c2.algebra)).value == 0
    assert depth(zero_module(f2c2.algebra)).value == INF


def test_injective_dimension_a2(a2):
    for side in ("left", "right"):
        inj = injective_dimension(a2, side)
        assert inj.value.value == 1 and inj.consistent


def test_injective_dimension_semisimple():
    a = matrix_algebra(QQ, 2)
    assert injective_dimension(a).value.value == 0


def test_profile_concentrated(f2c2):
    prof = ext_profile(f2c2.algebra, "left", 3)
    assert prof.concentrated_in() == 0
    assert prof.as_table()


# L1 / R1 --------------------------------------------------------------------


@pytest.mark.parametrize("name", ["pair-groupoid:2", "group:C2:F2"])
def test_l1_verified_concentrated_in_zero(name):
    a = build_example(name).algebra
    v = check_L1(a)
    assert v.verdict == VERIFIED
    assert check_R1(a).verdict == VERIFIED
    assert ext_profile(a, "left").concentrated_in() == 0


def test_l1_refuted_on_a2_with_witness(a2):
    v = check_L1(a2)
    assert v.verdict == REFUTED
    w = v.witness
    assert w.degree == 0
    # 0 -> S -> P -> S' -> 0 with middle term the two-dimensional projective
    assert w.sequence.middle.dim == 2
    assert identify_simple(w.sequence.first) is not None
    assert identify_simple(w.sequence.last) is not None
    assert check_R1(a2).verdict == REFUTED


def test_l2_on_gallery_member():
    a = build_example("group:S3:F2").algebra
    assert check_L2(a).verdict == VERIFIED


def test_block_verdicts_match():
    a = build_example("dsum:pair-groupoid:2,group:C2@F2").algebra
    whole, blocks = verdict_by_blocks(a, check_L1)
    assert len(blocks) == 2
    assert whole.verdict == VERIFIED and all(b.verdict == VERIFIED for b in blocks)


# quasi-Frobenius -------------------------------------------------------------


def test_semisimple_matrix_algebra_quasi_frobenius():
    qf, gor = quasi_frobenius_verdicts(matrix_algebra(QQ, 3))
    assert qf.verdict == VERIFIED and gor.verdict == VERIFIED


def test_a2_not_quasi_frobenius(a2):
    qf, _ = quasi_frobenius_verdicts(a2)
    assert qf.verdict == REFUTED
    assert qf.evidence["injdim_left"] == "1"


def test_fake_coalgebra_on_a2_refused(a2):
    delta = [{(i, i): 1} for i in range(3)]
    fake = WeakHopfAlgebra.from_terms(a2, delta, [1, 1, 1], Matrix.identity(QQ, 3))
    with pytest.raises(NotWeakHopfError):
        check_quasi_frobenius(fake)


def test_gallery_member_quasi_frobenius():
    qf, gor = check_quasi_frobenius(build_example("group:D4:F2"))
    assert qf.verdict == VERIFIED and gor.verdict == VERIFIED


# the duality Hom(-, A) --------------------------------------------------------


def test_hom_dual_of_trivial_over_f2c2(f2c2):
    S = simple(f2c2.algebra)
    d = hom_dual(S)
    assert d.module.dim == 1
    assert d.module.algebra is f2c2.algebra.opposite()
    assert double_dual_evaluation(S).is_isomorphism()


def test_duality_semisimple():
    assert check_ext_duality(matrix_algebra(QQ, 2)).verdict == VERIFIED


def test_duality_blockwise():
    a = direct_sum_algebra(field_algebra(QQ), matrix_algebra(QQ, 2))
    v = check_ext_duality(a)
    assert v.verdict == VERIFIED
    assert sorted(v.evidence["simple_map"]) == [0, 1]


def test_duality_needs_gorenstein_zero(a2):
    with pytest.raises(NotGorensteinError):
        check_ext_duality(a2)
    with pytest.raises(NotGorensteinError):
        check_ext_duality(matrix_algebra(QQ, 2), d=1)


# Ext adjunction and exactness -------------------------------------------------


def test_adjunction_with_unit_object():
    w = build_example("pair-groupoid:2")
    S = simple(w.algebra)
    rep = check_ext_adjunction(w, S, unit_object(w).module, S)
    assert rep.lhs == rep.rhs == ext_dims(S, S, 3)


def test_adjunction_hopf_f2c2(f2c2):
    S = simple(f2c2.algebra)
    rep = check_ext_adjunction(f2c2, S, regular_module(f2c2.algebra), S)
    assert rep.lhs == rep.rhs and rep.passed


def test_adjunction_semisimple_vanishes():
    w = build_example("pair-groupoid:2")
    S = simple(w.algebra)
    rep = check_ext_adjunction(w, S, S, S)
    assert rep.lhs[1:] == [0, 0, 0] and rep.rhs[1:] == [0, 0, 0]


def test_propexact_f2c2_radical_sequence(f2c2):
    R = regular_module(f2c2.algebra)
    rep = check_propexact(f2c2, radical_sequences(f2c2.algebra), R)
    assert rep.passed


def test_split_sequences_are_exact_rows(a2):
    R = regular_module(a2)
    for seq in split_sequences(a2):
        assert contravariant_exactness(seq, R, 2) is None


# Auslander-Buchsbaum and the Auslander condition ------------------------------


def test_auslander_buchsbaum_projective(f2c2):
    rep = check_auslander_buchsbaum_d0(f2c2.algebra, regular_module(f2c2.algebra))
    assert rep.projdim.value == 0 and rep.depth.value == 0 and rep.verdict == VERIFIED


def test_auslander_buchsbaum_vacuous(f2c2):
    rep = check_auslander_buchsbaum_d0(f2c2.algebra, simple(f2c2.algebra))
    assert rep.projdim.value == INF and rep.period is not None
    assert rep.verdict == VERIFIED


def test_auslander_condition_semisimple():
    a = matrix_algebra(QQ, 2)
    rep = check_auslander_condition_partial(a, simple(a))
    assert rep.verdict == VERIFIED
    assert all(d == 0 for q, d, _ in rep.grades if q >= 1)


def test_auslander_condition_f2c2_exhaustive(f2c2):
    for m in (simple(f2c2.algebra), regular_module(f2c2.algebra)):
        rep = check_auslander_condition_partial(f2c2.algebra, m, upto=3)
        assert rep.verdict == VERIFIED and rep.exhaustive


def test_auslander_condition_dim4_module_over_f2():
    w = build_example("group:C4:F2")
    rep = check_auslander_condition_partial(w.algebra, regular_module(w.algebra), upto=2)
    assert rep.verdict == VERIFIED and rep.exhaustive
