"""Algebra core: validation, centre, radical, simples, covers and blocks."""
import pytest

from weakhopf.algebra import (
    FiniteDimAlgebra,
    center,
    direct_sum_algebra,
    field_algebra,
    matrix_algebra,
    upper_triangular_algebra,
    validate_algebra,
)
from weakhopf.gallery import build_example
from weakhopf.linalg import GF, QQ
from weakhopf.modules import hom_dim, regular_module, zero_module
from weakhopf.wedderburn import (
    NotIdempotentError,
    block_decompose,
    check_central_idempotent_lemma,
    composition_multiplicities,
    indecomposable_projective,
    is_projective,
    jacobson_radical,
    projective_cover,
    radical_of_module,
    simple_modules,
)

F2 = GF(2)


def kk(field=QQ):
    k = field_algebra(field)
    return direct_sum_algebra(k, k)


def test_validate_field_and_matrix_units():
    assert validate_algebra(field_algebra(QQ)).passed
    assert validate_algebra(matrix_algebra(QQ, 2)).passed


def test_validate_catches_tampered_constant():
    m2 = matrix_algebra(QQ, 2)
    tuples = m2.structure_tuples()
    i, j, k, c = tuples[3]
    bad = FiniteDimAlgebra(QQ, 4, tuples[:3] + [(i, j, k, 2)] + tuples[4:], m2.unit)
    rep = validate_algebra(bad)
    assert not rep.passed
    assert all(len(w) in (1, 3) for _, w in rep.failures)


def test_center():
    assert center(kk()).dim == 2
    z = center(matrix_algebra(QQ, 2))
    assert z.dim == 1 and z.contains([1, 0, 0, 1])
    a = matrix_algebra(QQ, 2)
    assert center(direct_sum_algebra(a, kk())).dim == center(a).dim + center(kk()).dim


def test_radical_semisimple_is_zero():
    assert jacobson_radical(matrix_algebra(QQ, 2)).dim == 0


def test_radical_upper_triangular():
    J = jacobson_radical(upper_triangular_algebra(QQ))
    assert J.dim == 1 and J.contains([0, 1, 0])


def test_radical_f2_c2():
    a = build_example("group:C2:F2").algebra
    J = jacobson_radical(a)
    assert J.dim == 1 and J.contains([1, 1])


def test_simple_modules():
    assert [s.dim for s in simple_modules(matrix_algebra(QQ, 2))] == [2]
    assert [s.dim for s in simple_modules(kk())] == [1, 1]
    assert [s.dim for s in simple_modules(build_example("pair-groupoid:2").algebra)] == [2]


def test_schur_for_split_simples():
    a = build_example("group:S3").algebra
    simples = [s.module for s in simple_modules(a)]
    for i, s in enumerate(simples):
        for j, t in enumerate(simples):
            assert hom_dim(s, t) == (1 if i == j else 0)


def test_hom_from_regular_has_module_dimension():
    a = build_example("group:C2:F2").algebra
    for s in simple_modules(a):
        assert hom_dim(regular_module(a), s.module) == s.dim


def test_projective_cover_of_projective_indecomposable():
    a = upper_triangular_algebra(QQ)
    for i in range(len(simple_modules(a))):
        P = indecomposable_projective(a, i)
        pc = projective_cover(P)
        assert pc.module.dim == P.dim and pc.map.is_isomorphism()


def test_projective_cover_of_trivial_f2_c2():
    a = build_example("group:C2:F2").algebra
    S = simple_modules(a)[0].module
    pc = projective_cover(S)
    assert pc.module.dim == 2
    assert pc.map.is_surjective() and pc.map.is_module_map()
    assert not is_projective(S)


def test_projective_cover_of_zero():
    a = kk()
    pc = projective_cover(zero_module(a))
    assert pc.module.dim == 0


def test_projective_cover_kernel_in_radical():
    a = upper_triangular_algebra(QQ)
    for s in simple_modules(a):
        pc = projective_cover(s.module)
        assert radical_of_module(pc.module).contains_space(pc.map.kernel())


def test_composition_multiplicities_of_regular():
    a = upper_triangular_algebra(QQ)
    assert sum(composition_multiplicities(regular_module(a))) == 3


@pytest.mark.parametrize("alg,count", [
    (lambda: direct_sum_algebra(field_algebra(QQ), field_algebra(QQ)), 2),
    (lambda: matrix_algebra(QQ, 3), 1),
    (lambda: direct_sum_algebra(direct_sum_algebra(field_algebra(QQ), matrix_algebra(QQ, 2)), field_algebra(QQ)), 3),
])
def test_block_counts(alg, count):
    bd = block_decompose(alg())
    assert len(bd) == count
    assert sum(bd.dims) == alg().dim


def test_dsum_blocks_over_f2_match_summands():
    w = build_example("dsum:pair-groupoid:2,group:C2@F2")
    assert w.dim == 6
    assert sorted(block_decompose(w.algebra).dims) == [2, 4]


def test_dsum_over_q_splits_the_group_algebra():
    # QC2 = Q x Q, so the group summand contributes two blocks over Q
    w = build_example("dsum:pair-groupoid:2,group:C2")
    assert w.dim == 6
    assert sorted(block_decompose(w.algebra).dims) == [1, 1, 4]


def test_groupoid_components_are_blocks():
    w = build_example("union:pair-groupoid:2,group:C2,pair-groupoid:3@F2")
    assert len(block_decompose(w.algebra)) == 3


def test_central_idempotent_lemma():
    a = kk()
    assert check_central_idempotent_lemma(a, a.unit, a.unit) == "verified"
    assert check_central_idempotent_lemma(a, [1, 0], [1, 0]) == "verified"
    m2 = matrix_algebra(QQ, 2)
    assert check_central_idempotent_lemma(m2, [1, 0, 0, 0], [1, 0, 0, 0]) == "hypothesis-not-met"
    with pytest.raises(NotIdempotentError):
        check_central_idempotent_lemma(m2, [2, 0, 0, 0], [2, 0, 0, 0])
