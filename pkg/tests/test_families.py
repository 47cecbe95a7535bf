import pytest

from weakhopf.families import (
    FamilyError,
    Mono,
    NoWindingCharacter,
    SigmaNotAlgebraAutomorphism,
    SigmaNotWeakHopfAutomorphism,
    build_ore_extension,
    build_smash_laurent,
    check_family,
    check_primitive_t,
    replay_smash_derivations,
    winding_character,
)
from weakhopf.gallery import build_example, named_sigma
from weakhopf.linalg import QQ, Matrix
from weakhopf.weakhopf import group_by_name


def field_whs():
    return build_example("pair-groupoid:1")


def test_laurent_polynomials_over_k():
    fam = build_smash_laurent(field_whs(), Matrix.identity(QQ, 1), 3)
    assert check_family(fam).passed
    assert len(fam.keys()) == 7


def test_smash_over_kk_with_swap():
    kk = build_example("kk")
    fam = build_smash_laurent(kk, named_sigma(kk, "swap"), 3)
    assert check_family(fam).passed
    assert replay_smash_derivations(fam).passed


def test_smash_antipode_formula_on_degree_two():
    kk = build_example("kk")
    sigma = named_sigma(kk, "swap")
    fam = build_smash_laurent(kk, sigma, 3)
    # S(w (x) a^2) = sigma^-2(S_W(w)) (x) a^-2, and sigma^2 = id here
    for i in range(2):
        s_w = kk.antipode.column(i)
        expected = {Mono(j, -2): c for j, c in enumerate(sigma.inverse().power(2).apply(s_w)) if c}
        assert fam.antipode_key(Mono(i, 2)) == expected


def test_replay_rejects_ore():
    c2 = build_example("group:C2")
    fam = build_ore_extension(c2, named_sigma(c2, "id"), 2)
    with pytest.raises(FamilyError):
        replay_smash_derivations(fam)


def test_polynomial_hopf_algebra():
    fam = build_ore_extension(field_whs(), Matrix.identity(QQ, 1), 3)
    assert fam.chi == [1]
    assert check_family(fam).passed


def test_ore_over_c2_t_is_primitive():
    c2 = build_example("group:C2")
    fam = build_ore_extension(c2, named_sigma(c2, "id"), 3)
    assert fam.chi == c2.counit.rows[0]
    rep = check_primitive_t(fam)
    assert rep.passed
    assert set(rep.checked) == {"t-coproduct", "t-counit", "t-antipode"}
    assert check_family(fam).passed


def test_ore_over_kk_has_no_character():
    # chi(e_i) e_i = e_i forces chi = (1, 1), which is not unital on 1 = e_1 + e_2
    kk = build_example("kk")
    with pytest.raises(NoWindingCharacter):
        build_ore_extension(kk, named_sigma(kk, "id"), 2)


def test_no_winding_character_for_inner_automorphism():
    # conjugation by a transposition permutes group elements, never scales them
    w = build_example("group:S3")
    elems, mult = group_by_name("S3")
    one = elems[0]
    for s in elems:
        inv = next(x for x in elems if mult(s, x) == one)
        perm = [elems.index(mult(mult(s, g), inv)) for g in elems]
        if perm != list(range(6)):
            break
    sigma = Matrix.from_columns(QQ, [[1 if r == perm[c] else 0 for r in range(6)] for c in range(6)], 6)
    with pytest.raises(NoWindingCharacter):
        winding_character(w, sigma)


def test_sigma_must_be_algebra_automorphism():
    c2 = build_example("group:C2")
    with pytest.raises(SigmaNotAlgebraAutomorphism):
        build_smash_laurent(c2, Matrix(QQ, [[1, 0], [0, 2]]), 2)


def test_sigma_must_respect_comultiplication():
    # on QC2 the algebra automorphism g -> -g does not preserve Delta
    c2 = build_example("group:C2")
    with pytest.raises(SigmaNotWeakHopfAutomorphism):
        build_smash_laurent(c2, Matrix(QQ, [[1, 0], [0, -1]]), 2)


def test_degree_bound_must_be_positive():
    with pytest.raises(FamilyError):
        build_smash_laurent(field_whs(), Matrix.identity(QQ, 1), 0)
