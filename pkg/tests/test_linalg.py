from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from weakhopf.linalg import (
    GF,
    QQ,
    FieldError,
    Matrix,
    Subspace,
    kernel_basis,
    kronecker,
    parse_field,
    rref,
    solve_linear,
)

F2 = GF(2)


def test_rref_identity():
    r, piv = rref(Matrix.identity(QQ, 3))
    assert r.is_identity() and piv == [0, 1, 2]


def test_rref_zero():
    r, piv = rref(Matrix.zeros(QQ, 2, 4))
    assert r.is_zero() and piv == []


def test_rref_hand_example():
    r, piv = rref(Matrix(QQ, [[1, 2], [2, 4]]))
    assert r == Matrix(QQ, [[1, 2], [0, 0]])
    assert piv == [0]


def test_kernel_of_identity_is_zero():
    assert kernel_basis(Matrix.identity(QQ, 4)).dim == 0


def test_kernel_of_zero_is_everything():
    assert kernel_basis(Matrix.zeros(QQ, 2, 5)).dim == 5


def test_kernel_over_f2():
    # of the four vectors in F2^2 exactly 0 and (1,1) satisfy x + y = 0
    k = kernel_basis(Matrix(F2, [[1, 1]]))
    assert k.dim == 1 and k.contains([1, 1]) and not k.contains([1, 0])


def test_solve_identity_returns_targets():
    T = Matrix(QQ, [[1, 2], [3, 4]])
    assert solve_linear(Matrix.identity(QQ, 2), T) == T


def test_solve_zero_system_has_no_solution():
    assert solve_linear(Matrix.zeros(QQ, 2, 2), Matrix(QQ, [[1], [0]])) is None


def test_solve_division():
    x = solve_linear(Matrix(QQ, [[2]]), Matrix(QQ, [[3]]))
    assert x[0, 0] == Fraction(3, 2)


def test_kronecker_identities():
    assert kronecker(Matrix.identity(QQ, 2), Matrix.identity(QQ, 3)).is_identity()
    assert kronecker(Matrix(QQ, [[2]]), Matrix(QQ, [[3]])) == Matrix(QQ, [[6]])


def test_kronecker_nilpotent_square():
    n = Matrix(QQ, [[0, 1], [0, 0]])
    k = kronecker(n, n)
    assert k.shape == (4, 4)
    assert [(i, j) for i in range(4) for j in range(4) if k[i, j]] == [(0, 3)]
    assert k[0, 3] == 1


def test_prime_field_arithmetic():
    F5 = GF(5)
    assert F5.reduce(7) == 2
    assert Matrix(F5, [[2]]).inverse() == Matrix(F5, [[3]])


def test_non_prime_modulus_rejected():
    with pytest.raises(FieldError):
        GF(4)


@pytest.mark.parametrize("text,field", [("Q", QQ), ("F2", F2), ("Fp 2", F2), ("GF(2)", F2)])
def test_parse_field(text, field):
    assert parse_field(text) == field


def test_subspace_operations():
    a = Subspace.span(QQ, 3, [[1, 0, 0], [0, 1, 0]])
    b = Subspace.span(QQ, 3, [[0, 1, 0], [0, 0, 1]])
    assert a.intersection(b).dim == 1
    assert (a + b).dim == 3
    assert a.coords([2, 3, 0]) == [2, 3]


# -- properties ---------------------------------------------------------------

small = st.integers(min_value=-3, max_value=3)


def matrices(field, max_rows=4, max_cols=4):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(st.lists(small, min_size=c, max_size=c), min_size=r, max_size=r).map(
                lambda rows: Matrix(field, rows, c))))


@settings(max_examples=60, deadline=None)
@given(matrices(QQ))
def test_rank_nullity_rational(m):
    assert m.rank() + kernel_basis(m).dim == m.ncols


@settings(max_examples=60, deadline=None)
@given(matrices(GF(3)))
def test_rank_nullity_f3(m):
    k = kernel_basis(m)
    assert m.rank() + k.dim == m.ncols
    assert all(not any(m.apply(v)) for v in k.basis)


@settings(max_examples=60, deadline=None)
@given(matrices(QQ), st.lists(small, min_size=4, max_size=4))
def test_solve_recovers_consistent_rhs(m, x):
    x = x[: m.ncols]
    b = Matrix(QQ, [[v] for v in m.apply(x)], 1)
    sol = solve_linear(m, b)
    assert sol is not None
    assert m @ sol == b


@settings(max_examples=40, deadline=None)
@given(matrices(GF(5), 3, 3))
def test_inverse_when_invertible(m):
    if m.nrows == m.ncols and m.is_invertible():
        assert (m @ m.inverse()).is_identity()
