import pytest
from hypothesis import given, strategies as st
from sympy import Matrix, ZZ
from sympy.matrices.normalforms import invariant_factors

from fppverify.snf import (cokernel, determinant, integer_kernel, matmul, matvec, smith_normal_form,
                           solve_in_lattice, unimodular_inverse)

small = st.integers(-12, 12)


def matrices(max_rows=4, max_cols=4):
    return st.integers(1, max_rows).flatmap(
        lambda m: st.integers(1, max_cols).flatmap(
            lambda n: st.lists(st.lists(small, min_size=n, max_size=n), min_size=m, max_size=m)))


def sympy_factors(M):
    return [int(abs(d)) for d in invariant_factors(Matrix(M), domain=ZZ) if d != 0]


@given(matrices())
def test_snf_transforms_and_shape(M):
    snf = smith_normal_form(M)
    assert matmul(matmul(snf.U, M), snf.V) == snf.S
    assert abs(determinant(snf.U)) == 1 and abs(determinant(snf.V)) == 1
    d = snf.diagonal
    nz = [x for x in d if x]
    assert all(x > 0 for x in nz)
    assert all(b % a == 0 for a, b in zip(nz, nz[1:]))
    assert d[:len(nz)] == nz
    for i, row in enumerate(snf.S):
        assert all(v == 0 for j, v in enumerate(row) if j != i)


@given(matrices())
def test_snf_matches_sympy(M):
    assert [x for x in smith_normal_form(M).diagonal if x] == sympy_factors(M)


@given(matrices())
def test_kernel_vectors_are_in_kernel(M):
    K = integer_kernel(M)
    n = len(M[0])
    assert len(K) == n - smith_normal_form(M).rank
    for v in K:
        assert matvec(M, v) == [0] * len(M)


@given(matrices(), st.lists(small, min_size=4, max_size=4))
def test_solve_in_lattice(M, x):
    x = x[:len(M[0])]
    b = matvec(M, x)
    y = solve_in_lattice(M, b)
    assert y is not None and matvec(M, y) == b


def test_solve_in_lattice_reports_no_solution():
    assert solve_in_lattice([[2, 0], [0, 4]], [1, 0]) is None


@given(matrices())
def test_cokernel_factors(M):
    m = len(M)
    coker = cokernel(M, m)
    rank = smith_normal_form(M).rank
    expected = [d for d in sympy_factors(M) if d != 1] + [0] * (m - rank)
    assert list(coker.factors) == expected


@given(matrices(), st.lists(small, min_size=4, max_size=4))
def test_cokernel_project_lift_roundtrip(M, x):
    m = len(M)
    coker = cokernel(M, m)
    x = (x * 2)[:m]
    y = coker.project(x)
    assert coker.project(coker.lift(y)) == y
    # columns of M vanish in the cokernel
    for j in range(len(M[0])):
        col = [M[i][j] for i in range(m)]
        assert coker.reduce(coker.project(col)) == [0] * len(coker.factors)


def test_cokernel_of_known_matrix():
    coker = cokernel([[2, 0], [0, 3], [0, 0]], 3)
    assert list(coker.factors) == [6, 0]


@given(st.integers(1, 4).flatmap(lambda n: st.lists(st.lists(small, min_size=n, max_size=n),
                                                       min_size=n, max_size=n)))
def test_determinant_matches_sympy(M):
    assert determinant(M) == Matrix(M).det()


def test_unimodular_inverse():
    U = [[2, 1], [1, 1]]
    assert matmul(U, unimodular_inverse(U)) == [[1, 0], [0, 1]]
    with pytest.raises(ValueError):
        unimodular_inverse([[2, 0], [0, 1]])
