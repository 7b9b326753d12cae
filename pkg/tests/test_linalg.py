from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from qsheets import linalg
from qsheets.cyclo import zeta

small = st.integers(min_value=-3, max_value=3)


def matrices(rows, cols):
    return st.lists(st.lists(small, min_size=cols, max_size=cols), min_size=rows, max_size=rows)


@given(st.integers(1, 5).flatmap(lambda r: st.integers(1, 5).flatmap(lambda c: matrices(r, c))))
def test_rank_and_nullspace_against_sympy(rows):
    A = linalg.as_matrix(rows)
    assert linalg.rank(A) == sympy.Matrix(rows).rank()
    for x in linalg.nullspace(A):
        assert all(v == 0 for v in linalg.matmul(A, linalg.as_matrix([[v] for v in x])).flat)
    assert len(linalg.nullspace(A)) == A.shape[1] - linalg.rank(A)


@given(matrices(3, 3))
def test_inverse_or_singular(rows):
    A = linalg.as_matrix(rows)
    if sympy.Matrix(rows).det() == 0:
        with pytest.raises(ZeroDivisionError):
            linalg.inverse(A)
    else:
        assert linalg.mat_equal(linalg.matmul(A, linalg.inverse(A)), linalg.identity(3))


def test_solve_over_cyclotomic_field():
    z = zeta(5)
    A = linalg.as_matrix([[1, z], [z, 2]])
    b = [z ** 2, Fraction(1, 3)]
    x = linalg.solve(A, b)
    got = linalg.matmul(A, linalg.as_matrix([[v] for v in x]))
    assert [got[0, 0], got[1, 0]] == b
    with pytest.raises(ArithmeticError):
        linalg.solve(linalg.as_matrix([[1, 1], [1, 1]]), [0, 1])


def test_kron_and_block_diag():
    A = linalg.as_matrix([[1, 2], [3, 4]])
    B = linalg.identity(2)
    K = linalg.kron(A, B)
    assert K.shape == (4, 4) and K[2, 0] == 3 and K[2, 2] == 4 and K[0, 1] == 0
    D = linalg.block_diag(A, linalg.as_matrix([[5]]))
    assert D.shape == (3, 3) and D[2, 2] == 5 and D[0, 2] == 0
    assert linalg.mat_equal(linalg.matpow(A, 3), linalg.matmul(A, linalg.matmul(A, A)))
