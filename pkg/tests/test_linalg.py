from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from hyperinv.linalg import (
    RationalMatrix,
    Subspace,
    inclusion_exclusion_check,
    nullspace_basis,
    rank,
    rref,
    subspace_intersection,
    subspace_intersection_dim,
    subspace_sum_dim,
)

small_fractions = st.builds(Fraction, st.integers(-4, 4), st.integers(1, 3))


@st.composite
def matrices(draw, max_rows=6, max_cols=6, elements=small_fractions):
    m = draw(st.integers(0, max_rows))
    n = draw(st.integers(0, max_cols))
    rows = [[draw(elements) for _ in range(n)] for _ in range(m)]
    return RationalMatrix(rows, n)


def sympy_rref(A):
    M = sympy.Matrix(A.nrows, A.ncols, lambda i, j: sympy.Rational(A[i, j].numerator, A[i, j].denominator))
    R, pivots = M.rref()
    rows = [[Fraction(int(R[i, j].p), int(R[i, j].q)) for j in range(A.ncols)] for i in range(A.nrows)]
    return rows, list(pivots)


class TestRref:
    def test_identity(self):
        I = RationalMatrix.identity(4)
        R, rk, piv = rref(I)
        assert R == I and rk == 4 and piv == [0, 1, 2, 3]

    def test_zero_rows_last(self):
        A = RationalMatrix([[0, 0], [1, 2], [2, 4]])
        R, rk, piv = rref(A)
        assert R.rows == [[1, 2], [0, 0], [0, 0]]
        assert rk == 1 and piv == [0]

    def test_unknown_method(self):
        with pytest.raises(ValueError):
            rref(RationalMatrix.identity(2), "lu")

    @settings(max_examples=150, deadline=None)
    @given(matrices())
    def test_agrees_with_sympy(self, A):
        if A.nrows == 0 or A.ncols == 0:
            return
        rows, pivots = sympy_rref(A)
        R, rk, piv = rref(A)
        assert R.rows == rows and piv == pivots

    @settings(max_examples=150, deadline=None)
    @given(matrices(elements=st.builds(Fraction, st.integers(-9, 9), st.integers(1, 5))))
    def test_backends_agree(self, A):
        assert rref(A, "gauss") == rref(A, "bareiss")

    @settings(max_examples=60, deadline=None)
    @given(matrices())
    def test_idempotent(self, A):
        R = rref(A)[0]
        assert rref(R)[0] == R


class TestNullspace:
    def test_identity(self):
        assert nullspace_basis(RationalMatrix.identity(3)) == []

    def test_zero(self):
        Z = RationalMatrix.zeros(3, 3)
        assert nullspace_basis(Z) == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]

    def test_free_variable_is_one(self):
        A = RationalMatrix([[1, 1]])
        assert nullspace_basis(A) == [[-1, 1]]

    @settings(max_examples=100, deadline=None)
    @given(matrices())
    def test_rank_nullity_and_annihilation(self, A):
        kernel = nullspace_basis(A)
        assert rank(A) + len(kernel) == A.ncols
        for v in kernel:
            assert all(x == 0 for x in A @ v)
        if kernel:
            assert rank(RationalMatrix(kernel, A.ncols)) == len(kernel)


class TestMatrix:
    def test_matmul(self):
        A = RationalMatrix([[1, 2], [3, 4]])
        B = RationalMatrix([[0, 1], [1, 0]])
        assert (A @ B).rows == [[2, 1], [4, 3]]
        assert A @ [1, 1] == [3, 7]
        with pytest.raises(ValueError):
            A @ RationalMatrix([[1, 2, 3]])

    def test_ragged(self):
        with pytest.raises(ValueError):
            RationalMatrix([[1, 2], [3]])


def line(x, y):
    return Subspace.span(2, [[x, y]])


class TestSubspaces:
    def test_identical_lines(self):
        U = line(1, 2)
        assert subspace_sum_dim([U, U]) == 1
        assert subspace_intersection_dim([U, U]) == 1

    def test_three_lines_in_plane(self):
        U = [line(1, 0), line(0, 1), line(1, 1)]
        assert subspace_sum_dim(U) == 2
        for i in range(3):
            for j in range(i + 1, 3):
                assert subspace_intersection_dim([U[i], U[j]]) == 0
        ie = inclusion_exclusion_check(U)
        assert (ie.lhs, ie.rhs, ie.holds, ie.equality) == (2, 3, True, False)

    def test_coordinate_planes_direct_sum(self):
        e = [[int(i == j) for i in range(6)] for j in range(6)]
        U = [Subspace.span(6, e[0:2]), Subspace.span(6, e[2:4]), Subspace.span(6, e[4:6])]
        ie = inclusion_exclusion_check(U)
        assert ie.lhs == ie.rhs == 6

    def test_ambient_mismatch(self):
        with pytest.raises(ValueError):
            subspace_sum_dim([line(1, 0), Subspace.span(3, [[1, 0, 0]])])

    def test_too_many(self):
        with pytest.raises(ValueError):
            inclusion_exclusion_check([line(1, i) for i in range(7)])

    def test_canonical_basis(self):
        assert Subspace.span(3, [[1, 1, 0], [0, 1, 1]]) == Subspace.span(3, [[1, 2, 1], [1, 0, -1]])

    def test_intersection_vectors_lie_in_both(self):
        U = Subspace.span(4, [[1, 0, 0, 0], [0, 1, 1, 0]])
        V = Subspace.span(4, [[1, 1, 1, 0], [0, 0, 0, 1]])
        W = subspace_intersection([U, V])
        assert W.dim == 1
        assert U.contains(W) and V.contains(W)

    @settings(max_examples=60, deadline=None)
    @given(
        st.lists(st.lists(st.integers(-3, 3), min_size=4, max_size=4), min_size=2, max_size=2),
        st.lists(st.lists(st.integers(-3, 3), min_size=4, max_size=4), min_size=2, max_size=2),
    )
    def test_two_subspace_identity(self, a, b):
        U, V = Subspace.span(4, a), Subspace.span(4, b)
        assert subspace_sum_dim([U, V]) == U.dim + V.dim - subspace_intersection_dim([U, V])

    @settings(max_examples=40, deadline=None)
    @given(
        st.lists(
            st.lists(st.lists(st.integers(-2, 2), min_size=4, max_size=4), min_size=1, max_size=2),
            min_size=2,
            max_size=4,
        )
    )
    def test_inequality_always_holds(self, families):
        spaces = [Subspace.span(4, vecs) for vecs in families]
        assert inclusion_exclusion_check(spaces).holds
