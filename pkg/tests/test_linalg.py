from fractions import Fraction
from itertools import combinations, product

import pytest
from hypothesis import given, settings, strategies as st

from dorroh.fields import GF, Q, FieldError, field_from_spec, is_prime
from dorroh.linalg import (
    BudgetExceeded,
    DimensionError,
    Matrix,
    Quotient,
    Subspace,
    count_subspaces,
    enumerate_subspaces,
    solve_linear,
    subspace_ops,
    tensor,
)


def matvec(a, x):
    """Plain triple-loop product used as the independent oracle."""
    F = a.field
    return tuple(F.reduce(sum(a[i, j] * x[j] for j in range(a.ncols))) for i in range(a.nrows))


# -- scalars ---------------------------------------------------------------

def test_rationals_lowest_terms():
    assert Q("6/-4") == Fraction(-3, 2)
    assert Q.parse("-3/2") == Fraction(-3, 2)


def test_residues_reduce():
    F = GF(3)
    assert F(-1) == 2
    assert F.parse("1/2") == 2  # 2 * 2 = 4 = 1 mod 3


def test_gf2_rejects_zero_denominator():
    F = GF(2)
    assert F.parse("1/1") == 1
    with pytest.raises(FieldError):
        F.parse("1/0")
    with pytest.raises(FieldError):
        F.parse("1/2")


def test_nonprime_modulus_rejected():
    assert not is_prime(9)
    with pytest.raises(FieldError):
        GF(9)


def test_field_spec_text():
    assert field_from_spec("GF 5") == GF(5)
    assert field_from_spec("Q") == Q


# -- solving ---------------------------------------------------------------

def test_solve_identity():
    x, ker = solve_linear(Matrix.identity(Q, 2), (3, 5))
    assert x == (3, 5)
    assert ker.dim == 0


def test_solve_gf2_symmetric():
    F = GF(2)
    x, ker = solve_linear(Matrix(F, [[1, 1]]), (0,))
    assert x == (0, 0)
    assert ker == Subspace(F, 2, [(1, 1)])


def test_solve_rational_with_kernel():
    A = Matrix(Q, [[2, 4], [1, 2]])
    x, ker = solve_linear(A, (2, 1))
    assert x == (1, 0)
    assert matvec(A, x) == (2, 1)
    for v in ker.basis:
        assert matvec(A, v) == (0, 0)
    assert ker == Subspace(Q, 2, [(1, Fraction(-1, 2))])


def test_solve_inconsistent():
    x, _ = solve_linear(Matrix(Q, [[1, 1], [1, 1]]), (0, 1))
    assert x is None


def test_solve_dimension_mismatch():
    with pytest.raises(DimensionError):
        solve_linear(Matrix(Q, [[1, 0]]), (1, 2))


# -- subspaces -------------------------------------------------------------

def test_subspace_ops_equal():
    U = Subspace(Q, 2, [(1, 2)])
    ops = subspace_ops(U, U)
    assert ops.sum == U and ops.intersection == U and ops.quotient_basis == ()


def test_subspace_ops_coordinate_lines():
    U, V = Subspace(Q, 2, [(1, 0)]), Subspace(Q, 2, [(0, 1)])
    ops = subspace_ops(U, V)
    assert ops.sum == Subspace.full(Q, 2)
    assert ops.intersection.dim == 0


def test_subspace_ops_dimension_formula():
    U = Subspace(Q, 3, [(1, 1, 0), (0, 0, 1)])
    V = Subspace(Q, 3, [(0, 1, 0), (0, 0, 1)])
    ops = subspace_ops(U, V)
    assert ops.intersection == Subspace(Q, 3, [(0, 0, 1)])
    assert U.dim + V.dim == ops.sum.dim + ops.intersection.dim == 4
    assert len(ops.quotient_basis) == 1


def test_ambient_mismatch():
    with pytest.raises(ValueError):
        Subspace(Q, 2, [(1, 0)]) + Subspace(Q, 3, [(1, 0, 0)])


def test_quotient_coords_and_lift():
    top = Subspace(Q, 3, [(1, 0, 0), (0, 1, 0)])
    bottom = Subspace(Q, 3, [(1, 1, 0)])
    q = Quotient(top, bottom)
    assert q.dim == 1
    for v in top.basis:
        diff = tuple(a - b for a, b in zip(v, q.lift(q.coords(v))))
        assert diff in bottom


# -- tensor products ----------------------------------------------------------

def test_kron_identities():
    assert tensor(Matrix.identity(Q, 2), Matrix.identity(Q, 2)) == Matrix.identity(Q, 4)
    assert tensor(Matrix(Q, [[2]]), Matrix(Q, [[0, 1], [1, 0]])) == Matrix(Q, [[0, 2], [2, 0]])


def test_kron_index_convention():
    A = Matrix(Q, [[1, 2], [3, 4]])
    B = Matrix(Q, [[5, 6, 7]])
    K = A.kron(B)
    for i, j, k, l in product(range(2), range(2), range(1), range(3)):
        assert K[i * 1 + k, j * 3 + l] == A[i, j] * B[k, l]


def test_kron_acts_factorwise_gf3_exhaustive():
    F = GF(3)
    A = Matrix(F, [[1, 2], [0, 1]])
    B = Matrix(F, [[2, 2], [1, 0]])
    for x in F.vectors(2):
        for y in F.vectors(2):
            xy = tuple(F.reduce(a * b) for a in x for b in y)
            Ax, By = matvec(A, x), matvec(B, y)
            assert matvec(A.kron(B), xy) == tuple(F.reduce(a * b) for a in Ax for b in By)


# -- enumeration -------------------------------------------------------------

def brute_subspaces(F, n):
    """Every span of every set of vectors: slow but independent of the RREF walk."""
    vecs = list(F.vectors(n))
    seen = set()
    for k in range(n + 1):
        for combo in combinations(vecs, k):
            seen.add(Subspace(F, n, combo))
    return seen


@pytest.mark.parametrize("n,expected", [(1, 2), (2, 5), (3, 16)])
def test_enumeration_counts_gf2(n, expected):
    F = GF(2)
    subs = list(enumerate_subspaces(n, F))
    assert len(subs) == expected == count_subspaces(n, 2)
    assert len(set(subs)) == expected
    assert set(subs) == brute_subspaces(F, n)


def test_enumeration_counts_gf2_dim4():
    subs = list(enumerate_subspaces(4, GF(2)))
    assert len(subs) == len(set(subs)) == count_subspaces(4, 2) == 1 + 15 + 35 + 15 + 1


def test_enumeration_gf3_dim2_matches_brute():
    F = GF(3)
    assert set(enumerate_subspaces(2, F)) == brute_subspaces(F, 2)
    assert count_subspaces(2, 3) == 6


def test_enumeration_budget_refusal_reports_count():
    with pytest.raises(BudgetExceeded) as e:
        list(enumerate_subspaces(4, GF(3)))
    assert e.value.count == count_subspaces(4, 3)


def test_enumeration_refuses_rationals():
    with pytest.raises(BudgetExceeded):
        enumerate_subspaces(1, Q)


# -- properties ----------------------------------------------------------------

small = st.integers(min_value=-3, max_value=3)


@st.composite
def rational_matrices(draw, max_rows=4, max_cols=4):
    r = draw(st.integers(1, max_rows))
    c = draw(st.integers(1, max_cols))
    return Matrix(Q, [[draw(small) for _ in range(c)] for _ in range(r)], c)


@settings(max_examples=150, deadline=None)
@given(rational_matrices())
def test_rref_idempotent_and_row_space_preserved(M):
    R, _ = M.rref()
    assert R.rref()[0] == R
    rowspace = Subspace(Q, M.ncols, M.rows)
    assert all(r in rowspace for r in M.rows)
    assert Subspace(Q, M.ncols, R.rows) == rowspace


@settings(max_examples=150, deadline=None)
@given(rational_matrices())
def test_rank_nullity(M):
    ker = M.nullspace()
    assert M.rank() + ker.dim == M.ncols
    for v in ker.basis:
        assert matvec(M, v) == (0,) * M.nrows


@settings(max_examples=100, deadline=None)
@given(rational_matrices(2, 2), rational_matrices(2, 2), rational_matrices(2, 2))
def test_kron_associative(A, B, C):
    assert A.kron(B).kron(C) == A.kron(B.kron(C))


@settings(max_examples=100, deadline=None)
@given(rational_matrices(3, 3), rational_matrices(3, 3))
def test_subspace_dimension_formula(A, B):
    n = 3
    U = Subspace(Q, n, [r + (0,) * (n - len(r)) for r in A.rows])
    V = Subspace(Q, n, [r + (0,) * (n - len(r)) for r in B.rows])
    assert U.dim + V.dim == (U + V).dim + (U & V).dim
    assert (U & V) <= U and U <= U + V


@settings(max_examples=100, deadline=None)
@given(st.lists(st.tuples(small, small, small), max_size=3), st.lists(st.tuples(small, small, small), max_size=3))
def test_canonical_form_is_basis_independent(vs, ws):
    U = Subspace(Q, 3, vs)
    shuffled = list(reversed(vs)) + [tuple(a + b for a, b in zip(v, vs[0])) for v in vs[1:]]
    assert Subspace(Q, 3, shuffled) == U
    assert (U + Subspace(Q, 3, ws)) == Subspace(Q, 3, vs + ws)
