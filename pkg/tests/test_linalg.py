import random
from fractions import Fraction
from itertools import combinations

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from glhwv.linalg import (
    PolyMatrix,
    SparseEchelon,
    bareiss_echelon,
    matmul,
    minor_deleted,
    poly_determinant,
    principal_minor_sums,
    rational_determinant,
    rational_nullspace,
    rational_rank,
    sparse_nullspace,
    submatrix,
    transpose,
)
from glhwv.ring import RingContext

from helpers import polynomials, rational_matrices, sympy_matrix, to_sympy

R2 = RingContext(2)
R3 = RingContext(3)
R4 = RingContext(4)


def X(ctx):
    return ctx.variable_matrix()


def test_small_determinants():
    f = R2.xi(1, 2) + 3
    assert poly_determinant(PolyMatrix([[f]])) == f
    assert poly_determinant(X(R2)) == R2.xi(1, 1) * R2.xi(2, 2) - R2.xi(1, 2) * R2.xi(2, 1)


def test_determinant_of_generic_matrix_matches_sympy():
    for n in (3, 4):
        ctx = RingContext(n)
        ours = to_sympy(poly_determinant(X(ctx)))
        theirs = sympy.Matrix([[sympy.Symbol(f"x{i}{j}") for j in range(1, n + 1)] for i in range(1, n + 1)]).det()
        assert ours == sympy.expand(theirs)


@given(st.lists(polynomials(n=2, max_terms=2, max_exp=1), min_size=9, max_size=9))
def test_determinant_with_polynomial_entries_matches_sympy(entries):
    M = PolyMatrix([entries[0:3], entries[3:6], entries[6:9]])
    expected = sympy.Matrix(3, 3, [to_sympy(e) for e in entries]).det()
    assert to_sympy(poly_determinant(M)) == sympy.expand(expected)


def test_submatrix_examples():
    M = X(R4)
    S = submatrix(M, {3, 4}, {1, 2})
    assert S.rows == [[R4.xi(3, 1), R4.xi(3, 2)], [R4.xi(4, 1), R4.xi(4, 2)]]
    assert submatrix(M, [1], [1]).rows == [[R4.xi(1, 1)]]
    D = minor_deleted(X(R3), 1, 3)
    assert D.shape == (2, 2)
    assert D.rows == [[R3.xi(2, 1), R3.xi(2, 2)], [R3.xi(3, 1), R3.xi(3, 2)]]


def test_submatrix_errors():
    with pytest.raises(IndexError):
        submatrix(X(R3), [4], [1])
    with pytest.raises(ValueError):
        submatrix(X(R3), [], [1])
    with pytest.raises(ValueError):
        poly_determinant(submatrix(X(R3), [1, 2], [1]))


def _laplace_sign(rows, cols, i, j):
    return (-1) ** (sorted(rows).index(i) + sorted(cols).index(j))


def test_derivative_of_minor_is_signed_complementary_minor():
    """d/dxi_ij det X_{A,B} = +-det X_{A-i, B-j}, zero if (i, j) is outside A x B."""
    rng = random.Random(20240601)
    M = X(R4)
    subsets = list(combinations(range(1, 5), 3))
    checked = 0
    while checked < 50:
        A, B = rng.choice(subsets), rng.choice(subsets)
        i, j = rng.randint(1, 4), rng.randint(1, 4)
        lhs = poly_determinant(submatrix(M, A, B)).diff(i, j)
        if i in A and j in B:
            rest = poly_determinant(submatrix(M, [a for a in A if a != i], [b for b in B if b != j]))
            assert lhs == _laplace_sign(A, B, i, j) * rest
            assert lhs == rest or lhs == -rest
        else:
            assert lhs.is_zero()
        checked += 1


def test_principal_minor_sums_small():
    s1, s2 = principal_minor_sums(X(R2))
    assert s1 == R2.xi(1, 1) + R2.xi(2, 2)
    assert s2 == poly_determinant(X(R2))


# -- rational matrices -----------------------------------------------------


def test_rank_and_nullspace_examples():
    I3 = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    assert rational_rank(I3) == 3
    assert rational_nullspace(I3) == []
    M = [[1, 2], [2, 4]]
    assert rational_rank(M) == 1
    (v,) = rational_nullspace(M)
    assert v[0] * -1 == 2 * v[1]  # proportional to (2, -1)


@given(rational_matrices())
def test_rank_matches_sympy(M):
    assert rational_rank(M) == sympy_matrix(M).rank()


@given(rational_matrices())
def test_rank_of_transpose(M):
    assert rational_rank(M) == rational_rank(transpose(M))


@given(rational_matrices())
def test_nullspace_is_kernel_of_full_dimension(M):
    basis = rational_nullspace(M)
    ncols = len(M[0])
    assert len(basis) == ncols - rational_rank(M)
    for v in basis:
        assert all(sum(Fraction(a) * b for a, b in zip(row, v)) == 0 for row in M)
    if basis:
        assert rational_rank(basis) == len(basis)


@given(st.integers(1, 4).flatmap(lambda k: st.tuples(rational_matrices(k, k), rational_matrices(k, k))))
def test_determinant_is_multiplicative(pair):
    A, B = pair
    assert rational_determinant(matmul(A, B)) == rational_determinant(A) * rational_determinant(B)


@given(st.integers(1, 4).flatmap(lambda k: rational_matrices(k, k)))
def test_determinant_matches_sympy(A):
    d = sympy_matrix(A).det()
    assert rational_determinant(A) == Fraction(int(d.p), int(d.q))


def test_bareiss_pivots():
    rows, pivots = bareiss_echelon([[0, 2, 4], [0, 1, 2], [1, 0, 0]])
    assert pivots == [0, 1]
    assert len(rows) == 2


# -- sparse rows ------------------------------------------------------------


@given(st.lists(st.dictionaries(st.integers(0, 6), st.integers(-3, 3), max_size=4), max_size=6))
def test_sparse_echelon_rank_agrees_with_dense(rows):
    ech = SparseEchelon()
    for r in rows:
        ech.add(r)
    dense = [[r.get(k, 0) for k in range(7)] for r in rows]
    assert ech.rank == (rational_rank(dense) if dense else 0)
    for r in rows:
        assert ech.contains(r)


@given(st.lists(st.dictionaries(st.integers(0, 5), st.integers(-3, 3), max_size=4), max_size=6))
def test_sparse_echelon_mod_p_agrees_with_sympy(rows):
    p = 3
    ech = SparseEchelon(p)
    for r in rows:
        ech.add(r)
    if not rows:
        assert ech.rank == 0
        return
    dense = sympy.Matrix([[r.get(k, 0) for k in range(6)] for r in rows])
    from sympy.polys.matrices import DomainMatrix
    from sympy import GF

    expected = DomainMatrix.from_Matrix(dense).convert_to(GF(p)).rank()
    assert ech.rank == expected


@given(st.dictionaries(st.integers(0, 5), st.dictionaries(st.integers(0, 4), st.integers(-3, 3), max_size=3), max_size=5))
def test_sparse_nullspace(columns):
    basis = sparse_nullspace(columns)
    unknowns = sorted(columns)
    rowkeys = sorted({k for col in columns.values() for k in col})
    dense = [[columns[u].get(r, 0) for u in unknowns] for r in rowkeys]
    expected_dim = len(unknowns) - (rational_rank(dense) if rowkeys and unknowns else 0)
    assert len(basis) == expected_dim
    for vec in basis:
        for r in rowkeys:
            assert sum(columns[u].get(r, 0) * c for u, c in vec.items()) == 0


def test_floor_keeps_tags_out_of_pivots():
    ech = SparseEchelon()
    assert ech.add({5: 1, -1: 1}, floor=0)
    # dependent on the first row apart from its tag: must not be stored
    assert not ech.add({5: 2, -2: 1}, floor=0)
    assert ech.rank == 1
