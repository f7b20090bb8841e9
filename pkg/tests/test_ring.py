from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from glhwv.invariants import fundamental_invariants
from glhwv.ring import (
    ContextMismatch,
    NotWeightHomogeneous,
    Polynomial,
    RingContext,
    evaluate,
    format_polynomial,
    parse_polynomial,
    substitute_matrix,
    torus_weight,
)

from helpers import coefficients, polynomials, sym_vars, to_sympy

R2 = RingContext(2)
R3 = RingContext(3)


def x(i, j, ctx=R2):
    return ctx.xi(i, j)


# -- examples ---------------------------------------------------------------


def test_cancellation():
    assert (x(1, 1) + x(2, 2)) + (-x(2, 2)) == x(1, 1)


def test_product_of_variables():
    f = x(1, 2) * x(2, 1)
    assert list(f.terms()) == [((0, 1, 1, 0), 1)]


def test_empty_power_is_one():
    det = x(1, 1) * x(2, 2) - x(1, 2) * x(2, 1)
    assert det**0 == R2.one()


def test_partial_derivative_examples():
    det = x(1, 1) * x(2, 2) - x(1, 2) * x(2, 1)
    assert det.diff(1, 2) == -x(2, 1)
    assert x(2, 2).diff(1, 1).is_zero()
    assert (x(1, 1) ** 2).diff(1, 1) == 2 * x(1, 1)


def test_substitute_matrix_examples():
    identity = [[R2.constant(1), R2.zero()], [R2.zero(), R2.constant(1)]]
    assert substitute_matrix(x(1, 2), identity).is_zero()

    P = R2.with_parameters("c")
    c = P.param("c")
    M = [[P.xi(1, 1) + c * P.xi(2, 1), P.xi(1, 2)], [P.xi(2, 1), P.xi(2, 2)]]
    assert substitute_matrix(P.embed(x(1, 1)), M) == P.xi(1, 1) + c * P.xi(2, 1)


def test_trace_is_conjugation_invariant_symbolically():
    P = R2.with_parameters("c")
    c = P.param("c")
    X = [[P.xi(i, j) for j in (1, 2)] for i in (1, 2)]
    # (I - cE12) X (I + cE12)
    Y = [
        [X[0][0] - c * X[1][0], X[0][1] + c * X[0][0] - c * X[1][1] - c * c * X[1][0]],
        [X[1][0], X[1][1] + c * X[1][0]],
    ]
    s1 = fundamental_invariants(R2)[0]
    assert substitute_matrix(P.embed(s1), Y) == P.embed(s1)


def test_evaluate_examples():
    s1_2, s2_2 = fundamental_invariants(R2)
    assert evaluate(s2_2, [[0, 1], [0, 0]]) == 0
    assert evaluate(x(2, 1), [[0, 0], [1, 0]]) == 1
    s1_3 = fundamental_invariants(R3)[0]
    assert evaluate(s1_3, [[1, 0, 0], [0, 2, 0], [0, 0, 3]]) == 6


def test_torus_weight_examples():
    assert torus_weight(x(2, 1)) == (1, -1)
    assert torus_weight(fundamental_invariants(R2)[0]) == (0, 0)
    with pytest.raises(NotWeightHomogeneous):
        torus_weight(x(1, 2) + x(2, 1))


def test_torus_weight_rejects_parameters():
    P = R2.with_parameters("c")
    with pytest.raises(ValueError):
        torus_weight(P.param("c") * P.xi(1, 2))


def test_mixing_contexts_is_an_error():
    with pytest.raises(ContextMismatch):
        x(1, 1) + R3.xi(1, 1)
    with pytest.raises(ContextMismatch):
        x(1, 1) * RingContext(2, 5).xi(1, 1)


def test_context_validation():
    with pytest.raises(ValueError):
        RingContext(1)
    with pytest.raises(ValueError):
        RingContext(3, 4)
    with pytest.raises(IndexError):
        R2.xi(3, 1)


def test_prime_field_arithmetic():
    F = RingContext(2, 3)
    f = F.xi(1, 1) + F.xi(2, 2)
    assert (f**3) == F.xi(1, 1) ** 3 + F.xi(2, 2) ** 3  # freshman's dream in char 3
    assert (3 * F.xi(1, 2)).is_zero()
    assert F.xi(1, 1) / 2 == F.xi(1, 1) * 2


def test_text_format():
    f = Fraction(-3, 2) * R3.xi(1, 2) ** 2 * R3.xi(3, 1) + 5
    assert format_polynomial(f) == "-3/2 * x[1][2]^2 * x[3][1] + 5"
    assert format_polynomial(R3.zero()) == "0"
    assert parse_polynomial(R3, "x[1][2] - x[2][1]^2") == R3.xi(1, 2) - R3.xi(2, 1) ** 2


def test_parse_rejects_garbage():
    with pytest.raises(ValueError):
        parse_polynomial(R2, "x[1][2] +* 3")
    with pytest.raises(ValueError):
        parse_polynomial(R2, "")


def test_lex_order_of_terms():
    f = x(2, 2) + x(1, 1) + x(1, 2) * x(2, 1)
    keys = [e for e, _ in f.terms()]
    assert keys == sorted(keys, reverse=True)


# -- oracle comparisons -------------------------------------------------------


@given(polynomials(), polynomials())
def test_sum_and_product_match_sympy(f, g):
    assert to_sympy(f + g) == sympy.expand(to_sympy(f) + to_sympy(g))
    assert to_sympy(f - g) == sympy.expand(to_sympy(f) - to_sympy(g))
    assert to_sympy(f * g) == sympy.expand(to_sympy(f) * to_sympy(g))


@given(polynomials(max_terms=3), st.integers(0, 3))
def test_power_matches_sympy(f, e):
    assert to_sympy(f**e) == sympy.expand(to_sympy(f) ** e)


@given(polynomials(n=3), st.integers(1, 3), st.integers(1, 3))
def test_derivative_matches_sympy(f, i, j):
    X = sym_vars(3)
    assert to_sympy(f.diff(i, j)) == sympy.expand(sympy.diff(to_sympy(f), X[i - 1][j - 1]))


@given(polynomials(), st.lists(st.lists(coefficients, min_size=2, max_size=2), min_size=2, max_size=2))
def test_evaluation_matches_sympy(f, A):
    X = sym_vars(2)
    subs = {X[i][j]: sympy.Rational(Fraction(A[i][j]).numerator, Fraction(A[i][j]).denominator) for i in range(2) for j in range(2)}
    expected = to_sympy(f).subs(subs)
    assert sympy.Rational(Fraction(evaluate(f, A)).numerator, Fraction(evaluate(f, A)).denominator) == expected


@given(polynomials(characteristic=5), polynomials(characteristic=5))
def test_prime_field_product_matches_sympy(f, g):
    X = sym_vars(2)
    gens = [v for row in X for v in row]
    lhs = sympy.Poly(to_sympy(f * g), *gens, modulus=5)
    rhs = sympy.Poly(to_sympy(f) * to_sympy(g), *gens, modulus=5)
    assert lhs == rhs


# -- algebraic properties -------------------------------------------------------


@given(polynomials(), polynomials())
def test_canonical_form(f, g):
    assert (f + g) - g == f
    assert f * g == g * f
    assert hash(f * g) == hash(g * f)


@given(polynomials(n=2, max_terms=3), polynomials(n=2, max_terms=3), st.integers(1, 2), st.integers(1, 2))
def test_leibniz_rule(f, g, i, j):
    assert (f * g).diff(i, j) == f.diff(i, j) * g + f * g.diff(i, j)


@given(st.lists(st.tuples(st.integers(1, 3), st.integers(1, 3)), min_size=1, max_size=4),
       st.lists(st.tuples(st.integers(1, 3), st.integers(1, 3)), min_size=1, max_size=4),
       st.integers(1, 5), st.integers(-5, -1))
def test_weight_is_additive(pairs_f, pairs_g, a, b):
    f = R3.one()
    for i, j in pairs_f:
        f = f * R3.xi(i, j)
    g = R3.one()
    for i, j in pairs_g:
        g = g * R3.xi(i, j)
    f, g = a * f, b * g
    wf, wg = torus_weight(f), torus_weight(g)
    assert torus_weight(f * g) == tuple(p + q for p, q in zip(wf, wg))


@given(polynomials(max_terms=3), st.lists(st.integers(-3, 3), min_size=8, max_size=8), st.lists(st.integers(-3, 3), min_size=4, max_size=4))
def test_evaluate_after_substitution(f, lin, point):
    # M[i][j] is an affine polynomial; evaluating f(M) at A equals f evaluated at M(A)
    M = []
    k = 0
    for i in range(1, 3):
        row = []
        for j in range(1, 3):
            row.append(lin[k] * R2.xi(j, i) + lin[k + 1])
            k += 2
        M.append(row)
    A = [point[:2], point[2:]]
    MA = [[evaluate(M[i][j], A) for j in range(2)] for i in range(2)]
    assert evaluate(substitute_matrix(f, M), A) == evaluate(f, MA)


@given(polynomials(n=3, max_terms=5, max_exp=3))
def test_text_round_trip(f):
    assert parse_polynomial(R3, format_polynomial(f)) == f


@given(polynomials(n=2, max_terms=4))
def test_homogeneous_components_sum_back(f):
    parts = f.homogeneous_components()
    total = R2.zero()
    for d, g in parts.items():
        assert g.is_homogeneous() and g.degree() == d
        total = total + g
    assert total == f


def test_overflow_guard():
    big = R2.xi(1, 1) ** 40000
    with pytest.raises(OverflowError):
        big * big


def test_parameters_are_separate_variables():
    P = R3.with_parameters("c", "d")
    c, d = P.param("c"), P.param("d")
    f = c * P.xi(1, 2) + d
    assert f.uses_parameters()
    assert not P.embed(R3.xi(1, 2)).uses_parameters()
    assert evaluate(f, [[0, 1, 0], [0, 0, 0], [0, 0, 0]], {"c": 2, "d": Fraction(1, 3)}) == Fraction(7, 3)
    assert isinstance(f, Polynomial)
