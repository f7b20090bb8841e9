"""Strategies and oracle conversions shared by the test modules."""

from fractions import Fraction

import sympy
from hypothesis import strategies as st

from glhwv.ring import Polynomial, RingContext


def sym_vars(n):
    return [[sympy.Symbol(f"x{i}{j}") for j in range(1, n + 1)] for i in range(1, n + 1)]


def to_sympy(f: Polynomial, params=()):
    """Independent expansion of f as a sympy expression."""
    ctx = f.ctx
    X = sym_vars(ctx.n)
    flat = [X[i][j] for i in range(ctx.n) for j in range(ctx.n)] + [sympy.Symbol(p) for p in ctx.parameters]
    expr = sympy.Integer(0)
    for exps, c in f.terms():
        term = sympy.Rational(c.numerator, c.denominator) if isinstance(c, Fraction) else sympy.Integer(c)
        for v, e in zip(flat, exps):
            if e:
                term *= v**e
        expr += term
    return sympy.expand(expr)


coefficients = st.one_of(
    st.integers(-6, 6),
    st.builds(Fraction, st.integers(-6, 6), st.integers(1, 5)),
)


@st.composite
def polynomials(draw, n=2, max_terms=4, max_exp=2, characteristic=0):
    ctx = RingContext(n, characteristic)
    nv = n * n
    k = draw(st.integers(0, max_terms))
    terms = []
    for _ in range(k):
        exps = draw(st.lists(st.integers(0, max_exp), min_size=nv, max_size=nv))
        c = draw(st.integers(-6, 6)) if characteristic else draw(coefficients)
        terms.append((tuple(exps), c))
    return Polynomial.from_terms(ctx, terms)


@st.composite
def rational_matrices(draw, rows=None, cols=None, lo=-4, hi=4):
    r = draw(st.integers(1, 4)) if rows is None else rows
    c = draw(st.integers(1, 4)) if cols is None else cols
    entries = st.one_of(st.integers(lo, hi), st.builds(Fraction, st.integers(lo, hi), st.integers(1, 3)))
    return [[draw(entries) for _ in range(c)] for _ in range(r)]


def sympy_matrix(M):
    return sympy.Matrix([[sympy.Rational(Fraction(x).numerator, Fraction(x).denominator) for x in row] for row in M])
