"""Fundamental invariants s_1, ..., s_n of gl_n under conjugation."""

from __future__ import annotations

from functools import lru_cache

from .linalg import principal_minor_sums
from .ring import Polynomial, RingContext, substitute


@lru_cache(maxsize=32)
def fundamental_invariants(ctx: RingContext) -> tuple:
    """(s_1, ..., s_n) where s_i = tr(wedge^i X) is the sum of principal i-minors."""
    return tuple(principal_minor_sums(ctx.variable_matrix()))


def fundamental_invariant(ctx: RingContext, i: int) -> Polynomial:
    if not 1 <= i <= ctx.n:
        raise ValueError(f"s_{i} is undefined for n={ctx.n}")
    return fundamental_invariants(ctx)[i - 1]


def conjugation_images(f: Polynomial, param: str = "c") -> list:
    """f(g^-1 X g) for g = I + c E_{i,i+1} and g = I + c E_{i+1,i}, both signs of c.

    Returns ``[(label, image)]`` in a context carrying the parameter.
    """
    ctx = f.ctx
    target = ctx.with_parameters(param)
    c = target.param(param)
    out = []
    for a in range(1, ctx.n):
        for (r, s) in ((a, a + 1), (a + 1, a)):
            for sgn in (1, -1):
                out.append(((r, s, sgn), substitute(f, elementary_conjugation(ctx, r, s, c.scale(sgn)), target)))
    return out


def elementary_conjugation(ctx: RingContext, a: int, b: int, c: Polynomial) -> dict:
    """Variable substitution realising X -> g^-1 X g with g = I + c E_ab (a != b).

    Entry (r, s) becomes xi_rs + c d_{sb} xi_ra - c d_{ra} xi_bs - c^2 d_{ra} d_{sb} xi_ba.
    """
    if a == b:
        raise ValueError("elementary conjugation needs a != b")
    target = c.ctx
    n = ctx.n
    mapping = {}
    for r in range(1, n + 1):
        for s in range(1, n + 1):
            if s != b and r != a:
                continue
            img = target.xi(r, s)
            if s == b:
                img = img + c * target.xi(r, a)
            if r == a:
                img = img - c * target.xi(b, s)
            if r == a and s == b:
                img = img - c * c * target.xi(b, a)
            mapping[ctx.var_index(r, s)] = img
    return mapping


def invariance_check(f: Polynomial) -> bool:
    """True iff f(g^-1 X g) = f(X) for the elementary unitriangular generators g of GL_n."""
    ctx = f.ctx
    target = ctx.with_parameters("c")
    base = target.embed(f)
    return all(img == base for _, img in conjugation_images(f, "c"))
