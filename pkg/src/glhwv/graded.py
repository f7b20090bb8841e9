"""
Brute-force graded pieces of k[gl_n]^U_lambda.

A degree-d highest weight vector of weight lambda is a linear combination of
the degree-d monomials of torus weight lambda that is fixed by every simple
root subgroup. The fixed-point conditions are linear in the unknown
coefficients and are solved exactly.
"""

from __future__ import annotations

from functools import lru_cache

from .linalg import SparseEchelon, sparse_nullspace
from .ring import _BITS, _MASK, Polynomial, RingContext, _clean, substitute
from .invariants import elementary_conjugation


def weight_monomials(ctx: RingContext, weight, degree: int) -> list:
    """Packed keys of all degree-``degree`` monomials in the xi with torus weight ``weight``."""
    n = ctx.n
    weight = tuple(weight)
    if len(weight) != n or sum(weight) != 0 or degree < 0:
        return []
    nv = n * n
    shifts = [ctx.shift(v) for v in range(nv)]
    wvec = []
    for v in range(nv):
        i, j = divmod(v, n)
        wvec.append((i, j))
    out = []
    need = list(weight)

    def rec(v: int, left: int, key: int):
        dist = sum(abs(x) for x in need)
        if dist > 2 * left:
            return
        if v == nv:
            if left == 0 and dist == 0:
                out.append(key)
            return
        i, j = wvec[v]
        s = shifts[v]
        if i == j:
            for e in range(left, -1, -1):
                rec(v + 1, left - e, key + (e << s))
            return
        # xi_ij moves coordinate j up and i down
        for e in range(left, -1, -1):
            need[j] -= e
            need[i] += e
            rec(v + 1, left - e, key + (e << s))
            need[j] += e
            need[i] -= e

    rec(0, degree, 0)
    return out


def raising_image(ctx: RingContext, key: int, a: int) -> dict:
    """D_a applied to a monomial: the c-linear part of f(g^-1 X g), g = I + c E_{a,a+1}.

    D_a f = sum_r xi_ra d_{r,a+1} f - sum_s xi_{a+1,s} d_{a s} f.
    """
    n = ctx.n
    b = a + 1
    out: dict = {}
    for r in range(1, n + 1):
        s_from = ctx.shift(ctx.var_index(r, b))
        e = (key >> s_from) & _MASK
        if e:
            k = key - (1 << s_from) + (1 << ctx.shift(ctx.var_index(r, a)))
            out[k] = out.get(k, 0) + e
    for s in range(1, n + 1):
        s_from = ctx.shift(ctx.var_index(a, s))
        e = (key >> s_from) & _MASK
        if e:
            k = key - (1 << s_from) + (1 << ctx.shift(ctx.var_index(b, s)))
            out[k] = out.get(k, 0) - e
    return {k: c for k, c in out.items() if c}


def _group_residual_columns(ctx: RingContext, monomials: list) -> dict:
    """Every c-power coefficient of m(g^-1 X g) - m(X) for each simple root, per monomial."""
    target = ctx.with_parameters("c")
    c = target.param("c")
    lift = _BITS * (target.nvars - ctx.nvars)
    maps = [elementary_conjugation(ctx, a, a + 1, c) for a in range(1, ctx.n)]
    columns = {}
    for m in monomials:
        image: dict = {}
        mono = Polynomial(ctx, {m: ctx.coerce(1)})
        for idx, mapping in enumerate(maps):
            res = substitute(mono, mapping, target)
            for k, coef in res._terms.items():
                if k == (m << lift):
                    coef = coef - 1
                if coef % ctx.characteristic if ctx.characteristic else coef:
                    image[(idx, k)] = coef
        columns[m] = image
    return columns


@lru_cache(maxsize=512)
def hwv_space(ctx: RingContext, weight: tuple, degree: int) -> tuple:
    """Basis of the degree-``degree`` highest weight vectors of weight ``weight``.

    Over Q the fixed-point equations are the c-linear parts of the simple root
    actions (the higher c-powers are divided powers of these and vanish with
    them); over GF(p) every c-power coefficient is imposed.
    """
    weight = tuple(weight)
    monos = weight_monomials(ctx, weight, degree)
    if not monos:
        return ()
    if ctx.characteristic == 0:
        columns = {}
        for m in monos:
            image = {}
            for a in range(1, ctx.n):
                for k, c in raising_image(ctx, m, a).items():
                    image[(a, k)] = c
            columns[m] = image
    else:
        columns = _group_residual_columns(ctx, monos)
    # row keys must be orderable: encode (root, monomial) as one int
    width = _BITS * (ctx.nvars + 2)
    cols = {m: {(root << width) | k: c for (root, k), c in img.items()} for m, img in columns.items()}
    basis = sparse_nullspace(cols, ctx.characteristic)
    out = []
    for vec in basis:
        out.append(Polynomial(ctx, _clean(ctx, {k: ctx.coerce(c) for k, c in vec.items()})))
    # deterministic order: by leading monomial, descending
    out.sort(key=lambda f: max(f._terms), reverse=True)
    return tuple(out)


def span_echelon(polys, characteristic: int = 0) -> SparseEchelon:
    ech = SparseEchelon(characteristic)
    for f in polys:
        ech.add(dict(f._terms))
    return ech
