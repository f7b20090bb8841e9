"""Input validation helpers shared by the estimators, experiments and CLI."""

from __future__ import annotations

from typing import Sequence

from .combinatorics import in_root_lattice, is_dominant
from .ring import Polynomial, RingContext


def check_n(n) -> int:
    if isinstance(n, bool) or not isinstance(n, int) or n < 2:
        raise ValueError(f"n must be an integer >= 2, got {n!r}")
    return n


def check_t(n: int, t) -> int:
    if isinstance(t, bool) or not isinstance(t, int) or not 1 <= t <= n - 1:
        raise ValueError(f"t must be an integer in 1..{n - 1}, got {t!r}")
    return t


def check_weight(weight, n: int | None = None, *, dominant: bool = False, root_lattice: bool = False, nonzero: bool = False) -> tuple:
    """Coerce ``weight`` to a tuple of ints and enforce the requested properties."""
    if isinstance(weight, str):
        weight = parse_weight(weight)
    try:
        w = tuple(int(x) for x in weight)
    except TypeError:
        raise ValueError(f"weight must be a sequence of integers, got {weight!r}") from None
    if any(int(x) != x for x in weight):
        raise ValueError(f"weight must have integer coordinates, got {weight!r}")
    if n is not None and len(w) != n:
        raise ValueError(f"weight {w} has length {len(w)}, expected {n}")
    if len(w) < 2:
        raise ValueError("weight must have at least two coordinates")
    if dominant and not is_dominant(w):
        raise ValueError(f"weight {w} is not dominant")
    if root_lattice and not in_root_lattice(w):
        raise ValueError(f"weight {w} is not in the root lattice (coordinate sum {sum(w)})")
    if nonzero and not any(w):
        raise ValueError("weight must be nonzero")
    return w


def parse_weight(text: str) -> tuple:
    """'2,0,-1,-1' -> (2, 0, -1, -1)."""
    try:
        return tuple(int(x) for x in text.replace(" ", "").split(",") if x != "")
    except ValueError:
        raise ValueError(f"cannot parse weight {text!r}; expected comma-separated integers") from None


def parse_index_list(text: str) -> tuple:
    try:
        return tuple(int(x) for x in text.replace(" ", "").split(",") if x != "")
    except ValueError:
        raise ValueError(f"cannot parse index list {text!r}") from None


def check_polynomials(polys: Sequence, ctx: RingContext | None = None) -> list:
    """Accept Polynomials or objects with a ``poly`` attribute; check a shared context."""
    out = []
    for p in polys:
        p = getattr(p, "poly", p)
        if not isinstance(p, Polynomial):
            raise TypeError(f"expected a Polynomial, got {type(p).__name__}")
        if ctx is not None and p.ctx != ctx:
            if p.ctx.n != ctx.n or p.ctx.characteristic != ctx.characteristic or p.uses_parameters():
                raise ValueError("candidate lives in an incompatible ring")
            p = _restrict(p, ctx)
        out.append(p)
    return out


def _restrict(p: Polynomial, ctx: RingContext) -> Polynomial:
    from .ring import _BITS

    drop = _BITS * (p.ctx.nvars - ctx.nvars)
    if drop >= 0:
        return Polynomial(ctx, {k >> drop: c for k, c in p._terms.items()})
    return ctx.embed(p)
