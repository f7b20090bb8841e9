"""
Hilbert series of k[gl_n]^U_lambda by counting, without solving linear systems.

The degree-d piece of k[gl_n] has a monomial basis graded by torus weight, so
its weight multiplicities N_d(mu) are lattice-point counts. The number of
copies of L(lambda) in degree d follows from the Weyl alternation

    dim k[g]^U_{lambda,d} = sum_{w in S_n} sgn(w) N_d(lambda + rho - w rho),

and since k[g]^U_lambda is free over k[g]^G = k[s_1..s_n] (deg s_i = i), the
Nakayama quotient has Hilbert polynomial H_B(q) * prod_i (1 - q^i).

Valid in characteristic 0 only (complete reducibility is used).
"""

from __future__ import annotations

from itertools import permutations
from math import comb

import numpy as np

from .combinatorics import _sign

MAX_TABLE_ENTRIES = 40_000_000


def weight_multiplicity_table(n: int, D: int) -> np.ndarray:
    """T[d, mu_1 + D, ..., mu_{n-1} + D] = number of degree-d monomials of weight mu.

    The last coordinate is implied by sum(mu) = 0.
    """
    if comb(n * n + D, D) >= 2**62:
        raise OverflowError("monomial counts would overflow int64")
    side = 2 * D + 1
    if (D + 1) * side ** (n - 1) > MAX_TABLE_ENTRIES:
        raise MemoryError(f"weight table for n={n}, degree {D} is too large")
    T = np.zeros((D + 1,) + (side,) * (n - 1), dtype=np.int64)
    T[(0,) + (D,) * (n - 1)] = 1
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            # xi_ij has weight e_j - e_i; coordinate n-1 (0-based) is dropped
            step = [0] * (n - 1)
            if j < n - 1:
                step[j] += 1
            if i < n - 1:
                step[i] -= 1
            axes = tuple(a for a in range(n - 1) if step[a])
            shifts = tuple(step[a] for a in axes)
            # multiply by 1/(1 - q x^step): T'[d] = T[d] + shift(T'[d-1]).
            # Entries of degree d have |mu_k| <= d <= D, so the roll never wraps
            # a nonzero entry.
            for d in range(1, D + 1):
                T[d] += np.roll(T[d - 1], shifts, axis=axes)
    # the n diagonal variables have weight zero
    for _ in range(n):
        T = np.cumsum(T, axis=0)
    return T


def _lookup(T: np.ndarray, mu, D: int) -> np.ndarray:
    """Column of T (all degrees) at weight mu, zero outside the box."""
    idx = []
    for x in mu[:-1]:
        if abs(x) > D:
            return np.zeros(T.shape[0], dtype=np.int64)
        idx.append(x + D)
    return T[(slice(None),) + tuple(idx)]


def hwv_hilbert_series(weight, D: int, table: np.ndarray | None = None) -> list:
    """[dim k[g]^U_{lambda,d} for d = 0..D] via Weyl alternation."""
    weight = tuple(int(x) for x in weight)
    n = len(weight)
    if sum(weight) != 0:
        return [0] * (D + 1)
    T = weight_multiplicity_table(n, D) if table is None else table
    rho = list(range(n - 1, -1, -1))
    total = np.zeros(D + 1, dtype=np.int64)
    for w in permutations(range(n)):
        wrho = [rho[w[k]] for k in range(n)]
        mu = [weight[k] + rho[k] - wrho[k] for k in range(n)]
        total += _sign(w) * _lookup(T, mu, D)
    return [int(x) for x in total]


def quotient_hilbert_series(hilbert: list, n: int) -> list:
    """Coefficients of H(q) * prod_{i=1..n} (1 - q^i), truncated to len(hilbert)."""
    out = list(hilbert)
    for i in range(1, n + 1):
        out = [out[d] - (out[d - i] if d >= i else 0) for d in range(len(out))]
    return out


def counted_quotient_dims(weight, target: int, start_degree: int = 8, max_degree: int = 24, step: int = 4) -> dict:
    """Quotient dims per degree by counting, growing the degree window until the
    accumulated dimension reaches ``target``.

    Returns ``{"dims": {d: q_d}, "hilbert": [...], "window": D, "complete": bool,
    "tail_zero": bool}``; ``tail_zero`` records that every coefficient past the
    last generator, up to the window, vanished.
    """
    n = len(weight)
    D = min(start_degree, max_degree)
    while True:
        try:
            hil = hwv_hilbert_series(weight, D)
        except (MemoryError, OverflowError):
            return {"dims": {}, "hilbert": [], "window": D, "complete": False, "tail_zero": False}
        q = quotient_hilbert_series(hil, n)
        if any(x < 0 for x in q):
            raise RuntimeError(f"negative quotient dimension in {q}: freeness violated")
        acc = 0
        top = None
        for d, x in enumerate(q):
            acc += x
            if acc >= target and top is None:
                top = d
        if top is not None or D >= max_degree:
            dims = {d: x for d, x in enumerate(q) if x}
            complete = top is not None and sum(q[: top + 1]) == target
            return {
                "dims": dims,
                "hilbert": hil,
                "window": D,
                "complete": complete,
                "tail_zero": complete and not any(q[top + 1:]),
            }
        D = min(D + step, max_degree)
