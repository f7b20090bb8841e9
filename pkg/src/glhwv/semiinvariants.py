"""
The basic B-semi-invariants u_{t,I}, v_{t,I}, the tensor construction
vartheta(psi_t(E) . s_{i_1} (x) ... (x) s_{i_t}), the involution phi, and an
exact semi-invariance test.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .combinatorics import TensorExpression, weight_lambda_t, weight_mu_t
from .invariants import elementary_conjugation, fundamental_invariants
from .linalg import PolyMatrix, poly_determinant
from .ring import NotWeightHomogeneous, Polynomial, RingContext, ZeroPolynomial, rename_variables, substitute, torus_weight


@dataclass
class HwvCandidate:
    poly: Polynomial
    claimed_weight: tuple
    provenance: tuple
    is_zero: bool = field(default=False)

    @property
    def degree(self) -> int:
        return self.poly.degree()


def check_index_set(n: int, t: int, I) -> tuple:
    I = tuple(sorted(int(i) for i in I))
    if len(I) != t or len(set(I)) != t:
        raise ValueError(f"I must be a set of {t} distinct indices, got {I}")
    if t < 1 or t > n - 1:
        raise ValueError(f"need 1 <= t <= n-1, got t={t}")
    if I[0] < 2 or I[-1] > n:
        raise ValueError(f"I must lie in {{2..{n}}}, got {I}")
    return I


@lru_cache(maxsize=256)
def _invariant_derivative(ctx: RingContext, a: int, b: int, j: int) -> Polynomial:
    return fundamental_invariants(ctx)[j - 1].diff(a, b)


def u_basic(ctx: RingContext, t: int, I) -> HwvCandidate:
    """u_{t,I} = det(d_{1i} s_j), rows i = n-t+1..n, columns j in I (increasing)."""
    n = ctx.n
    I = check_index_set(n, t, I)
    M = PolyMatrix([[_invariant_derivative(ctx, 1, i, j) for j in I] for i in range(n - t + 1, n + 1)])
    return HwvCandidate(poly_determinant(M), weight_lambda_t(n, t), ("u_basic", t, I))


def v_basic(ctx: RingContext, t: int, I) -> HwvCandidate:
    """v_{t,I} = det(d_{in} s_j), rows i = 1..t, columns j in I (increasing)."""
    n = ctx.n
    I = check_index_set(n, t, I)
    M = PolyMatrix([[_invariant_derivative(ctx, i, n, j) for j in I] for i in range(1, t + 1)])
    return HwvCandidate(poly_determinant(M), weight_mu_t(n, t), ("v_basic", t, I))


def apply_hwv(ctx: RingContext, E: TensorExpression, indices) -> HwvCandidate:
    """sum over terms c E_{a1 b1} (x) ... of c * prod_j d_{a_j b_j} s_{i_j}.

    Repeated indices are allowed; a zero result is flagged, not rejected.
    """
    indices = tuple(int(i) for i in indices)
    if len(indices) != E.t:
        raise ValueError(f"need {E.t} indices, got {len(indices)}")
    if E.n != ctx.n:
        raise ValueError("tensor and ring disagree on n")
    for i in indices:
        if not 1 <= i <= ctx.n:
            raise ValueError(f"index {i} out of range")
    acc = ctx.zero()
    for coef, pairs in E:
        prod = ctx.constant(coef)
        for (a, b), i in zip(pairs, indices):
            factor = _invariant_derivative(ctx, a, b, i)
            if factor.is_zero():
                prod = ctx.zero()
                break
            prod = prod * factor
        acc = acc + prod
    weights = E.term_weights()
    claimed = next(iter(weights)) if len(weights) == 1 else None
    return HwvCandidate(acc, claimed, ("applied_tensor", indices), is_zero=acc.is_zero())


def phi_involution(f: Polynomial) -> Polynomial:
    """Pullback along A -> P A^T P: xi[i][j] -> xi[n+1-j][n+1-i]."""
    ctx = f.ctx
    n = ctx.n
    perm = {ctx.var_index(i, j): ctx.var_index(n + 1 - j, n + 1 - i) for i in range(1, n + 1) for j in range(1, n + 1)}
    return rename_variables(f, perm)


@dataclass
class SemiInvarianceCertificate:
    ok: bool
    weight: tuple | None
    failing_root: int | None = None
    residual: Polynomial | None = None
    reason: str = ""

    def __bool__(self):
        return self.ok


def unipotent_residual(f: Polynomial, i: int, param: str = "c") -> Polynomial:
    """f((I - cE_{i,i+1}) X (I + cE_{i,i+1})) - f(X), as a polynomial in xi and c."""
    ctx = f.ctx
    target = ctx.with_parameters(param)
    c = target.param(param)
    image = substitute(f, elementary_conjugation(ctx, i, i + 1, c), target)
    return image - target.embed(f)


def verify_semiinvariant(f: Polynomial, weight) -> SemiInvarianceCertificate:
    """Exact test that f is a B-semi-invariant of the given weight.

    Checks the torus weight, then U-invariance under each simple root
    subgroup as a polynomial identity in a formal parameter; valid in every
    characteristic.
    """
    weight = tuple(weight)
    if f.is_zero():
        return SemiInvarianceCertificate(False, None, reason="zero polynomial")
    try:
        w = torus_weight(f)
    except (NotWeightHomogeneous, ZeroPolynomial, ValueError) as exc:
        return SemiInvarianceCertificate(False, None, reason=str(exc))
    if w != weight:
        return SemiInvarianceCertificate(False, w, reason=f"torus weight {w} != {weight}")
    for i in range(1, f.ctx.n):
        res = unipotent_residual(f, i)
        if not res.is_zero():
            return SemiInvarianceCertificate(False, w, failing_root=i, residual=res, reason=f"not invariant under I + cE_{i},{i + 1}")
    return SemiInvarianceCertificate(True, w)


def u_family(ctx: RingContext, t: int) -> list:
    from itertools import combinations

    return [u_basic(ctx, t, I) for I in combinations(range(2, ctx.n + 1), t)]


def v_family(ctx: RingContext, t: int) -> list:
    from itertools import combinations

    return [v_basic(ctx, t, I) for I in combinations(range(2, ctx.n + 1), t)]
