"""
Experiments on the nilpotent cone: evaluation certificates at the nilpotent
matrices A_sigma, generation and basis tests through the graded Nakayama
quotient, the Jacobian certificate for algebraic independence, the GL_3
suite, and the tensor-candidate experiment.
"""

from __future__ import annotations

import random
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from itertools import combinations, combinations_with_replacement, product
from math import comb, factorial

from .combinatorics import (
    highest_weight_tensor,
    position_symmetry,
    weight_lambda_t,
    weight_mu_t,
    zero_weight_multiplicity,
)
from .counting import counted_quotient_dims
from .estimators import COMPLETE, INCONCLUSIVE, HighestWeightModule
from .invariants import fundamental_invariants
from .linalg import minor_deleted, poly_determinant, rational_determinant, rational_rank
from .ring import RingContext, evaluate
from .semiinvariants import apply_hwv, u_family, v_basic, v_family, verify_semiinvariant
from .validation import check_n, check_polynomials, check_t, check_weight

# ---------------------------------------------------------------------------
# nilpotent matrices A_sigma


def check_sequence(sigma, n: int) -> tuple:
    sigma = tuple(int(x) for x in sigma)
    if not sigma:
        raise ValueError("sequence must be nonempty")
    if len(set(sigma)) != len(sigma):
        raise ValueError(f"sequence {sigma} has repeated entries")
    if min(sigma) < 1 or max(sigma) > n:
        raise ValueError(f"sequence {sigma} must take values in 1..{n}")
    return sigma


def nilpotent_from_sequence(sigma, n: int) -> list:
    """0/1 matrix with A e_{sigma_i} = e_{sigma_{i-1}} (i >= 2), all other e_j -> 0."""
    n = check_n(n)
    sigma = check_sequence(sigma, n)
    A = [[0] * n for _ in range(n)]
    for prev, cur in zip(sigma, sigma[1:]):
        A[prev - 1][cur - 1] = 1
    return A


def sigma_choice(I, n: int, completion: str = "largest", rng: random.Random | None = None) -> tuple:
    """The sequence sigma(I): length max(I), sigma_1 = n, sigma_{i_j} = j for
    I = {i_1 > ... > i_t}.

    Free slots take the largest unused values in decreasing order, or a
    random arrangement of unused values with ``completion="random"``.
    """
    n = check_n(n)
    I = sorted({int(i) for i in I}, reverse=True)
    if not I or I[-1] < 2 or I[0] > n or len(I) > n - 1:
        raise ValueError(f"I must be a nonempty subset of {{2..{n}}}, got {I}")
    length = I[0]
    sigma = [0] * length
    sigma[0] = n
    for j, i in enumerate(I, start=1):
        sigma[i - 1] = j
    used = set(sigma)
    free = [v for v in range(n, 0, -1) if v not in used]
    slots = [k for k in range(length) if sigma[k] == 0]
    if completion == "largest":
        fill = free[: len(slots)]
    elif completion == "random":
        rng = rng or random.Random(0)
        fill = rng.sample(free, len(slots))
    else:
        raise ValueError(f"unknown completion rule {completion!r}")
    for k, v in zip(slots, fill):
        sigma[k] = v
    return tuple(sigma)


@dataclass
class DeltaCertificate:
    n: int
    t: int
    index_sets: list
    matrix: list
    diagonal_units: bool
    off_diagonal_zero: bool
    rank: int

    @property
    def ok(self) -> bool:
        return self.diagonal_units and self.off_diagonal_zero and self.rank == comb(self.n - 1, self.t)


def delta_evaluation_matrix(n: int, t: int, completion: str = "largest", seed: int | None = None) -> DeltaCertificate:
    """M[I][J] = v_{t,I}(A_{sigma(J)}) over all t-subsets I, J of {2..n}."""
    n = check_n(n)
    t = check_t(n, t)
    ctx = RingContext(n)
    rng = random.Random(seed)
    sets = list(combinations(range(2, n + 1), t))
    points = [nilpotent_from_sequence(sigma_choice(J, n, completion, rng), n) for J in sets]
    polys = [v_basic(ctx, t, I).poly for I in sets]
    M = [[evaluate(f, A) for A in points] for f in polys]
    k = len(sets)
    diag = all(abs(M[i][i]) == 1 for i in range(k))
    off = all(M[i][j] == 0 for i in range(k) for j in range(k) if i != j)
    return DeltaCertificate(n, t, sets, M, diag, off, rational_rank(M))


# ---------------------------------------------------------------------------
# generation through the Nakayama quotient


@dataclass
class GenerationReport:
    weight: tuple
    module_dims: dict
    relation_dims: dict
    quotient_dims: dict
    accumulated: int
    target: int
    status: str
    verdict: bool | None
    candidate_count: int = 0
    candidate_rank: int | None = None
    zero_candidates: list = field(default_factory=list)
    degree_cap: int | None = None

    @property
    def generator_degrees(self) -> list:
        return sorted(self.quotient_dims)

    def to_dict(self) -> dict:
        out = asdict(self)
        out["weight"] = list(self.weight)
        out["generator_degrees"] = self.generator_degrees
        for key in ("module_dims", "relation_dims", "quotient_dims"):
            out[key] = {str(d): v for d, v in sorted(out[key].items())}
        return out


def fit_module(n: int, weight, characteristic: int = 0, max_degree=None, n_jobs=None) -> HighestWeightModule:
    return HighestWeightModule(n=n, weight=tuple(weight), characteristic=characteristic, max_degree=max_degree, n_jobs=n_jobs).fit()


def generation_check(n: int, weight, candidates=(), characteristic: int = 0, max_degree=None, n_jobs=None) -> GenerationReport:
    """Do the candidates generate k[g]^U_lambda as a k[g]^G-module?

    The verdict is ``None`` when the degree cap stops the quotient computation
    before its total dimension reaches dim L(lambda)_0.
    """
    n = check_n(n)
    weight = check_weight(weight, n)
    model = fit_module(n, weight, characteristic, max_degree, n_jobs)
    cands = list(candidates)
    zero = [getattr(c, "provenance", i) for i, c in enumerate(cands) if getattr(c, "poly", c).is_zero()]
    polys = [p for p in check_polynomials(cands, model.ring_) if not p.is_zero()]
    verdict = None
    rank = None
    if model.status_ == COMPLETE:
        rank = model.image_rank(polys) if polys else 0
        verdict = rank == model.quotient_rank_
    dims = model.per_degree_dims_
    return GenerationReport(
        weight=weight,
        module_dims={d: v["module"] for d, v in dims.items()},
        relation_dims={d: v["relations"] for d, v in dims.items()},
        quotient_dims=model.quotient_dims_,
        accumulated=model.quotient_rank_,
        target=model.target_rank_,
        status=model.status_,
        verdict=verdict,
        candidate_count=len(cands),
        candidate_rank=rank,
        zero_candidates=zero,
        degree_cap=model.degree_cap_,
    )


def family_candidates(n: int, t: int, family: str, characteristic: int = 0) -> tuple:
    ctx = RingContext(n, characteristic)
    if family == "u":
        return weight_lambda_t(n, t), u_family(ctx, t)
    if family == "v":
        return weight_mu_t(n, t), v_family(ctx, t)
    raise ValueError(f"family must be 'u' or 'v', got {family!r}")


def basis_report(n: int, t: int, family: str = "u", characteristic: int = 0, max_degree=None) -> GenerationReport:
    n = check_n(n)
    t = check_t(n, t)
    weight, cands = family_candidates(n, t, family, characteristic)
    return generation_check(n, weight, cands, characteristic, max_degree)


def basis_check(n: int, t: int, family: str = "u", characteristic: int = 0, max_degree=None) -> bool:
    """True iff the u (or v) family generates and has exactly free-rank many elements.

    A generating set of a free graded module whose size equals the rank is a basis.
    """
    rep = basis_report(n, t, family, characteristic, max_degree)
    return bool(rep.verdict) and rep.candidate_count == rep.target


# ---------------------------------------------------------------------------
# algebraic independence


def jacobian_rows(polys, ctx: RingContext) -> list:
    """Rows of partial derivatives, columns ordered as the variables xi[i][j] row-major."""
    n = ctx.n
    return [[f.diff(i, j) for i in range(1, n + 1) for j in range(1, n + 1)] for f in polys]


def jacobian_minor_certificate(n: int, t: int) -> Fraction:
    """det of the Jacobian of (s_1..s_n, v_{t,I}) in the columns
    (1,1)..(1,n), (n,1)..(n,n-2), (2,1), evaluated at A_sigma, sigma = (n, ..., 1)."""
    n = check_n(n)
    if n < 3:
        raise ValueError("the certificate needs n >= 3")
    t = check_t(n, t)
    if t not in (1, n - 2):
        raise ValueError(f"t must be 1 or n-2 = {n - 2}, got {t}")
    ctx = RingContext(n)
    polys = list(fundamental_invariants(ctx)) + [c.poly for c in v_family(ctx, t)]
    cols = [(1, j) for j in range(1, n + 1)] + [(n, j) for j in range(1, n - 1)] + [(2, 1)]
    assert len(polys) == len(cols) == 2 * n - 1
    A = nilpotent_from_sequence(tuple(range(n, 0, -1)), n)
    M = [[evaluate(f.diff(a, b), A) for a, b in cols] for f in polys]
    return rational_determinant(M)


# ---------------------------------------------------------------------------
# multiplicities of r * lambda^t


@dataclass
class ScanReport:
    n: int
    t: int
    r: int
    weight: tuple
    method: str
    total: int | None
    quotient_dims: dict
    target: int
    status: str
    closed_form: int

    def to_dict(self) -> dict:
        out = asdict(self)
        out["weight"] = list(self.weight)
        out["quotient_dims"] = {str(d): v for d, v in sorted(self.quotient_dims.items())}
        return out


def scan_report(n: int, t: int, r: int, method: str = "auto", max_degree=None, characteristic: int = 0) -> ScanReport:
    """Total Nakayama-quotient dimension for lambda = r * lambda^t.

    ``linear_algebra`` solves for every graded piece; ``counting`` reads the
    graded dimensions off the Weyl alternation of monomial weight counts and
    uses freeness over k[g]^G (characteristic 0). ``auto`` picks counting
    for n >= 5.
    """
    n = check_n(n)
    t = check_t(n, t)
    if isinstance(r, bool) or not isinstance(r, int) or r < 0:
        raise ValueError(f"r must be a nonnegative integer, got {r!r}")
    weight = tuple(r * x for x in weight_lambda_t(n, t))
    target = zero_weight_multiplicity(weight)
    s = comb(n - 1, t)
    closed = comb(r + s - 1, r)
    if method == "auto":
        method = "counting" if n >= 5 and not characteristic else "linear_algebra"
    if method == "linear_algebra":
        rep = generation_check(n, weight, (), characteristic, max_degree)
        total = rep.accumulated if rep.status == COMPLETE else None
        return ScanReport(n, t, r, weight, method, total, rep.quotient_dims, target, rep.status, closed)
    if method == "counting":
        if characteristic:
            raise ValueError("the counting method is only valid in characteristic 0")
        kwargs = {} if max_degree is None else {"max_degree": max_degree}
        res = counted_quotient_dims(weight, target, **kwargs)
        ok = res["complete"] and res["tail_zero"]
        status = COMPLETE if ok else INCONCLUSIVE
        return ScanReport(n, t, r, weight, method, sum(res["dims"].values()) if ok else None, res["dims"], target, status, closed)
    raise ValueError(f"unknown method {method!r}")


def power_weight_dimension_scan(n: int, t: int, r: int, method: str = "auto", max_degree=None) -> int | None:
    """Total quotient dimension for r * lambda^t; ``None`` if the computation was capped."""
    return scan_report(n, t, r, method, max_degree).total


# ---------------------------------------------------------------------------
# GL_3


def gl3_weight(l1: int, l2: int) -> tuple:
    """l1 w_1 + l2 w_2, shifted to coordinate sum zero (needs 3 | l1 - l2)."""
    if (l1 - l2) % 3:
        raise ValueError("l1 - l2 must be divisible by 3")
    return ((2 * l1 + l2) // 3, (l2 - l1) // 3, -(l1 + 2 * l2) // 3)


def gl3_generators(ctx: RingContext | None = None) -> dict:
    ctx = ctx or RingContext(3)
    X = ctx.variable_matrix()
    m13 = poly_determinant(minor_deleted(X, 1, 3))
    m12 = poly_determinant(minor_deleted(X, 1, 2))
    m23 = poly_determinant(minor_deleted(X, 2, 3))
    x21, x31, x32 = ctx.xi(2, 1), ctx.xi(3, 1), ctx.xi(3, 2)
    s1, s2, s3 = fundamental_invariants(ctx)
    return {
        "s1": s1,
        "s2": s2,
        "s3": s3,
        "xi31": x31,
        "m13": m13,
        "d1": x21 * m13 + x31 * m12,
        "d2": x31 * m23 + x32 * m13,
    }


def gl3_family(l1: int, l2: int, gens: dict | None = None) -> list:
    """d * xi31^i * |X^(1,3)|^(a-i), 0 <= i <= a, with a = min(l1, l2)."""
    gens = gens or gl3_generators()
    a = min(l1, l2)
    d = gens["d1"] ** ((l1 - l2) // 3) if l1 >= l2 else gens["d2"] ** ((l2 - l1) // 3)
    return [d * gens["xi31"] ** i * gens["m13"] ** (a - i) for i in range(a + 1)]


NILPOTENT_TEST_POINT = ((0, 0, 0), (1, 0, 0), (1, 1, 0))


def gl3_suite(cap: int = 6, seed: int = 0) -> dict:
    """Sub-checks (a)-(e) for GL_3; each entry has an ``ok`` flag."""
    ctx = RingContext(3)
    g = gl3_generators(ctx)
    out: dict = {}
    u23 = u_family(ctx, 2)[0].poly
    v23 = v_family(ctx, 2)[0].poly
    out["a_basic_invariants"] = {
        "ok": g["d1"] == -u23 and g["d2"] == v23,
        "d1_equals_minus_u": g["d1"] == -u23,
        "d2_equals_v": g["d2"] == v23,
    }
    m13, x31 = g["m13"], g["xi31"]
    residual = g["d1"] * g["d2"] - m13**3 - x31 * m13**2 * g["s1"] - x31**2 * m13 * g["s2"] - x31**3 * g["s3"]
    out["b_relation"] = {"ok": residual.is_zero(), "residual_terms": len(residual)}
    bases = []
    nonzero = []
    for total in range(cap + 1):
        for l1 in range(total + 1):
            l2 = total - l1
            if (l1 - l2) % 3:
                continue
            w = gl3_weight(l1, l2)
            fam = gl3_family(l1, l2, g)
            semi = all(verify_semiinvariant(f, w).ok for f in fam)
            rep = generation_check(3, w, fam)
            ok = semi and bool(rep.verdict) and len(fam) == rep.target
            bases.append({"l": [l1, l2], "weight": list(w), "size": len(fam), "target": rep.target, "ok": ok})
            vals = [evaluate(f, NILPOTENT_TEST_POINT) for f in fam]
            nonzero.append({"l": [l1, l2], "values": [str(v) for v in vals], "ok": all(v != 0 for v in vals)})
    out["c_bases"] = {"ok": all(b["ok"] for b in bases), "weights": bases}
    out["d_nonzero_on_nilcone"] = {"ok": all(b["ok"] for b in nonzero), "point": [list(r) for r in NILPOTENT_TEST_POINT], "weights": nonzero}
    rng = random.Random(seed)
    point = [[Fraction(rng.randint(-50, 50), rng.randint(1, 20)) for _ in range(3)] for _ in range(3)]
    names = ["s1", "s2", "s3", "xi31", "m13", "d1", "d2"]
    J = [[evaluate(df, point) for df in row] for row in jacobian_rows([g[k] for k in names], ctx)]
    rank = rational_rank(J)
    out["e_jacobian_rank"] = {"ok": rank == 6, "rank": rank, "expected": 6, "point": [[str(x) for x in r] for r in point]}
    out["ok"] = all(v["ok"] for v in out.values() if isinstance(v, dict))
    return out


# ---------------------------------------------------------------------------
# tensor candidates theta(psi_t(E_lambda) . s_{i_1} (x) ... (x) s_{i_t})


@dataclass
class QuestionReport:
    weight: tuple
    tensor_terms: int
    ordered: bool
    tuples: list
    zero_tuples: list
    candidate_degrees: dict
    contents: dict
    generation: GenerationReport

    @property
    def verdict(self):
        return self.generation.verdict

    def to_dict(self) -> dict:
        return {
            "weight": list(self.weight),
            "tensor_terms": self.tensor_terms,
            "ordered": self.ordered,
            "tuples": [list(x) for x in self.tuples],
            "zero_tuples": [list(x) for x in self.zero_tuples],
            "candidate_degrees": {",".join(map(str, k)): v for k, v in self.candidate_degrees.items()},
            "contents": {",".join(map(str, k)): v for k, v in self.contents.items()},
            "generation": self.generation.to_dict(),
            "verdict": self.verdict,
        }


def candidate_tuples(n: int, t: int, ordered: bool) -> list:
    pool = range(2, n + 1)
    if ordered:
        return list(product(pool, repeat=t))
    return list(combinations_with_replacement(pool, t))


def question_experiment(n: int, weight, tuple_cap: int | None = None, characteristic: int = 0, max_degree=None):
    """Try every index tuple (i_1..i_t) from {2..n} in the tensor construction.

    When E_lambda is symmetric up to sign under every permutation of tensor
    positions, reordering a tuple changes the candidate by a sign only, so
    multisets suffice; otherwise all ordered tuples are tried.
    """
    n = check_n(n)
    weight = check_weight(weight, n, dominant=True, root_lattice=True, nonzero=True)
    ctx = RingContext(n, characteristic)
    E = highest_weight_tensor(weight)
    ordered = len(position_symmetry(E)) != factorial(E.t)
    tuples = candidate_tuples(n, E.t, ordered)
    if tuple_cap is not None:
        tuples = tuples[: int(tuple_cap)]
    cands = []
    zero = []
    degrees = {}
    contents = {}
    for tup in tuples:
        c = apply_hwv(ctx, E, tup)
        if c.is_zero:
            zero.append(tup)
            continue
        cands.append(c)
        degrees[tup] = c.poly.degree()
        contents[tup] = c.poly.content()
    rep = generation_check(n, weight, cands, characteristic, max_degree)
    return QuestionReport(weight, len(E), ordered, tuples, zero, degrees, contents, rep)
