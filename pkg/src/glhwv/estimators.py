"""
scikit-learn style front end for the graded Nakayama quotient of
k[gl_n]^U_lambda by (k[gl_n]^G)^+ k[gl_n]^U_lambda.

``fit`` computes the graded pieces degree by degree until the quotient has
reached its known total dimension dim L(lambda)_0 (the module is free of
that rank), ``transform`` maps candidate highest weight vectors to their
coordinates in the quotient. Candidates generate the module exactly when
their coordinate vectors span.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.exceptions import NotFittedError

from .combinatorics import in_root_lattice, is_dominant, zero_weight_multiplicity
from .graded import hwv_space
from .invariants import fundamental_invariants
from .linalg import SparseEchelon, bareiss_echelon
from .ring import Polynomial, RingContext
from .semiinvariants import verify_semiinvariant
from .validation import check_n, check_polynomials, check_weight

COMPLETE = "complete"
INCONCLUSIVE = "inconclusive"


def default_degree_cap(n: int, weight) -> int:
    return 2 * n * max((abs(x) for x in weight), default=0) + n * n


@dataclass
class GradedPiece:
    degree: int
    basis: tuple
    relation_rank: int
    representatives: list
    echelon: SparseEchelon = field(repr=False)

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def quotient_dim(self) -> int:
        return len(self.representatives)


class HighestWeightModule(TransformerMixin, BaseEstimator):
    """Graded structure of the k[g]^G-module of highest weight vectors of one weight.

    Parameters
    ----------
    n : int
        Matrix size.
    weight : sequence of int
        The weight lambda (length n).
    characteristic : int
        0 for rational coefficients, or a prime.
    max_degree : int or None
        Degree safety cap; ``None`` uses 2 n max|lambda_i| + n^2. Reaching it
        leaves ``status_`` inconclusive instead of producing a verdict.
    n_jobs : int or None
        Degree layers solved in parallel batches (joblib). Results do not
        depend on the schedule.
    """

    def __init__(self, n=2, weight=(1, -1), characteristic=0, max_degree=None, n_jobs=None):
        self.n = n
        self.weight = weight
        self.characteristic = characteristic
        self.max_degree = max_degree
        self.n_jobs = n_jobs

    def fit(self, X=None, y=None):
        n = check_n(self.n)
        weight = check_weight(self.weight, n)
        ctx = RingContext(n, self.characteristic)
        cap = default_degree_cap(n, weight) if self.max_degree is None else int(self.max_degree)
        if cap < 0:
            raise ValueError("max_degree must be nonnegative")
        start = time.perf_counter()
        self.ring_ = ctx
        self.weight_ = weight
        self.degree_cap_ = cap
        if is_dominant(weight) and in_root_lattice(weight):
            self.target_rank_ = zero_weight_multiplicity(weight)
        else:
            self.target_rank_ = 0
        self.pieces_ = {}
        invariants = fundamental_invariants(ctx)
        accumulated = 0
        d = 0
        status = COMPLETE if self.target_rank_ == 0 else INCONCLUSIVE
        batch = max(1, int(self.n_jobs or 1))
        while accumulated < self.target_rank_ and d <= cap:
            degrees = [e for e in range(d, d + batch) if e <= cap]
            bases = self._solve_layers(ctx, weight, degrees)
            for e, basis in zip(degrees, bases):
                piece = self._quotient_layer(ctx, e, basis, invariants)
                self.pieces_[e] = piece
                accumulated += piece.quotient_dim
                if accumulated > self.target_rank_:
                    raise RuntimeError(
                        f"quotient dimension {accumulated} exceeds dim L(lambda)_0 = {self.target_rank_}"
                    )
                if accumulated == self.target_rank_:
                    status = COMPLETE
                    break
            d = degrees[-1] + 1
            if accumulated == self.target_rank_:
                break
        self.status_ = status
        self.quotient_rank_ = accumulated
        self.fit_time_ = time.perf_counter() - start
        return self

    def _solve_layers(self, ctx, weight, degrees):
        if len(degrees) > 1:
            from joblib import Parallel, delayed

            return Parallel(n_jobs=len(degrees))(delayed(hwv_space)(ctx, weight, e) for e in degrees)
        return [hwv_space(ctx, weight, e) for e in degrees]

    def _quotient_layer(self, ctx, d, basis, invariants) -> GradedPiece:
        p = ctx.characteristic
        rel = SparseEchelon(p)
        for i, s in enumerate(invariants, start=1):
            lower = self.pieces_.get(d - i)
            if lower is None:
                continue
            for g in lower.basis:
                rel.add(dict((s * g)._terms))
        relation_rank = rel.rank
        if relation_rank > len(basis):
            raise RuntimeError("relations do not lie in the graded piece")
        tracked = rel.copy()
        reps = []
        for f in basis:
            tag = -(len(reps) + 1)
            vec = dict(f._terms)
            vec[tag] = 1
            if tracked.add(vec, floor=0):
                reps.append(f)
        if relation_rank + len(reps) != len(basis):
            raise RuntimeError(f"relations in degree {d} are not contained in the graded piece")
        return GradedPiece(d, tuple(basis), relation_rank, reps, tracked)

    # -- queries -----------------------------------------------------------

    def _check_fitted(self):
        if not hasattr(self, "pieces_"):
            raise NotFittedError("call fit() first")

    @property
    def quotient_dims_(self) -> dict:
        self._check_fitted()
        return {d: p.quotient_dim for d, p in self.pieces_.items() if p.quotient_dim}

    @property
    def per_degree_dims_(self) -> dict:
        self._check_fitted()
        return {
            d: {"module": p.dim, "relations": p.relation_rank, "quotient": p.quotient_dim}
            for d, p in sorted(self.pieces_.items())
        }

    def _offsets(self):
        offsets = {}
        total = 0
        for d in sorted(self.pieces_):
            offsets[d] = total
            total += self.pieces_[d].quotient_dim
        return offsets, total

    def quotient_coordinates(self, f: Polynomial) -> dict:
        """Coordinates of the image of ``f`` in B_d / R_d (degree d of f)."""
        self._check_fitted()
        if f.is_zero():
            return {}
        if not f.is_homogeneous():
            raise ValueError("candidates must be homogeneous")
        d = f.degree()
        piece = self.pieces_.get(d)
        if piece is None:
            if self.status_ == COMPLETE and d > max(self.pieces_, default=-1):
                # all quotient generators already found: higher degrees map to zero
                cert = verify_semiinvariant(f, self.weight_)
                if not cert.ok:
                    raise ValueError(f"candidate is not a highest weight vector of weight {self.weight_}: {cert.reason}")
                return {}
            raise ValueError(f"degree {d} has not been computed (status {self.status_})")
        selftag = -(10**9)
        vec = dict(f._terms)
        vec[selftag] = 1
        rem = piece.echelon.reduce(vec)
        if any(k >= 0 for k in rem):
            raise ValueError(f"candidate of degree {d} is not a highest weight vector of weight {self.weight_}")
        mu = rem.get(selftag)
        out = {}
        for k, c in rem.items():
            if k != selftag:
                if self.ring_.characteristic:
                    out[-k - 1] = (-c * pow(mu, -1, self.ring_.characteristic)) % self.ring_.characteristic
                else:
                    out[-k - 1] = Fraction(-c, mu)
        return out

    def transform(self, X):
        """Quotient coordinates of each candidate, concatenated over degrees.

        Returns an object array of exact scalars with one row per candidate.
        """
        self._check_fitted()
        polys = check_polynomials(X, self.ring_)
        offsets, total = self._offsets()
        out = np.zeros((len(polys), total), dtype=object)
        out[:] = 0
        for row, f in enumerate(polys):
            if f.is_zero():
                continue
            coords = self.quotient_coordinates(f)
            if coords:
                base = offsets[f.degree()]
                for k, c in coords.items():
                    out[row, base + k] = c
        return out

    def image_rank(self, X) -> int:
        coords = self.transform(X)
        if coords.size == 0:
            return 0
        if self.ring_.characteristic:
            ech = SparseEchelon(self.ring_.characteristic)
            for r in coords:
                ech.add({j: int(c) for j, c in enumerate(r) if c})
            return ech.rank
        return len(bareiss_echelon(coords.tolist())[1])

    def spans(self, X) -> bool:
        """True iff the candidates' images span the whole quotient."""
        self._check_fitted()
        if self.status_ != COMPLETE:
            raise RuntimeError("quotient not fully computed (degree cap reached); no verdict")
        return self.image_rank(X) == self.quotient_rank_
