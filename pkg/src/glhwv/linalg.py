"""
Exact linear algebra: determinants of polynomial matrices, and rank /
nullspace of rational (or mod p) matrices.

Dense rational matrices go through fraction-free (Bareiss) elimination.
The large, very sparse systems met when solving for highest weight vectors
use :class:`SparseEchelon`, an incremental row echelon form over dict rows.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

from .ring import ContextMismatch, Polynomial, RingContext


class PolyMatrix:
    """Dense rectangular grid of polynomials sharing one context."""

    def __init__(self, rows: Sequence[Sequence[Polynomial]]):
        rows = [list(r) for r in rows]
        if not rows or not rows[0]:
            raise ValueError("empty matrix")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise ValueError("ragged matrix")
        ctx = rows[0][0].ctx
        for r in rows:
            for e in r:
                if e.ctx != ctx:
                    raise ContextMismatch("matrix entries must share one context")
        self.rows = rows
        self.ctx = ctx

    @property
    def shape(self) -> tuple:
        return len(self.rows), len(self.rows[0])

    def __getitem__(self, idx):
        i, j = idx
        return self.rows[i][j]

    def transpose(self) -> "PolyMatrix":
        return PolyMatrix([list(c) for c in zip(*self.rows)])

    def __matmul__(self, other: "PolyMatrix") -> "PolyMatrix":
        r, k = self.shape
        k2, c = other.shape
        if k != k2:
            raise ValueError("shape mismatch")
        out = []
        for i in range(r):
            row = []
            for j in range(c):
                acc = self.ctx.zero()
                for m in range(k):
                    acc = acc + self.rows[i][m] * other.rows[m][j]
                row.append(acc)
            out.append(row)
        return PolyMatrix(out)

    def __repr__(self):
        return f"PolyMatrix({self.shape[0]}x{self.shape[1]})"


def submatrix(M: PolyMatrix, rows: Iterable[int], cols: Iterable[int]) -> PolyMatrix:
    """Rows ``rows`` and columns ``cols`` (1-based, taken in increasing order)."""
    r, c = M.shape
    rows = sorted(set(rows))
    cols = sorted(set(cols))
    if not rows or not cols:
        raise ValueError("index sets must be nonempty")
    if rows[0] < 1 or rows[-1] > r or cols[0] < 1 or cols[-1] > c:
        raise IndexError("index set out of range")
    return PolyMatrix([[M.rows[i - 1][j - 1] for j in cols] for i in rows])


def minor_deleted(M: PolyMatrix, i: int, j: int) -> PolyMatrix:
    """M with row i and column j removed (1-based)."""
    r, c = M.shape
    return submatrix(M, [a for a in range(1, r + 1) if a != i], [b for b in range(1, c + 1) if b != j])


def poly_determinant(M: PolyMatrix) -> Polynomial:
    """Determinant by cofactor expansion along successive rows.

    Minors are memoised on the set of remaining columns, so the cost is
    O(2^k k) polynomial products for a k x k matrix.
    """
    k, c = M.shape
    if k != c:
        raise ValueError(f"determinant of a non-square {k}x{c} matrix")
    rows = M.rows
    ctx = M.ctx
    memo: dict = {}

    def det(row: int, cols: tuple) -> Polynomial:
        if row == k:
            return ctx.one()
        hit = memo.get(cols)
        if hit is not None:
            return hit
        acc = ctx.zero()
        for pos, col in enumerate(cols):
            entry = rows[row][col]
            if entry.is_zero():
                continue
            rest = det(row + 1, cols[:pos] + cols[pos + 1:])
            if rest.is_zero():
                continue
            term = entry * rest
            acc = acc - term if pos % 2 else acc + term
        memo[cols] = acc
        return acc

    return det(0, tuple(range(k)))


def principal_minor_sums(X: PolyMatrix) -> list:
    """[s_1, ..., s_n]: sums of the principal l x l minors of a square matrix.

    All minors share one memo table keyed by (row set, column set).
    """
    n, c = X.shape
    if n != c:
        raise ValueError("principal minors need a square matrix")
    ctx = X.ctx
    rows = X.rows
    memo: dict = {}

    def det(rs: tuple, cs: tuple) -> Polynomial:
        if not rs:
            return ctx.one()
        key = (rs, cs)
        hit = memo.get(key)
        if hit is not None:
            return hit
        r0, rrest = rs[0], rs[1:]
        acc = ctx.zero()
        for pos, col in enumerate(cs):
            entry = rows[r0][col]
            if entry.is_zero():
                continue
            term = entry * det(rrest, cs[:pos] + cs[pos + 1:])
            acc = acc - term if pos % 2 else acc + term
        memo[key] = acc
        return acc

    from itertools import combinations

    out = []
    for l in range(1, n + 1):
        acc = ctx.zero()
        for lam in combinations(range(n), l):
            acc = acc + det(lam, lam)
        out.append(acc)
    return out


# ---------------------------------------------------------------------------
# dense rational matrices


def _as_rational_rows(M) -> list:
    rows = [[Fraction(x) for x in r] for r in M]
    if rows and any(len(r) != len(rows[0]) for r in rows):
        raise ValueError("ragged matrix")
    return rows


def _integer_rows(rows: list) -> list:
    out = []
    for r in rows:
        den = lcm(*[x.denominator for x in r]) if r else 1
        out.append([int(x * den) for x in r])
    return out


def bareiss_echelon(M) -> tuple:
    """Fraction-free row echelon form.

    Returns ``(rows, pivots)`` where ``rows`` is the integer echelon matrix and
    ``pivots`` the pivot columns, one per nonzero row.
    """
    A = _integer_rows(_as_rational_rows(M))
    if not A:
        return [], []
    m, ncols = len(A), len(A[0])
    prev = 1
    r = 0
    pivots = []
    for col in range(ncols):
        if r == m:
            break
        piv = next((i for i in range(r, m) if A[i][col] != 0), None)
        if piv is None:
            continue
        if piv != r:
            A[r], A[piv] = A[piv], A[r]
        p = A[r][col]
        for i in range(r + 1, m):
            a = A[i][col]
            row_i = A[i]
            row_r = A[r]
            for j in range(col + 1, ncols):
                # exact division is the Bareiss invariant
                row_i[j] = (p * row_i[j] - a * row_r[j]) // prev
            row_i[col] = 0
        prev = p
        pivots.append(col)
        r += 1
    return A[:r], pivots


def rational_determinant(M) -> Fraction:
    rows = _as_rational_rows(M)
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return Fraction(1)
    scale = Fraction(1)
    for r in rows:
        scale *= lcm(*[x.denominator for x in r])
    A = _integer_rows(rows)
    sign = 1
    prev = 1
    for col in range(n):
        piv = next((i for i in range(col, n) if A[i][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            A[col], A[piv] = A[piv], A[col]
            sign = -sign
        p = A[col][col]
        for i in range(col + 1, n):
            a = A[i][col]
            for j in range(col + 1, n):
                A[i][j] = (p * A[i][j] - a * A[col][j]) // prev
            A[i][col] = 0
        prev = p
    return Fraction(sign * A[n - 1][n - 1]) / scale


def rational_rank(M) -> int:
    return len(bareiss_echelon(M)[1])


def rational_nullspace(M) -> list:
    """Basis of {x : M x = 0}, one vector per free column, entries in Q."""
    rows = _as_rational_rows(M)
    if not rows:
        return []
    ncols = len(rows[0])
    ech, pivots = bareiss_echelon(rows)
    # back substitution on the echelon form, in Q
    R = [[Fraction(x) for x in r] for r in ech]
    for k in range(len(R) - 1, -1, -1):
        c = pivots[k]
        p = R[k][c]
        R[k] = [x / p for x in R[k]]
        for i in range(k):
            f = R[i][c]
            if f:
                R[i] = [a - f * b for a, b in zip(R[i], R[k])]
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for fcol in free:
        v = [Fraction(0)] * ncols
        v[fcol] = Fraction(1)
        for k, c in enumerate(pivots):
            v[c] = -R[k][fcol]
        basis.append(v)
    return basis


def matmul(A, B) -> list:
    return [[sum(Fraction(a) * Fraction(b) for a, b in zip(row, col)) for col in zip(*B)] for row in A]


def transpose(A) -> list:
    return [list(c) for c in zip(*A)]


# ---------------------------------------------------------------------------
# sparse incremental echelon form


class SparseEchelon:
    """Row echelon form of sparse vectors ``{column key: coefficient}``.

    Over Q the stored rows are primitive integer vectors (fraction-free
    reduction followed by removal of the content); over GF(p) the pivot
    entry is normalised to 1. The pivot of a row is its largest column key.
    """

    def __init__(self, characteristic: int = 0):
        self.p = characteristic
        self.rows: dict = {}

    def __len__(self):
        return len(self.rows)

    @property
    def rank(self) -> int:
        return len(self.rows)

    def copy(self) -> "SparseEchelon":
        other = SparseEchelon(self.p)
        other.rows = dict(self.rows)
        return other

    def _normalize(self, v: dict) -> dict:
        if self.p:
            return {k: c % self.p for k, c in v.items() if c % self.p}
        if any(isinstance(c, Fraction) for c in v.values()):
            den = lcm(*[Fraction(c).denominator for c in v.values()])
            v = {k: int(Fraction(c) * den) for k, c in v.items()}
        return {k: c for k, c in v.items() if c}

    def reduce(self, v: dict) -> dict:
        """Remainder of ``v`` after reduction by the stored rows (a scalar multiple over Q)."""
        v = self._normalize(v)
        rows = self.rows
        p = self.p
        ceiling = None
        while v:
            # eliminating pivot k only creates entries below k
            key = None
            for k in v:
                if k in rows and (ceiling is None or k < ceiling) and (key is None or k > key):
                    key = k
            if key is None:
                return v
            ceiling = key
            row = rows[key]
            a = v[key]
            if p:
                for k, c in row.items():
                    nv = (v.get(k, 0) - a * c) % p
                    if nv:
                        v[k] = nv
                    else:
                        v.pop(k, None)
            else:
                b = row[key]
                g = gcd(a, b)
                mb, ma = b // g, a // g
                if mb != 1:
                    for k in v:
                        v[k] *= mb
                for k, c in row.items():
                    nv = v.get(k, 0) - ma * c
                    if nv:
                        v[k] = nv
                    else:
                        v.pop(k, None)
                g = 0
                for c in v.values():
                    g = gcd(g, c)
                    if g == 1:
                        break
                if g > 1:
                    for k in v:
                        v[k] //= g
        return v

    def add(self, v: dict, floor=None) -> bool:
        """Insert ``v``; True iff it was independent of the stored rows.

        With ``floor`` set, only keys >= floor count as coordinates; keys below
        are carried along as bookkeeping tags and never become pivots.
        """
        r = self.reduce(v)
        if floor is not None and not any(k >= floor for k in r):
            return False
        if not r:
            return False
        key = max(r)
        if self.p:
            inv = pow(r[key], -1, self.p)
            r = {k: c * inv % self.p for k, c in r.items()}
        elif r[key] < 0:
            r = {k: -c for k, c in r.items()}
        self.rows[key] = r
        return True

    def contains(self, v: dict) -> bool:
        return not self.reduce(v)


def sparse_nullspace(columns: dict, characteristic: int = 0) -> list:
    """Kernel of a sparse linear map.

    ``columns`` maps an unknown (column key) to its image ``{row key: coeff}``.
    Returns kernel vectors as ``{column key: coeff}`` dicts, integral and
    primitive over Q.
    """
    p = characteristic
    unknowns = sorted(columns)
    pos = {u: i for i, u in enumerate(unknowns)}
    # equations: row key -> {unknown index: coeff}
    eqs: dict = {}
    for u, image in columns.items():
        iu = pos[u]
        for rkey, c in image.items():
            if c:
                eqs.setdefault(rkey, {})[iu] = c
    ech = SparseEchelon(p)
    for rkey in sorted(eqs):
        ech.add(eqs[rkey])
    # reduced row echelon: clear every pivot column from the other rows
    piv_rows = _reduced_rows(ech)
    pivcols = set(piv_rows)
    basis = []
    for fcol in range(len(unknowns)):
        if fcol in pivcols:
            continue
        vec = {fcol: Fraction(1) if not p else 1}
        for pc, row in piv_rows.items():
            c = row.get(fcol)
            if c:
                if p:
                    vec[pc] = (-c) % p
                else:
                    vec[pc] = Fraction(-c, row[pc])
        if not p:
            den = lcm(*[Fraction(c).denominator for c in vec.values()])
            ints = {k: int(Fraction(c) * den) for k, c in vec.items()}
            g = 0
            for c in ints.values():
                g = gcd(g, c)
            vec = {k: c // g for k, c in ints.items()}
        basis.append({unknowns[i]: c for i, c in vec.items()})
    return basis


def _reduced_rows(ech: SparseEchelon) -> dict:
    """Gauss-Jordan back-substitution on a SparseEchelon (pivot -> row)."""
    p = ech.p
    done: dict = {}
    for key in sorted(ech.rows):
        # rows with smaller pivots are already fully reduced
        row = dict(ech.rows[key])
        for pk in sorted((k for k in row if k != key and k in done), reverse=True):
            a = row.get(pk)
            if not a:
                continue
            other = done[pk]
            if p:
                for k, c in other.items():
                    nv = (row.get(k, 0) - a * c) % p
                    if nv:
                        row[k] = nv
                    else:
                        row.pop(k, None)
            else:
                b = other[pk]
                g = gcd(a, b)
                mb, ma = b // g, a // g
                if mb != 1:
                    for k in row:
                        row[k] *= mb
                for k, c in other.items():
                    nv = row.get(k, 0) - ma * c
                    if nv:
                        row[k] = nv
                    else:
                        row.pop(k, None)
        if not p:
            g = 0
            for c in row.values():
                g = gcd(g, c)
            if g > 1:
                row = {k: c // g for k, c in row.items()}
        done[key] = row
    return done


def poly_vector(f: Polynomial) -> dict:
    """Coordinates of f in the monomial basis (packed keys)."""
    return dict(f._terms)


def polynomial_from_vector(ctx: RingContext, vec: dict) -> Polynomial:
    from .ring import _clean

    return Polynomial(ctx, _clean(ctx, {k: ctx.coerce(c) for k, c in vec.items()}))
