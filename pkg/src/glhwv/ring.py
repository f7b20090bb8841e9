"""
Exact sparse polynomials in the matrix coordinates xi[i][j] of gl_n.

Monomials are packed into a single python int: each variable owns a fixed
bit field, the first variable (xi[1][1]) in the most significant field.
Adding two keys multiplies the monomials, and comparing keys is exactly the
lexicographic order on the fixed variable order (row-major xi, then the
formal parameters).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Iterator, Mapping, Sequence

_BITS = 16
_MASK = (1 << _BITS) - 1
MAX_DEGREE = _MASK


class ContextMismatch(ValueError):
    pass


class NotWeightHomogeneous(ValueError):
    def __init__(self, first, second):
        self.monomials = (first, second)
        super().__init__(f"monomials {first} and {second} have different torus weights")


class ZeroPolynomial(ValueError):
    pass


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class RingContext:
    """The coordinate ring k[gl_n], optionally with extra commuting parameters.

    ``characteristic`` is 0 (rational coefficients) or a prime p.
    """

    n: int
    characteristic: int = 0
    parameters: tuple = ()

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 2:
            raise ValueError(f"n must be an integer >= 2, got {self.n!r}")
        if self.characteristic != 0 and not _is_prime(self.characteristic):
            raise ValueError(f"characteristic must be 0 or prime, got {self.characteristic}")
        params = tuple(self.parameters)
        if len(set(params)) != len(params):
            raise ValueError("duplicate parameter names")
        for name in params:
            if not re.fullmatch(r"[A-Za-z_]\w*", name) or name == "x":
                raise ValueError(f"bad parameter name {name!r}")
        object.__setattr__(self, "parameters", params)

    # -- variables ---------------------------------------------------------

    @property
    def nvars(self) -> int:
        return self.n * self.n + len(self.parameters)

    def var_index(self, i: int, j: int) -> int:
        if not (1 <= i <= self.n and 1 <= j <= self.n):
            raise IndexError(f"index ({i}, {j}) out of range for n={self.n}")
        return (i - 1) * self.n + (j - 1)

    def param_index(self, name: str) -> int:
        return self.n * self.n + self.parameters.index(name)

    def var_name(self, v: int) -> str:
        if v < self.n * self.n:
            i, j = divmod(v, self.n)
            return f"x[{i + 1}][{j + 1}]"
        return self.parameters[v - self.n * self.n]

    def shift(self, v: int) -> int:
        return _BITS * (self.nvars - 1 - v)

    def unpack(self, key: int) -> tuple:
        """Exponent vector of a packed monomial."""
        nv = self.nvars
        out = [0] * nv
        for v in range(nv - 1, -1, -1):
            out[v] = key & _MASK
            key >>= _BITS
        return tuple(out)

    def pack(self, exponents: Sequence[int]) -> int:
        if len(exponents) != self.nvars:
            raise ValueError("exponent vector has wrong length")
        key = 0
        for e in exponents:
            if e < 0 or e > MAX_DEGREE:
                raise ValueError(f"exponent {e} out of range")
            key = (key << _BITS) | e
        return key

    # -- scalars -----------------------------------------------------------

    def coerce(self, c):
        """Bring a python int/Fraction into the coefficient field."""
        p = self.characteristic
        if p:
            if isinstance(c, Fraction):
                if c.denominator % p == 0:
                    raise ZeroDivisionError(f"{c} has no image mod {p}")
                return c.numerator * pow(c.denominator, -1, p) % p
            return int(c) % p
        if isinstance(c, Fraction):
            return c.numerator if c.denominator == 1 else c
        if isinstance(c, int):
            return c
        if isinstance(c, str):
            return self.coerce(Fraction(c))
        raise TypeError(f"cannot use {type(c).__name__} as an exact coefficient")

    def inverse(self, c):
        if c == 0:
            raise ZeroDivisionError("inverse of zero")
        if self.characteristic:
            return pow(int(c), -1, self.characteristic)
        return self.coerce(Fraction(1) / Fraction(c))

    # -- constructors ------------------------------------------------------

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.constant(1)

    def constant(self, c) -> "Polynomial":
        c = self.coerce(c)
        return Polynomial(self, {0: c} if c else {})

    def xi(self, i: int, j: int) -> "Polynomial":
        return Polynomial(self, {1 << self.shift(self.var_index(i, j)): self.coerce(1)})

    def param(self, name: str) -> "Polynomial":
        return Polynomial(self, {1 << self.shift(self.param_index(name)): self.coerce(1)})

    def variable_matrix(self):
        from .linalg import PolyMatrix

        return PolyMatrix([[self.xi(i, j) for j in range(1, self.n + 1)] for i in range(1, self.n + 1)])

    def with_parameters(self, *names: str) -> "RingContext":
        """Context with ``names`` appended to the parameter list (existing ones kept)."""
        extra = tuple(nm for nm in names if nm not in self.parameters)
        return RingContext(self.n, self.characteristic, self.parameters + extra)

    def embed(self, f: "Polynomial") -> "Polynomial":
        """Image of ``f`` in this context, which must extend f's context."""
        src = f.ctx
        if src == self:
            return f
        if (
            src.n != self.n
            or src.characteristic != self.characteristic
            or self.parameters[: len(src.parameters)] != src.parameters
        ):
            raise ContextMismatch(f"cannot embed {src} into {self}")
        s = _BITS * (self.nvars - src.nvars)
        return Polynomial(self, {k << s: c for k, c in f._terms.items()})

    def parse(self, text: str) -> "Polynomial":
        return parse_polynomial(self, text)


class Polynomial:
    """Immutable sparse polynomial over a :class:`RingContext`.

    Terms are stored as ``{packed monomial: coefficient}`` with no zero
    coefficients, so equal polynomials have identical term maps.
    """

    __slots__ = ("ctx", "_terms", "_degree", "_hash")

    def __init__(self, ctx: RingContext, terms: dict):
        self.ctx = ctx
        self._terms = terms
        self._degree = None
        self._hash = None

    @classmethod
    def from_terms(cls, ctx: RingContext, terms: Iterable) -> "Polynomial":
        """Build from ``(exponent dict or tuple, coefficient)`` pairs."""
        acc: dict = {}
        for mono, c in terms:
            if isinstance(mono, Mapping):
                exps = [0] * ctx.nvars
                for var, e in mono.items():
                    if isinstance(var, tuple):
                        var = ctx.var_index(*var)
                    elif isinstance(var, str):
                        var = ctx.param_index(var)
                    exps[var] += e
                key = ctx.pack(exps)
            else:
                key = ctx.pack(mono)
            acc[key] = acc.get(key, 0) + ctx.coerce(c)
        return cls(ctx, _clean(ctx, acc))

    # -- inspection --------------------------------------------------------

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def terms(self) -> Iterator[tuple]:
        """(exponent tuple, coefficient) pairs, lex-descending."""
        for key in sorted(self._terms, reverse=True):
            yield self.ctx.unpack(key), self._terms[key]

    def coefficients(self) -> list:
        return [self._terms[k] for k in sorted(self._terms, reverse=True)]

    def coefficient(self, exponents) -> object:
        return self._terms.get(self.ctx.pack(exponents), 0)

    def leading_coefficient(self):
        if not self._terms:
            return 0
        return self._terms[max(self._terms)]

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if self._degree is None:
            self._degree = max((sum(self.ctx.unpack(k)) for k in self._terms), default=-1)
        return self._degree

    def is_homogeneous(self) -> bool:
        degs = {sum(self.ctx.unpack(k)) for k in self._terms}
        return len(degs) <= 1

    def homogeneous_components(self) -> dict:
        out: dict = {}
        for k, c in self._terms.items():
            out.setdefault(sum(self.ctx.unpack(k)), {})[k] = c
        return {d: Polynomial(self.ctx, t) for d, t in sorted(out.items())}

    def uses_parameters(self) -> bool:
        low = _BITS * len(self.ctx.parameters)
        if low == 0:
            return False
        lowmask = (1 << low) - 1
        return any(k & lowmask for k in self._terms)

    def content(self) -> int:
        """gcd of the (integer) coefficients; 0 for the zero polynomial."""
        g = 0
        for c in self._terms.values():
            if isinstance(c, Fraction):
                raise ValueError("content is only defined for integral polynomials")
            g = gcd(g, c)
        return g

    def sign_normalized(self) -> "Polynomial":
        """Scale by -1 if needed so the lex-leading coefficient is positive."""
        if self.ctx.characteristic == 0 and self._terms and self.leading_coefficient() < 0:
            return -self
        return self

    # -- arithmetic --------------------------------------------------------

    def _check(self, other: "Polynomial"):
        if other.ctx != self.ctx:
            raise ContextMismatch(f"{self.ctx} vs {other.ctx}")

    def _lift(self, other):
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        return self.ctx.constant(other)

    def __add__(self, other):
        other = self._lift(other)
        a, b = self._terms, other._terms
        if len(a) < len(b):
            a, b = b, a
        out = dict(a)
        for k, c in b.items():
            out[k] = out.get(k, 0) + c
        return Polynomial(self.ctx, _clean(self.ctx, out))

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ctx, _clean(self.ctx, {k: -c for k, c in self._terms.items()}))

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def scale(self, c) -> "Polynomial":
        c = self.ctx.coerce(c)
        if not c:
            return self.ctx.zero()
        return Polynomial(self.ctx, _clean(self.ctx, {k: v * c for k, v in self._terms.items()}))

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(other)
        self._check(other)
        a, b = self._terms, other._terms
        if not a or not b:
            return self.ctx.zero()
        if self.degree() + other.degree() > MAX_DEGREE:
            raise OverflowError("product degree exceeds the monomial packing width")
        if len(a) < len(b):
            a, b = b, a
        out: dict = {}
        get = out.get
        for kb, cb in b.items():
            for ka, ca in a.items():
                k = ka + kb
                out[k] = get(k, 0) + ca * cb
        return Polynomial(self.ctx, _clean(self.ctx, out))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Polynomial):
            raise TypeError("polynomial division is not supported")
        return self.scale(self.ctx.inverse(self.ctx.coerce(other)))

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = self.ctx.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ctx == other.ctx and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == ({0: self.ctx.coerce(other)} if self.ctx.coerce(other) else {})
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ctx, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self):
        return f"Polynomial({format_polynomial(self)!r})"

    def __str__(self):
        return format_polynomial(self)

    # -- calculus and evaluation -------------------------------------------

    def diff(self, i: int, j: int) -> "Polynomial":
        return partial_derivative(self, i, j)

    def diff_var(self, v: int) -> "Polynomial":
        ctx = self.ctx
        s = ctx.shift(v)
        one = 1 << s
        out = {}
        for k, c in self._terms.items():
            e = (k >> s) & _MASK
            if e:
                out[k - one] = c * e
        return Polynomial(ctx, _clean(ctx, out))

    def evaluate(self, values, params: Mapping | None = None):
        return evaluate(self, values, params)

    def torus_weight(self) -> tuple:
        return torus_weight(self)


def _clean(ctx: RingContext, terms: dict) -> dict:
    p = ctx.characteristic
    if p:
        return {k: c % p for k, c in terms.items() if c % p}
    out = {}
    for k, c in terms.items():
        if c:
            if type(c) is not int and c.denominator == 1:
                c = c.numerator
            out[k] = c
    return out


# ---------------------------------------------------------------------------
# operations


def partial_derivative(f: Polynomial, i: int, j: int) -> Polynomial:
    """d f / d xi[i][j], with integer bookkeeping valid in any characteristic."""
    return f.diff_var(f.ctx.var_index(i, j))


def monomial_weight(ctx: RingContext, key: int) -> tuple:
    """Torus weight of a packed monomial; xi[i][j] has weight e_j - e_i."""
    n = ctx.n
    w = [0] * n
    exps = ctx.unpack(key)
    for v in range(n * n):
        e = exps[v]
        if e:
            i, j = divmod(v, n)
            w[j] += e
            w[i] -= e
    return tuple(w)


def torus_weight(f: Polynomial) -> tuple:
    """Common torus weight of the monomials of ``f``.

    Raises ZeroPolynomial for f = 0 and NotWeightHomogeneous (carrying two
    offending monomials) when the monomials disagree.
    """
    if f.is_zero():
        raise ZeroPolynomial("the zero polynomial has no weight")
    if f.uses_parameters():
        raise ValueError("torus weight is undefined in the presence of parameters")
    ctx = f.ctx
    weight = None
    first = None
    for k in f._terms:
        w = monomial_weight(ctx, k)
        if weight is None:
            weight, first = w, k
        elif w != weight:
            raise NotWeightHomogeneous(_mono_text(ctx, first), _mono_text(ctx, k))
    return weight


def evaluate(f: Polynomial, values, params: Mapping | None = None):
    """Exact value of f at the n x n matrix ``values`` (and parameter values)."""
    ctx = f.ctx
    n = ctx.n
    if len(values) != n or any(len(row) != n for row in values):
        raise ValueError(f"expected an {n}x{n} matrix")
    point = [ctx.coerce(values[i][j]) for i in range(n) for j in range(n)]
    params = params or {}
    for name in ctx.parameters:
        if name in params:
            point.append(ctx.coerce(params[name]))
        else:
            point.append(None)
    total = 0
    for key, c in f._terms.items():
        exps = ctx.unpack(key)
        term = c
        for v, e in enumerate(exps):
            if e:
                x = point[v]
                if x is None:
                    raise ValueError(f"no value given for parameter {ctx.var_name(v)}")
                term = term * x**e
                if not term:
                    break
        total += term
    return ctx.coerce(total) if not ctx.characteristic else total % ctx.characteristic


def substitute(f: Polynomial, mapping: Mapping[int, Polynomial], target: RingContext | None = None) -> Polynomial:
    """Replace variable ``v`` by ``mapping[v]``; other variables are kept.

    ``target`` must extend f's context; the images live there.
    """
    target = target or f.ctx
    src = f.ctx
    lift = _BITS * (target.nvars - src.nvars)
    if lift < 0 or target.n != src.n:
        raise ContextMismatch("target context must extend the source context")
    if not mapping:
        return target.embed(f)
    for img in mapping.values():
        if img.ctx != target:
            raise ContextMismatch("substitution images must live in the target context")
    vars_ = sorted(mapping)
    shifts = [src.shift(v) for v in vars_]
    clear = 0
    for s in shifts:
        clear |= _MASK << s
    groups: dict = {}
    for k, c in f._terms.items():
        alpha = tuple((k >> s) & _MASK for s in shifts)
        rest = (k & ~clear) << lift
        g = groups.setdefault(alpha, {})
        g[rest] = c
    powers: dict = {}

    def power(idx, e):
        key = (idx, e)
        if key not in powers:
            powers[key] = mapping[vars_[idx]] ** e
        return powers[key]

    acc: dict = {}
    get = acc.get
    for alpha, rest in groups.items():
        prod = target.one()
        for idx, e in enumerate(alpha):
            if e:
                prod = prod * power(idx, e)
        for kp, cp in prod._terms.items():
            for kr, cr in rest.items():
                k = kp + kr
                acc[k] = get(k, 0) + cp * cr
    return Polynomial(target, _clean(target, acc))


def substitute_matrix(f: Polynomial, M) -> Polynomial:
    """f evaluated at the matrix of polynomials M (replace xi[i][j] by M[i][j])."""
    ctx = f.ctx
    n = ctx.n
    rows = M.rows if hasattr(M, "rows") else M
    if len(rows) != n or any(len(r) != n for r in rows):
        raise ValueError(f"expected an {n}x{n} matrix of polynomials")
    entries = [[e if isinstance(e, Polynomial) else None for e in r] for r in rows]
    target = None
    for r in entries:
        for e in r:
            if e is not None:
                target = e.ctx
                break
        if target:
            break
    target = target or ctx
    mapping = {}
    for i in range(n):
        for j in range(n):
            e = rows[i][j]
            if not isinstance(e, Polynomial):
                e = target.constant(e)
            if e.ctx != target:
                raise ContextMismatch("matrix entries must share one context")
            if target.parameters[: len(ctx.parameters)] != ctx.parameters:
                raise ContextMismatch("matrix context must extend the polynomial's context")
            if e == target.xi(i + 1, j + 1):
                continue
            mapping[ctx.var_index(i + 1, j + 1)] = e
    return substitute(f, mapping, target)


def rename_variables(f: Polynomial, perm: Mapping[int, int]) -> Polynomial:
    """Apply a permutation of variable indices (v -> perm[v]) to every monomial."""
    ctx = f.ctx
    nv = ctx.nvars
    table = [perm.get(v, v) for v in range(nv)]
    if sorted(table) != list(range(nv)):
        raise ValueError("not a permutation of the variables")
    out = {}
    for k, c in f._terms.items():
        exps = ctx.unpack(k)
        new = [0] * nv
        for v, e in enumerate(exps):
            new[table[v]] = e
        out[ctx.pack(new)] = c
    return Polynomial(ctx, out)


# ---------------------------------------------------------------------------
# text format:  -3/2 * x[1][2]^2 * x[3][1] + 1 * c + 5


def _coef_text(c) -> str:
    if isinstance(c, Fraction):
        return f"{c.numerator}/{c.denominator}"
    return str(c)


def _mono_text(ctx: RingContext, key: int) -> str:
    parts = []
    for v, e in enumerate(ctx.unpack(key)):
        if e:
            name = ctx.var_name(v)
            parts.append(name if e == 1 else f"{name}^{e}")
    return " * ".join(parts) if parts else "1"


def format_polynomial(f: Polynomial) -> str:
    if f.is_zero():
        return "0"
    ctx = f.ctx
    pieces = []
    for idx, key in enumerate(sorted(f._terms, reverse=True)):
        c = f._terms[key]
        neg = ctx.characteristic == 0 and c < 0
        body = _coef_text(-c if neg else c)
        if key:
            body += " * " + _mono_text(ctx, key)
        if idx == 0:
            pieces.append(("-" if neg else "") + body)
        else:
            pieces.append((" - " if neg else " + ") + body)
    return "".join(pieces)


_FACTOR = re.compile(
    r"\s*(?:(?P<num>\d+(?:/\d+)?)|x\[(?P<i>\d+)\]\[(?P<j>\d+)\]|(?P<name>[A-Za-z_]\w*))(?:\s*\^\s*(?P<exp>\d+))?\s*"
)


def parse_polynomial(ctx: RingContext, text: str) -> Polynomial:
    """Inverse of :func:`format_polynomial` (also accepts omitted unit coefficients)."""
    s = text.strip()
    if not s:
        raise ValueError("empty polynomial text")
    terms = []
    pos = 0
    sign = 1
    m = re.match(r"\s*([+-])", s)
    if m:
        sign = -1 if m.group(1) == "-" else 1
        pos = m.end()
    while True:
        coef = Fraction(sign)
        exps = [0] * ctx.nvars
        while True:
            m = _FACTOR.match(s, pos)
            if not m or m.end() == pos:
                raise ValueError(f"cannot parse polynomial near {s[pos:pos + 20]!r}")
            pos = m.end()
            e = int(m.group("exp") or 1)
            if m.group("num") is not None:
                coef *= Fraction(m.group("num")) ** e
            elif m.group("i") is not None:
                exps[ctx.var_index(int(m.group("i")), int(m.group("j")))] += e
            else:
                name = m.group("name")
                if name not in ctx.parameters:
                    raise ValueError(f"unknown parameter {name!r}")
                exps[ctx.param_index(name)] += e
            if pos < len(s) and s[pos] == "*":
                pos += 1
                continue
            break
        terms.append((exps, coef))
        if pos >= len(s):
            break
        if s[pos] not in "+-":
            raise ValueError(f"unexpected character {s[pos]!r} in polynomial text")
        sign = -1 if s[pos] == "-" else 1
        pos += 1
    return Polynomial.from_terms(ctx, terms)
