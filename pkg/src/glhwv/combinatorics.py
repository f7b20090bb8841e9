"""
Weights, partitions and tableaux for GL_n, and the highest weight tensor E_lambda.

Weights are plain tuples of ints in the basis e_1, ..., e_n.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations, product
from math import comb
from typing import Sequence


def weight_lambda_t(n: int, t: int) -> tuple:
    """(t, 0, ..., 0, -1, ..., -1) with t entries -1."""
    _check_t(n, t)
    return (t,) + (0,) * (n - 1 - t) + (-1,) * t


def weight_mu_t(n: int, t: int) -> tuple:
    """(1, ..., 1, 0, ..., 0, -t) with t entries 1."""
    _check_t(n, t)
    return (1,) * t + (0,) * (n - 1 - t) + (-t,)


def _check_t(n, t):
    if n < 2 or not 1 <= t <= n - 1:
        raise ValueError(f"need 1 <= t <= n-1, got n={n}, t={t}")


def is_dominant(lam: Sequence[int]) -> bool:
    return all(a >= b for a, b in zip(lam, lam[1:]))


def in_root_lattice(lam: Sequence[int]) -> bool:
    return sum(lam) == 0


def _dominant_root_weights(n: int, lo: int, hi: int):
    """Weakly decreasing n-tuples with entries in [lo, hi] and coordinate sum 0."""

    def rec(prefix, remaining, top):
        if remaining == 0:
            if sum(prefix) == 0:
                yield tuple(prefix)
            return
        s = sum(prefix)
        for x in range(top, lo - 1, -1):
            # the rest lies in [lo, x]
            if s + x + (remaining - 1) * x < 0:
                break
            if s + x + (remaining - 1) * lo > 0:
                continue
            yield from rec(prefix + [x], remaining - 1, x)

    yield from rec([], n, hi)


def is_primitive(lam: Sequence[int]) -> bool:
    """Nonzero, dominant, in the root lattice, and not a sum of two such weights."""
    lam = tuple(lam)
    if not any(lam) or not is_dominant(lam) or not in_root_lattice(lam):
        return False
    n = len(lam)
    # mu and lam - mu dominant with zero coordinate sums force lam_n <= mu_i <= lam_1
    for mu in _dominant_root_weights(n, lam[-1], lam[0]):
        if not any(mu):
            continue
        rest = tuple(a - b for a, b in zip(lam, mu))
        if any(rest) and is_dominant(rest):
            return False
    return True


def weight_predicates(lam: Sequence[int]) -> dict:
    return {
        "dominant": is_dominant(lam),
        "in_root_lattice": in_root_lattice(lam),
        "primitive": is_primitive(lam),
    }


@dataclass(frozen=True)
class BipartitionSplit:
    plus: tuple
    minus: tuple

    def weight(self, n: int) -> tuple:
        """[plus, minus] = plus - w0(minus)."""
        if len(self.plus) + len(self.minus) > n:
            raise ValueError("l(plus) + l(minus) exceeds n")
        p = list(self.plus) + [0] * (n - len(self.plus))
        m = list(self.minus) + [0] * (n - len(self.minus))
        return tuple(a - b for a, b in zip(p, reversed(m)))


def split(lam: Sequence[int]) -> BipartitionSplit:
    """The unique partitions (plus, minus) with lam = plus - w0(minus)."""
    lam = tuple(lam)
    if not is_dominant(lam):
        raise ValueError(f"{lam} is not dominant")
    plus = tuple(x for x in lam if x > 0)
    minus = tuple(-x for x in reversed(lam) if x < 0)
    return BipartitionSplit(plus, minus)


def combine(plus: Sequence[int], minus: Sequence[int], n: int) -> tuple:
    return BipartitionSplit(tuple(plus), tuple(minus)).weight(n)


# ---------------------------------------------------------------------------
# tableaux


def kostka_count(shape: Sequence[int], content: Sequence[int]) -> int:
    """Number of tableaux of ``shape`` (rows weakly increasing, columns strictly
    increasing) containing the value i exactly content[i-1] times."""
    shape = tuple(x for x in shape if x)
    if any(a < b for a, b in zip(shape, shape[1:])) or any(x < 0 for x in shape):
        raise ValueError(f"{shape} is not a partition")
    content = tuple(content)
    if any(c < 0 for c in content):
        raise ValueError("content must be nonnegative")
    if sum(shape) != sum(content):
        raise ValueError(f"|shape| = {sum(shape)} but content sums to {sum(content)}")
    return _kostka(shape, content)


@lru_cache(maxsize=None)
def _kostka(shape: tuple, content: tuple) -> int:
    # place the largest value last: remove a horizontal strip of that size
    if not content:
        return 1 if not shape else 0
    k = content[-1]
    rest = content[:-1]
    if k == 0:
        return _kostka(shape, rest)
    if len(shape) > len(content):
        return 0
    total = 0
    for inner in _horizontal_strip_removals(shape, k):
        total += _kostka(inner, rest)
    return total


def _horizontal_strip_removals(shape: tuple, k: int):
    """Partitions mu inside shape with shape/mu a horizontal strip of size k."""
    rows = len(shape)

    def rec(i, left, acc):
        if i == rows:
            if left == 0:
                yield tuple(x for x in acc if x)
            return
        lower = shape[i + 1] if i + 1 < rows else 0
        # mu_i ranges over [shape_{i+1}, shape_i]
        for take in range(0, min(left, shape[i] - lower) + 1):
            yield from rec(i + 1, left - take, acc + [shape[i] - take])

    yield from rec(0, k, [])


def semistandard_tableaux(shape: Sequence[int], content: Sequence[int]) -> list:
    """All tableaux counted by :func:`kostka_count`, by cell-by-cell backtracking."""
    shape = tuple(x for x in shape if x)
    n = len(content)
    cells = [(r, c) for r, length in enumerate(shape) for c in range(length)]
    grid = [[0] * length for length in shape]
    left = list(content)
    out = []

    def rec(pos):
        if pos == len(cells):
            out.append(tuple(tuple(row) for row in grid))
            return
        r, c = cells[pos]
        lo = grid[r][c - 1] if c else 1
        if r:
            lo = max(lo, grid[r - 1][c] + 1)
        for val in range(lo, n + 1):
            if left[val - 1]:
                left[val - 1] -= 1
                grid[r][c] = val
                rec(pos + 1)
                left[val - 1] += 1
        grid[r][c] = 0

    if sum(shape) == sum(content):
        rec(0)
    return out


def zero_weight_multiplicity(lam: Sequence[int]) -> int:
    """dim L(lam)_0 for dominant root-lattice lam, via the determinant twist:
    shift by b(1, ..., 1) to a partition and count tableaux of content b(1, ..., 1)."""
    lam = tuple(lam)
    if not is_dominant(lam) or not in_root_lattice(lam):
        raise ValueError(f"{lam} must be dominant and in the root lattice")
    b = max(0, -lam[-1])
    shape = tuple(x + b for x in lam)
    return kostka_count(shape, (b,) * len(lam))


def hook_count(n: int, t: int) -> int:
    return comb(n - 1, t)


# ---------------------------------------------------------------------------
# Young symmetrizers and E_lambda


def canonical_tableau(shape: Sequence[int]) -> list:
    """T(i, j) = shape_1 + ... + shape_{i-1} + j: fill row by row with 1..t."""
    out = []
    start = 0
    for length in shape:
        out.append(list(range(start + 1, start + length + 1)))
        start += length
    return out


def column_stabilizer(shape: Sequence[int]) -> list:
    """Column stabiliser of the canonical tableau as (perm, sign) pairs.

    ``perm`` is a tuple of images of 0..t-1 (0-based positions).
    """
    T = canonical_tableau(shape)
    t = sum(shape)
    columns = []
    for c in range(shape[0] if shape else 0):
        columns.append([T[r][c] - 1 for r in range(len(shape)) if c < shape[r]])
    out = []
    for choice in product(*[list(permutations(col)) for col in columns]):
        perm = list(range(t))
        sign = 1
        for col, img in zip(columns, choice):
            for a, b in zip(col, img):
                perm[a] = b
            sign *= _sign([col.index(x) for x in img])
        out.append((tuple(perm), sign))
    return out


def _sign(perm: Sequence[int]) -> int:
    perm = list(perm)
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j = i
        length = 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def _place_permute(word: Sequence[int], perm: Sequence[int]) -> tuple:
    """Move the factor at position i to position perm[i]."""
    out = [0] * len(word)
    for i, x in enumerate(word):
        out[perm[i]] = x
    return tuple(out)


def antisymmetrized_words(shape: Sequence[int], word: Sequence[int]) -> list:
    """A_shape . (basis tensor with index ``word``) as [(sign, word)]."""
    return [(s, _place_permute(word, p)) for p, s in column_stabilizer(shape)]


def row_word(shape: Sequence[int]) -> tuple:
    """Position p of the canonical tableau lies in row row_word[p] (1-based)."""
    return tuple(r + 1 for r, length in enumerate(shape) for _ in range(length))


class TensorExpression:
    """Integer combination of elementary tensors E_{a1 b1} (x) ... (x) E_{at bt} in gl_n^{(x)t}.

    Terms are kept canonical: a dict from the tuple of index pairs to a
    nonzero integer coefficient.
    """

    def __init__(self, n: int, t: int, terms=()):
        self.n = n
        self.t = t
        acc: dict = {}
        for coef, pairs in terms:
            pairs = tuple((int(a), int(b)) for a, b in pairs)
            if len(pairs) != t:
                raise ValueError(f"term of length {len(pairs)} in a degree {t} tensor")
            for a, b in pairs:
                if not (1 <= a <= n and 1 <= b <= n):
                    raise ValueError(f"index pair {(a, b)} out of range")
            acc[pairs] = acc.get(pairs, 0) + coef
        self.terms = {k: v for k, v in sorted(acc.items()) if v}

    def __iter__(self):
        return iter((c, pairs) for pairs, c in self.terms.items())

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        return isinstance(other, TensorExpression) and (self.n, self.t, self.terms) == (other.n, other.t, other.terms)

    def __neg__(self):
        return TensorExpression(self.n, self.t, [(-c, p) for c, p in self])

    def __add__(self, other):
        if (self.n, self.t) != (other.n, other.t):
            raise ValueError("tensor degree or size mismatch")
        return TensorExpression(self.n, self.t, list(self) + list(other))

    def permute_positions(self, perm: Sequence[int]) -> "TensorExpression":
        return TensorExpression(self.n, self.t, [(c, _place_permute(p, perm)) for c, p in self])

    def term_weights(self) -> set:
        out = set()
        for _, pairs in self:
            w = [0] * self.n
            for a, b in pairs:
                w[a - 1] += 1
                w[b - 1] -= 1
            out.add(tuple(w))
        return out

    def __repr__(self):
        parts = []
        for c, pairs in self:
            body = "(x)".join(f"E{a}{b}" if self.n < 10 else f"E[{a},{b}]" for a, b in pairs)
            parts.append(f"{c:+d}*{body}")
        return "TensorExpression(" + " ".join(parts) + ")"


def highest_weight_tensor(lam: Sequence[int]) -> TensorExpression:
    """E_lambda = A_{plus} e_{plus} (x) A_{minus} e*_{minus}, paired factor by factor."""
    lam = tuple(lam)
    n = len(lam)
    if not any(lam) or not is_dominant(lam) or not in_root_lattice(lam):
        raise ValueError(f"{lam} must be nonzero, dominant and in the root lattice")
    sp = split(lam)
    t = sum(sp.plus)
    left = antisymmetrized_words(sp.plus, row_word(sp.plus))
    right_word = tuple(n - r + 1 for r in row_word(sp.minus))
    right = antisymmetrized_words(sp.minus, right_word)
    terms = []
    for s1, a in left:
        for s2, b in right:
            terms.append((s1 * s2, tuple(zip(a, b))))
    return TensorExpression(n, t, terms)


def position_symmetry(E: TensorExpression) -> list:
    """Permutations of tensor positions mapping E to +E or -E."""
    out = []
    for perm in permutations(range(E.t)):
        img = E.permute_positions(perm)
        if img == E or img == -E:
            out.append(perm)
    return out
