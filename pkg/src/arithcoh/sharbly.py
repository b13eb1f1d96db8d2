"""Symbols [v_1, ..., v_{n+k}] on integer column vectors, modulo the
permutation, degeneracy, and scaling relations, with the simplicial
boundary map.

Canonical form: each column is primitive with first nonzero entry positive
(scaling), columns sorted lexicographically with the permutation sign
absorbed into an overall +-1 (permutation), and the zero symbol when the
columns do not span Q^n or a normalized column repeats (degeneracy; a
repeated column is killed by the odd transposition fixing the symbol).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction


def normalize_column(v) -> tuple:
    """Primitive representative with positive leading entry."""
    g = 0
    for x in v:
        g = math.gcd(g, x)
    if g == 0:
        raise ValueError("zero vector in a symbol")
    w = [x // g for x in v]
    for x in w:
        if x != 0:
            if x < 0:
                w = [-y for y in w]
            break
    return tuple(w)


def int_rank(rows) -> int:
    """Rank over Q of a list of integer vectors (fraction-free elimination)."""
    m = [[Fraction(x) for x in r] for r in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    for col in range(ncols):
        piv = None
        for i in range(rank, len(m)):
            if m[i][col]:
                piv = i
                break
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = 1 / m[rank][col]
        m[rank] = [x * inv for x in m[rank]]
        for i in range(len(m)):
            if i != rank and m[i][col]:
                c = m[i][col]
                m[i] = [a - c * b for a, b in zip(m[i], m[rank])]
        rank += 1
    return rank


ZERO = None  # marker for the zero symbol


@dataclass(frozen=True)
class Sharbly:
    """Canonical nonzero symbol: sorted primitive columns plus a sign."""

    n: int
    columns: tuple  # tuple of column tuples, strictly increasing
    sign: int

    @property
    def degree(self) -> int:
        return len(self.columns) - self.n

    def __neg__(self):
        return Sharbly(self.n, self.columns, -self.sign)

    def apply(self, g):
        """Left action of an integer matrix: columns v -> g v."""
        cols = [matvec(g, v) for v in self.columns]
        out = canonicalize(cols)
        if out is ZERO:
            return ZERO
        return Sharbly(self.n, out.columns, out.sign * self.sign)


def matvec(g, v):
    return tuple(sum(g[i][j] * v[j] for j in range(len(v))) for i in range(len(g)))


def perm_sign(perm) -> int:
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j = i
        clen = 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            clen += 1
        if clen % 2 == 0:
            sign = -sign
    return sign


def canonicalize(raw_columns) -> Sharbly | None:
    """Canonical form of [v_1, ..., v_m], or ZERO.

    Zero when the normalized columns repeat or fail to span Q^n."""
    cols = [normalize_column(v) for v in raw_columns]
    n = len(cols[0])
    if len(set(cols)) != len(cols):
        return ZERO
    # descending lexicographic order, so [e_1, ..., e_n] is already canonical
    order = sorted(range(len(cols)), key=lambda i: cols[i], reverse=True)
    inv = [0] * len(order)
    for pos, i in enumerate(order):
        inv[i] = pos
    sign = perm_sign(inv)
    sorted_cols = tuple(cols[i] for i in order)
    if int_rank(sorted_cols) < n:
        return ZERO
    return Sharbly(n, sorted_cols, sign)


class SharblyChain:
    """Formal combination of canonical symbols with coefficients in a ring
    supplied by the caller (integers by default); zero coefficients are
    pruned."""

    def __init__(self, terms=None):
        self.terms: dict = {}
        if terms:
            for s, c in terms:
                self.add(s, c)

    def add(self, s: Sharbly, coeff):
        if s is ZERO:
            return
        key = (s.n, s.columns)
        cur = self.terms.get(key)
        delta = coeff * s.sign
        new = delta if cur is None else cur + delta
        if new:
            self.terms[key] = new
        elif cur is not None:
            del self.terms[key]

    def __eq__(self, other):
        return isinstance(other, SharblyChain) and self.terms == other.terms

    def __len__(self):
        return len(self.terms)

    def is_zero(self):
        return not self.terms

    def items(self):
        """Pairs (canonical positive-sign Sharbly, coefficient)."""
        for (n, cols), c in sorted(self.terms.items()):
            yield Sharbly(n, cols, 1), c

    def __repr__(self):
        return f"SharblyChain({len(self.terms)} terms)"


def boundary(s: Sharbly) -> SharblyChain:
    """sum_i (-1)^i [v_1, ..., v_i omitted, ...], i counted from 1."""
    if s.degree < 1:
        raise ValueError("boundary undefined in degree 0")
    out = SharblyChain()
    for i, _ in enumerate(s.columns):
        face = canonicalize(s.columns[:i] + s.columns[i + 1 :])
        if face is ZERO:
            continue
        out.add(face, (-1) ** (i + 1) * s.sign)
    return out


def boundary_chain(chain: SharblyChain) -> SharblyChain:
    out = SharblyChain()
    for s, c in chain.items():
        for (n, cols), c2 in boundary(s).terms.items():
            out.add(Sharbly(n, cols, 1), c * c2)
    return out


def theta(vertices) -> Sharbly | None:
    """Image of a simplicial cell with ordered vertex vectors: the symbol on
    those vectors.  Degenerate vertex sets map to zero."""
    return canonicalize(list(vertices))
