"""Dirichlet characters (Z/N)^x -> GF(p)^x.

The character basis follows the classical CRT convention: one cyclic factor
per prime power q | N (the 2-part contributing factors generated by -1 and 5
when 8 | N), generators lifted to be 1 modulo the complementary part, listed
with the 2-part first and odd primes in increasing order.  Basis character i
sends generator j to delta_ij in the canonical root of unity of the factor
order.

The canonical root of unity of order d in GF(p) is g0^((p-1)/d) for the
smallest primitive root g0 mod p.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .ffield import is_admissible_prime, smallest_primitive_root, unit_group_exponent


def crt_lift(residues: list[tuple[int, int]]) -> int:
    """x with x = r (mod m) for each (r, m); moduli must be coprime."""
    x, m = 0, 1
    for r, q in residues:
        g, inv = 0, pow(m % q, -1, q) if math.gcd(m % q if m % q else q, q) == 1 else None
        if inv is None:
            raise ValueError("moduli not coprime")
        t = (r - x) * inv % q
        x += m * t
        m *= q
    return x % m


def unit_group_generators(N: int) -> list[tuple[int, int]]:
    """Canonical cyclic decomposition of (Z/N)^x as [(generator, order)].

    Trivial factors are omitted, so N = 1, 2 give the empty list."""
    if N <= 2:
        return []
    parts = []  # (prime power q, local generators [(g mod q, order)])
    M = N
    if M % 2 == 0:
        e = 0
        while M % 2 == 0:
            M //= 2
            e += 1
        q = 2**e
        if e == 2:
            parts.append((q, [(3, 2)]))
        elif e >= 3:
            parts.append((q, [(q - 1, 2), (5, 2 ** (e - 2))]))
        # e == 1: trivial factor, skipped
    ell = 3
    while ell * ell <= M or M > 1:
        if M % ell == 0:
            e = 0
            while M % ell == 0:
                M //= ell
                e += 1
            q = ell**e
            g = smallest_primitive_root(ell)
            if e > 1:
                # lift to a generator mod ell^e
                if pow(g, (ell - 1) * ell ** (e - 2) if e >= 2 else ell - 1, q) == 1:
                    g += ell
                # ensure g^phi(q)/ell != 1 for primitivity
                phi = (ell - 1) * ell ** (e - 1)
                ok = all(pow(g, phi // f, q) != 1 for f in _prime_factors(phi))
                if not ok:
                    for cand in range(2, q):
                        if math.gcd(cand, q) == 1 and all(
                            pow(cand, phi // f, q) != 1 for f in _prime_factors(phi)
                        ):
                            g = cand
                            break
                parts.append((q, [(g % q, phi)]))
            else:
                parts.append((q, [(g, ell - 1)]))
        if ell * ell > M:
            break
        ell += 2
    if M > 1:
        parts.append((M, [(smallest_primitive_root(M), M - 1)]))
    parts.sort(key=lambda t: 0 if t[0] % 2 == 0 else t[0])
    gens = []
    for q, local in parts:
        rest = N // q
        for g, order in local:
            if rest == 1:
                gens.append((g % N, order))
            else:
                gens.append((crt_lift([(g, q), (1, rest)]), order))
    return gens


def _prime_factors(n: int) -> set[int]:
    out = set()
    d = 2
    while d * d <= n:
        while n % d == 0:
            out.add(d)
            n //= d
        d += 1
    if n > 1:
        out.add(n)
    return out


@lru_cache(maxsize=None)
def canonical_root_of_unity(p: int, d: int) -> int:
    """Generator of the order-d subgroup of GF(p)^x: g0^((p-1)/d) for the
    smallest primitive root g0."""
    if (p - 1) % d != 0:
        raise ValueError(f"no elements of order {d} in GF({p})^x")
    g0 = smallest_primitive_root(p)
    return pow(g0, (p - 1) // d, p)


@dataclass(frozen=True)
class DirichletChar:
    """A character (Z/N)^x -> GF(p)^x, stored as its full value table.

    values[m] is chi(m) for gcd(m, N) = 1 and 0 otherwise (index mod N).
    Comparison is by value table, so differently-presented characters
    compare equal.
    """

    N: int
    p: int
    values: tuple

    def __call__(self, m: int) -> int:
        return self.values[m % self.N] if self.N > 1 else (1 if True else 0)

    def eval(self, m: int) -> int:
        if self.N == 1:
            return 1
        return self.values[m % self.N]

    @property
    def parity(self) -> int:
        """chi(-1), +1 (even) or -1 as an integer sign."""
        v = self.eval(-1)
        return 1 if v == 1 else -1

    @property
    def order(self) -> int:
        d = 1
        cur = self
        triv = trivial_char(self.N, self.p)
        while cur != triv:
            cur = cur * self
            d += 1
        return d

    def __mul__(self, other: "DirichletChar") -> "DirichletChar":
        if (self.N, self.p) != (other.N, other.p):
            raise ValueError("character modulus/field mismatch")
        p = self.p
        vals = tuple(
            (a * b) % p if a and b else 0 for a, b in zip(self.values, other.values)
        )
        return DirichletChar(self.N, p, vals)

    def __pow__(self, e: int) -> "DirichletChar":
        if e < 0:
            e %= self.order
        out = trivial_char(self.N, self.p)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def conductor(self) -> int:
        """Smallest M | N such that the character factors through (Z/M)^x."""
        for M in sorted(_divisors(self.N)):
            if self._factors_through(M):
                return M
        return self.N

    def _factors_through(self, M: int) -> bool:
        # chi factors through (Z/M)^x iff chi is trivial on units = 1 mod M
        for m in range(1, self.N + 1):
            if math.gcd(m, self.N) == 1 and m % M == 1 % M:
                if self.eval(m) != 1:
                    return False
        return True

    def restrict(self, M: int, p: int | None = None) -> "DirichletChar":
        """The character mod M inducing this one; M must be a multiple of
        the conductor dividing N."""
        p = p or self.p
        if self.N % M != 0 or M % self.conductor() != 0:
            raise ValueError("invalid restriction modulus")
        vals = [0] * M
        for a in range(M):
            if math.gcd(a, M) != 1:
                continue
            # find a lift coprime to N
            b = a
            while math.gcd(b, self.N) != 1:
                b += M
            vals[a] = self.eval(b)
        if M == 1:
            vals = [1]
        return DirichletChar(M, p, tuple(vals))

    def galois_orbit(self) -> set:
        d = self.order
        return {self**a for a in range(1, d + 1) if math.gcd(a, d) == 1}

    def is_trivial(self) -> bool:
        return self == trivial_char(self.N, self.p)


def _divisors(n: int) -> list[int]:
    out = [d for d in range(1, n + 1) if n % d == 0]
    return out


@lru_cache(maxsize=None)
def trivial_char(N: int, p: int) -> DirichletChar:
    if N == 1:
        return DirichletChar(1, p, (1,))
    vals = tuple(1 if math.gcd(m, N) == 1 else 0 for m in range(N))
    return DirichletChar(N, p, vals)


def char_from_generator_images(N: int, p: int, images: list[int]) -> DirichletChar:
    """Character defined by images of the canonical generators."""
    gens = unit_group_generators(N)
    if len(images) != len(gens):
        raise ValueError("need one image per basis generator")
    if N == 1:
        return trivial_char(1, p)
    # discrete logs over the small group by direct expansion
    vals = [0] * N
    vals[1 % N] = 1
    frontier = {1 % N: [0] * len(gens)}
    # enumerate the full group as products of generator powers
    exps = [0] * len(gens)
    orders = [o for _, o in gens]

    def rec(i, cur):
        if i == len(gens):
            v = 1
            for img, e, (g, o) in zip(images, exps, gens):
                v = v * pow(img, e, p) % p
            vals[cur] = v
            return
        x = cur
        for e in range(orders[i]):
            exps[i] = e
            rec(i + 1, x)
            x = x * gens[i][0] % N
        exps[i] = 0

    rec(0, 1 % N)
    return DirichletChar(N, p, tuple(vals))


@lru_cache(maxsize=None)
def character_basis(N: int, p: int) -> tuple:
    """Basis characters chi_{N,i}, one per cyclic factor of (Z/N)^x, sending
    their generator to the canonical root of unity of the factor order.

    Requires p admissible for N so the needed roots of unity exist."""
    if N > 1 and not is_admissible_prime(p, N):
        raise ValueError(f"p={p} inadmissible for N={N}: exponent of the unit group must divide p-1")
    gens = unit_group_generators(N)
    basis = []
    for i, (g, order) in enumerate(gens):
        images = [1] * len(gens)
        images[i] = canonical_root_of_unity(p, order)
        basis.append(char_from_generator_images(N, p, images))
    return tuple(basis)


def character_group(N: int, p: int) -> list[DirichletChar]:
    """All phi(N) characters mod N, as monomials in the basis."""
    basis = character_basis(N, p)
    gens = unit_group_generators(N)
    out = [trivial_char(N, p)]
    for chi, (g, order) in zip(basis, gens):
        cur = list(out)
        power = trivial_char(N, p)
        for e in range(1, order):
            power = power * chi
            cur.extend(c * power for c in out)
        out = cur
    # dedupe (value-table equality) while keeping deterministic order
    seen = set()
    uniq = []
    for c in out:
        if c.values not in seen:
            seen.add(c.values)
            uniq.append(c)
    return uniq


def char_from_exponents(N: int, p: int, exponents: list[int]) -> DirichletChar:
    """chi = prod basis_i^(e_i)."""
    basis = character_basis(N, p)
    if len(exponents) != len(basis):
        raise ValueError(f"expected {len(basis)} exponents for N={N}")
    out = trivial_char(N, p)
    for chi, e in zip(basis, exponents):
        out = out * chi**e
    return out


def char_label(N: int, p: int, chi: DirichletChar) -> str:
    """Label 'chi_N^e' / 'chi_{N,i}^e' products matching the basis, or '1'."""
    basis = character_basis(N, p)
    exps = char_exponents(chi)
    terms = []
    for i, e in enumerate(exps):
        if e == 0:
            continue
        name = f"chi_{N}" if len(basis) == 1 else f"chi_{{{N},{i}}}"
        terms.append(name if e == 1 else f"{name}^{e}")
    return "*".join(terms) if terms else "1"


def char_exponents(chi: DirichletChar) -> tuple:
    """Exponent vector of chi over the canonical basis."""
    N, p = chi.N, chi.p
    basis = character_basis(N, p)
    gens = unit_group_generators(N)
    exps = []
    for b, (g, order) in zip(basis, gens):
        target = chi.eval(g)
        zeta = b.eval(g)
        e = 0
        cur = 1
        while cur != target:
            cur = cur * zeta % p
            e += 1
            if e > order:
                raise ValueError("character not expressible over the basis")
        exps.append(e)
    return tuple(exps)


def parse_char_label(label: str, N: int, p: int) -> DirichletChar:
    """Inverse of char_label."""
    label = label.strip()
    if label in ("1", ""):
        return trivial_char(N, p)
    basis = character_basis(N, p)
    exps = [0] * len(basis)
    for term in label.split("*"):
        term = term.strip()
        e = 1
        if "^" in term:
            term, pw = term.rsplit("^", 1)
            e = int(pw)
        name = term.replace("chi_", "").strip("{}")
        if "," in name:
            n_str, i_str = name.split(",")
            idx = int(i_str)
        else:
            n_str, idx = name, 0
        if int(n_str) != N:
            raise ValueError(f"label modulus {n_str} does not match N={N}")
        exps[idx] += e
    return char_from_exponents(N, p, exps)


class CyclotomicPower:
    """The w-th power of the cyclotomic character: evaluation at a prime
    ell not dividing p sends ell to ell^w mod p."""

    def __init__(self, w: int, p: int):
        if not 0 <= w <= 3:
            raise ValueError("exponent must be in 0..3")
        self.w = w
        self.p = p

    def eval(self, ell: int) -> int:
        return pow(ell, self.w, self.p)

    def __repr__(self):
        return f"eps^{self.w}"


def nebentype_action(chi: DirichletChar, matrix_rows, n: int) -> int:
    """Action of a congruence-semigroup matrix on the twisted module: the
    character evaluated at the bottom-right entry mod N."""
    return chi.eval(matrix_rows[n - 1][n - 1])
