"""Exact arithmetic in GF(p) and GF(p^r).

Elements of GF(p^r) are coefficient vectors of length r over GF(p) reduced
modulo a canonical monic irreducible polynomial.  The canonical modulus of
degree r is the lexicographically smallest monic irreducible polynomial,
comparing coefficient tuples (c_0, c_1, ..., c_{r-1}) with c_0 (the constant
term) most significant, so the same (p, r) always names the same field.

Polynomials over GF(p) appear throughout as tuples (c_0, c_1, ...) with the
last entry nonzero; () is the zero polynomial.
"""

from __future__ import annotations

import math
from functools import lru_cache

import numpy as np

# ---------------------------------------------------------------------------
# primes


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid far beyond the sizes used here."""
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes_up_to(bound: int) -> list[int]:
    sieve = np.ones(bound + 1, dtype=bool)
    sieve[:2] = False
    for q in range(2, int(bound**0.5) + 1):
        if sieve[q]:
            sieve[q * q :: q] = False
    return [int(q) for q in np.flatnonzero(sieve)]


def unit_group_exponent(N: int) -> int:
    """Exponent of (Z/N)^x, i.e. the Carmichael function."""
    if N == 1:
        return 1
    lam = 1
    M = N
    for q in range(2, N + 1):
        if q * q > M:
            break
        if M % q:
            continue
        e = 0
        while M % q == 0:
            M //= q
            e += 1
        if q == 2:
            part = 1 if e == 1 else (2 if e == 2 else 2 ** (e - 2))
        else:
            part = (q - 1) * q ** (e - 1)
        lam = math.lcm(lam, part)
    if M > 1:
        lam = math.lcm(lam, M - 1)
    return lam


def is_admissible_prime(p: int, N: int) -> bool:
    """True iff p > 5, p is prime, p does not divide N, and the exponent of
    (Z/N)^x divides p - 1 (so every character of (Z/N)^x lands in GF(p))."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p <= 5 or N % p == 0:
        return False
    return (p - 1) % unit_group_exponent(N) == 0


def find_admissible_prime(N: int, floor: int = 1000) -> int:
    """Smallest admissible prime >= floor.  The primes used in shipped run
    configurations are not minimal; this is a search helper only."""
    lam = unit_group_exponent(N)
    # admissible p satisfies p = 1 (mod lam); scan that progression
    start = max(floor, 7)
    k = (start - 1 + lam - 1) // lam
    while True:
        p = k * lam + 1
        if p > 5 and is_prime(p) and N % p != 0:
            return p
        k += 1


def smallest_primitive_root(q: int) -> int:
    """Smallest primitive root modulo q (q an odd prime power or 2, 4)."""
    if q in (2, 4):
        return q - 1
    # factor the group order once
    base = q
    for ell in range(3, q):
        if q % ell == 0:
            base = ell
            break
    else:
        base = q
    order = q - 1 if is_prime(q) else (base - 1) * (q // base)
    fac = set()
    m = order
    d = 2
    while d * d <= m:
        while m % d == 0:
            fac.add(d)
            m //= d
        d += 1
    if m > 1:
        fac.add(m)
    for g in range(2, q):
        if math.gcd(g, q) != 1:
            continue
        if all(pow(g, order // f, q) != 1 for f in fac):
            return g
    raise ValueError(f"no primitive root mod {q}")


# ---------------------------------------------------------------------------
# polynomials over GF(p), coefficient tuples low degree first


def poly_trim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def poly_add(a, b, p):
    n = max(len(a), len(b))
    return poly_trim([((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % p for i in range(n)])


def poly_sub(a, b, p):
    n = max(len(a), len(b))
    return poly_trim([((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n)])


def poly_mul(a, b, p):
    if not a or not b:
        return ()
    out = np.convolve(np.array(a, dtype=np.int64), np.array(b, dtype=np.int64)) % p
    return poly_trim(out.tolist())


def poly_divmod(a, b, p):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    db, dn = len(b) - 1, len(a) - 1
    inv = pow(b[-1], p - 2, p)
    q = [0] * (max(dn - db + 1, 0))
    while len(a) - 1 >= db and a:
        if a[-1] == 0:
            a.pop()
            continue
        k = len(a) - 1 - db
        coef = a[-1] * inv % p
        q[k] = coef
        for i, bi in enumerate(b):
            a[k + i] = (a[k + i] - coef * bi) % p
        a.pop()
    return poly_trim(q), poly_trim(a)


def poly_mod(a, b, p):
    return poly_divmod(a, b, p)[1]


def poly_gcd(a, b, p):
    while b:
        a, b = b, poly_mod(a, b, p)
    if a:
        inv = pow(a[-1], p - 2, p)
        a = tuple(c * inv % p for c in a)
    return a


class _ModCtx:
    """Fast arithmetic mod a fixed monic polynomial f over GF(p), with the
    reduction of x^deg..x^(2deg-2) precomputed as a numpy matrix."""

    def __init__(self, f, p):
        self.p = p
        self.f = tuple(f)
        self.deg = len(f) - 1
        d = self.deg
        red = np.zeros((max(d - 1, 0), d), dtype=np.int64)
        if d >= 1:
            cur = np.array([(-c) % p for c in f[:-1]], dtype=np.int64)
            for i in range(d - 1):
                if i == 0:
                    red[0] = cur
                else:
                    nxt = np.roll(cur, 1)
                    carry = nxt[0]
                    nxt[0] = 0
                    if carry:
                        nxt = (nxt + carry * red[0]) % p
                    red[i] = nxt
                    cur = nxt
        self.red = red

    def to_vec(self, a):
        v = np.zeros(self.deg, dtype=np.int64)
        coeffs = a[: self.deg]
        v[: len(coeffs)] = coeffs
        return v % self.p

    def mulmod(self, a, b):
        full = np.convolve(a, b) % self.p
        low = full[: self.deg].copy()
        if len(full) > self.deg:
            high = full[self.deg :]
            low = (low + high @ self.red[: len(high)]) % self.p
        out = np.zeros(self.deg, dtype=np.int64)
        out[: len(low)] = low
        return out

    def powmod(self, a, e):
        result = self.to_vec((1,))
        a = self.to_vec(poly_mod(tuple(a), self.f, self.p))
        while e:
            if e & 1:
                result = self.mulmod(result, a)
            e >>= 1
            if e:
                a = self.mulmod(a, a)
        return result


def poly_powmod(a, e, mod, p):
    if len(mod) - 1 <= 0:
        return ()
    ctx = _ModCtx(mod, p)
    return poly_trim(ctx.powmod(a, e).tolist())


def poly_is_irreducible(f, p) -> bool:
    """Rabin test: x^(p^r) = x mod f and gcd(x^(p^(r/q)) - x, f) = 1 for
    prime q | r."""
    r = len(f) - 1
    if r <= 0:
        return False
    if r == 1:
        return True
    x = (0, 1)
    fac = set()
    m = r
    d = 2
    while d * d <= m:
        while m % d == 0:
            fac.add(d)
            m //= d
        d += 1
    if m > 1:
        fac.add(m)
    for q in fac:
        h = poly_powmod(x, p ** (r // q), f, p)
        g = poly_gcd(poly_sub(h, x, p), f, p)
        if g != (1,):
            return False
    return poly_powmod(x, p**r, f, p) == x


@lru_cache(maxsize=None)
def canonical_modulus(p: int, r: int):
    """Lexicographically smallest monic irreducible polynomial of degree r."""
    if r == 1:
        return (0, 1)
    # digits (c_0 ... c_{r-1}) in lex order, c_0 most significant; c_0 = 0
    # is divisible by x, so start at 1
    for c0 in range(1, p):
        stack = [(c0,)]
        # iterate remaining digits odometer-style, c_1 next most significant
        rest = [0] * (r - 1)
        while True:
            f = (c0, *rest, 1)
            if poly_is_irreducible(f, p):
                return f
            i = r - 2
            while i >= 0 and rest[i] == p - 1:
                rest[i] = 0
                i -= 1
            if i < 0:
                break
            rest[i] += 1
    raise RuntimeError("no irreducible polynomial found")  # unreachable


# ---------------------------------------------------------------------------
# fields


class ExtField:
    """GF(p^r) with the canonical modulus (or an explicitly supplied one).

    Instances are immutable and hashable; arithmetic is exposed both via
    methods and via FieldElem operators.
    """

    def __init__(self, p: int, r: int = 1, modulus=None):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        if r < 1:
            raise ValueError("extension degree must be >= 1")
        self.p = p
        self.r = r
        if modulus is None:
            modulus = canonical_modulus(p, r)
        else:
            modulus = poly_trim(tuple(c % p for c in modulus))
            if len(modulus) - 1 != r or modulus[-1] != 1:
                raise ValueError("modulus must be monic of degree r")
            if r > 1 and not poly_is_irreducible(modulus, p):
                raise ValueError("modulus is reducible")
        self.modulus = modulus
        # reduction table: x^(r+i) mod f as length-r rows, i = 0..r-2
        if r > 1:
            red = np.zeros((r - 1, r), dtype=np.int64)
            cur = [(-c) % p for c in modulus[:-1]]  # x^r mod f
            red[0] = cur
            for i in range(1, r - 1):
                nxt = [0] + cur[:-1]
                carry = cur[-1]
                if carry:
                    for j in range(r):
                        nxt[j] = (nxt[j] + carry * red[0][j]) % p
                red[i] = nxt
                cur = nxt
            self._red = red
        else:
            self._red = None
        self.zero = FieldElem(self, (0,) * r)
        self.one = FieldElem(self, (1,) + (0,) * (r - 1))

    # -- construction -----------------------------------------------------

    def __call__(self, value) -> "FieldElem":
        if isinstance(value, FieldElem):
            if value.field is not self and (value.field.p, value.field.r, value.field.modulus) != (self.p, self.r, self.modulus):
                raise ValueError("field mismatch")
            return value
        if isinstance(value, int):
            return FieldElem(self, (value % self.p,) + (0,) * (self.r - 1))
        coeffs = tuple(int(c) % self.p for c in value)
        if len(coeffs) > self.r:
            raise ValueError("coefficient vector too long")
        coeffs = coeffs + (0,) * (self.r - len(coeffs))
        return FieldElem(self, coeffs)

    def gen(self) -> "FieldElem":
        """The class of x, a root of the modulus (equals 0 when r = 1)."""
        if self.r == 1:
            return self.zero
        return FieldElem(self, (0, 1) + (0,) * (self.r - 2))

    def from_encoding(self, n: int) -> "FieldElem":
        coeffs = []
        for _ in range(self.r):
            coeffs.append(n % self.p)
            n //= self.p
        return FieldElem(self, tuple(coeffs))

    @property
    def order(self) -> int:
        return self.p**self.r

    # -- arithmetic on coefficient tuples ---------------------------------

    def _mul(self, a, b):
        p = self.p
        if self.r == 1:
            return (a[0] * b[0] % p,)
        # scalar fast paths: most pipeline values live in the prime field
        if not any(a[1:]):
            s = a[0]
            if s == 0:
                return (0,) * self.r
            if s == 1:
                return b
            return tuple(s * c % p for c in b)
        if not any(b[1:]):
            s = b[0]
            if s == 0:
                return (0,) * self.r
            if s == 1:
                return a
            return tuple(s * c % p for c in a)
        full = np.convolve(np.array(a, dtype=np.int64), np.array(b, dtype=np.int64))
        low = full[: self.r].copy()
        if len(full) > self.r:
            high = full[self.r :]
            low += high @ self._red[: len(high)]
        out = np.zeros(self.r, dtype=np.int64)
        out[: len(low)] = low % p
        return tuple(int(c) for c in out)

    def _inv(self, a):
        p = self.p
        if self.r == 1:
            if a[0] == 0:
                raise ZeroDivisionError("inverse of zero")
            return (pow(a[0], p - 2, p),)
        if not any(a[1:]):
            if a[0] == 0:
                raise ZeroDivisionError("inverse of zero")
            return (pow(a[0], p - 2, p),) + (0,) * (self.r - 1)
        # extended Euclid in GF(p)[x]
        r0, r1 = self.modulus, poly_trim(a)
        if not r1:
            raise ZeroDivisionError("inverse of zero")
        t0, t1 = (), (1,)
        while r1:
            q, rem = poly_divmod(r0, r1, p)
            r0, r1 = r1, rem
            t0, t1 = t1, poly_sub(t0, poly_mul(q, t1, p), p)
        lead_inv = pow(r0[-1], p - 2, p)
        t0 = tuple(c * lead_inv % p for c in t0)
        return t0 + (0,) * (self.r - len(t0))

    # -- misc --------------------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, ExtField)
            and (self.p, self.r, self.modulus) == (other.p, other.r, other.modulus)
        )

    def __hash__(self):
        return hash((self.p, self.r, self.modulus))

    def __repr__(self):
        return f"GF({self.p}^{self.r})" if self.r > 1 else f"GF({self.p})"

    def elements(self):
        """Iterate all field elements (small fields only)."""
        if self.order > 10**7:
            raise ValueError("field too large to enumerate")
        for n in range(self.order):
            yield self.from_encoding(n)


def PrimeField(p: int) -> ExtField:
    """GF(p) as the degree-1 extension (arithmetic coincides)."""
    return ExtField(p, 1)


class FieldElem:
    """Immutable element of an ExtField, in canonical reduced form."""

    __slots__ = ("field", "coeffs", "_hash")

    def __init__(self, field: ExtField, coeffs: tuple):
        self.field = field
        self.coeffs = coeffs
        self._hash = None

    def __add__(self, other):
        other = self.field(other)
        p = self.field.p
        return FieldElem(self.field, tuple((x + y) % p for x, y in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        p = self.field.p
        return FieldElem(self.field, tuple((-x) % p for x in self.coeffs))

    def __sub__(self, other):
        other = self.field(other)
        p = self.field.p
        return FieldElem(self.field, tuple((x - y) % p for x, y in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        return self.field(other) - self

    def __mul__(self, other):
        other = self.field(other)
        return FieldElem(self.field, self.field._mul(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def inverse(self):
        return FieldElem(self.field, self.field._inv(self.coeffs))

    def __truediv__(self, other):
        return self * self.field(other).inverse()

    def __rtruediv__(self, other):
        return self.field(other) * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result = self.field.one
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def frobenius(self):
        """x -> x^p, the generator of the Galois group over GF(p)."""
        return self ** self.field.p

    def __eq__(self, other):
        if isinstance(other, FieldElem):
            return self.coeffs == other.coeffs and self.field == other.field
        if isinstance(other, int):
            return self == self.field(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.coeffs, self.field.p, self.field.r))
        return self._hash

    def __bool__(self):
        return any(self.coeffs)

    def encode(self) -> int:
        """Base-p integer encoding of the coefficient vector."""
        n = 0
        for c in reversed(self.coeffs):
            n = n * self.field.p + c
        return n

    def in_prime_field(self) -> bool:
        return not any(self.coeffs[1:])

    def lift(self) -> int:
        """Integer representative, only for prime-subfield elements."""
        if not self.in_prime_field():
            raise ValueError("element not in the prime subfield")
        return self.coeffs[0]

    def __repr__(self):
        if self.in_prime_field():
            return str(self.coeffs[0])
        return f"[{','.join(map(str, self.coeffs))}]"


# ---------------------------------------------------------------------------
# polynomials with FieldElem coefficients (used for characteristic
# polynomials and root finding inside GF(p^r))


def fpoly_trim(c):
    c = list(c)
    while c and not c[-1]:
        c.pop()
    return c


def fpoly_mul(a, b, F):
    if not a or not b:
        return []
    out = [F.zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + x * y
    return fpoly_trim(out)


def fpoly_divmod(a, b, F):
    a = list(a)
    if not b:
        raise ZeroDivisionError
    inv = b[-1].inverse()
    q = [F.zero] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b):
        if not a[-1]:
            a.pop()
            continue
        k = len(a) - len(b)
        c = a[-1] * inv
        q[k] = c
        for i, bi in enumerate(b):
            a[k + i] = a[k + i] - c * bi
        a.pop()
    return fpoly_trim(q), fpoly_trim(a)


def fpoly_gcd(a, b, F):
    a, b = fpoly_trim(list(a)), fpoly_trim(list(b))
    while b:
        a, b = b, fpoly_divmod(a, b, F)[1]
    if a:
        inv = a[-1].inverse()
        a = [c * inv for c in a]
    return a


def fpoly_powmod(a, e, mod, F):
    result = [F.one]
    a = fpoly_divmod(a, mod, F)[1]
    while e:
        if e & 1:
            result = fpoly_divmod(fpoly_mul(result, a, F), mod, F)[1]
        a = fpoly_divmod(fpoly_mul(a, a, F), mod, F)[1]
        e >>= 1
    return result


def fpoly_roots(poly, F) -> list:
    """All roots in F of a polynomial with FieldElem coefficients, via
    gcd with x^|F| - x and Cantor-Zassenhaus splitting.  Deterministic:
    splitting elements are drawn from a fixed enumeration."""
    poly = fpoly_trim(list(poly))
    if len(poly) <= 1:
        return []
    q = F.order
    x = [F.zero, F.one]
    xq = fpoly_powmod(x, q, poly, F)
    lin = fpoly_gcd([a - b for a, b in zip_pad(xq, x, F)], poly, F)
    roots = []
    # fixed-seed generator: splitting shifts must range over the whole field
    # (prime-subfield shifts can never separate Frobenius-conjugate roots)
    import random

    rng = random.Random(0x5EED ^ F.p ^ (F.r << 20))

    def eval_at(f, v):
        acc = F.zero
        for c in reversed(f):
            acc = acc * v + c
        return acc

    def harvest(r0, f):
        """Divide out the full Frobenius orbit of a known root."""
        seen = set()
        r = r0
        while r.encode() not in seen:
            if eval_at(f, r):
                break
            seen.add(r.encode())
            roots.append(r)
            f = fpoly_divmod(f, [-r, F.one], F)[0]
            r = r.frobenius()
        return f

    def one_root(f):
        """One root of a product of distinct linear factors, deg f >= 1."""
        while True:
            deg = len(f) - 1
            if deg == 1:
                return -f[0] / f[1]
            if not f[0]:
                return F.zero
            a = F.from_encoding(rng.randrange(q))
            g = fpoly_powmod([a, F.one], (q - 1) // 2, f, F)
            g = fpoly_trim([g[0] - F.one] + g[1:]) if g else [-F.one]
            d = fpoly_gcd(g, f, F)
            if 0 < len(d) - 1 < deg:
                f = d if len(d) <= len(f) - len(d) + 1 else fpoly_divmod(f, d, F)[0]

    f = lin
    while len(f) - 1 >= 1:
        f = harvest(one_root(f), f)
    roots.sort(key=lambda e: e.encode())
    return roots


def zip_pad(a, b, F):
    n = max(len(a), len(b))
    a = list(a) + [F.zero] * (n - len(a))
    b = list(b) + [F.zero] * (n - len(b))
    return list(zip(a, b))


# ---------------------------------------------------------------------------
# residue-field embeddings


def reduce_intpoly(minpoly, p) -> tuple:
    return poly_trim(tuple(c % p for c in minpoly))


def factor_squarefree_mod(f, p) -> list[tuple]:
    """Irreducible factors (monic, each once) of a squarefree f over GF(p),
    by distinct-degree then equal-degree (Cantor-Zassenhaus) splitting."""
    import random

    f = reduce_intpoly(f, p)
    lead_inv = pow(f[-1], p - 2, p)
    f = tuple(c * lead_inv % p for c in f)
    rng = random.Random(0xFAC ^ p)
    out = []
    x = (0, 1)
    d = 1
    while len(f) - 1 >= 2 * d:
        h = poly_powmod(x, p**d, f, p)
        g = poly_gcd(poly_sub(h, x, p), f, p)
        if len(g) > 1:
            # split g (product of degree-d irreducibles) by CZ
            stack = [g]
            while stack:
                u = stack.pop()
                du = len(u) - 1
                if du == d:
                    out.append(u)
                    continue
                while True:
                    a = tuple(rng.randrange(p) for _ in range(du))
                    b = poly_powmod(poly_trim(a), (p**d - 1) // 2, u, p)
                    b = poly_sub(b, (1,), p)
                    w = poly_gcd(b, u, p)
                    if 0 < len(w) - 1 < du:
                        stack.append(w)
                        stack.append(poly_divmod(u, w, p)[0])
                        break
            f = poly_divmod(f, g, p)[0]
        d += 1
    if len(f) > 1:
        out.append(f)
    return sorted(out)


def is_squarefree_mod(minpoly, p) -> bool:
    f = reduce_intpoly(minpoly, p)
    if len(f) - 1 < 1:
        return False
    deriv = poly_trim(tuple(i * f[i] % p for i in range(1, len(f))))
    return poly_gcd(f, deriv, p) == (1,)


def factor_degrees_mod(minpoly, p) -> list[int]:
    """Degrees of the irreducible factors of minpoly mod p (with
    multiplicity one; requires squarefreeness), by distinct-degree
    splitting."""
    if not is_squarefree_mod(minpoly, p):
        raise ValueError(f"polynomial is ramified at {p} (not squarefree mod p)")
    f = reduce_intpoly(minpoly, p)
    degrees = []
    d = 1
    x = (0, 1)
    while len(f) - 1 >= 2 * d:
        h = poly_powmod(x, p**d, f, p)
        g = poly_gcd(poly_sub(h, x, p), f, p)
        if len(g) > 1:
            degrees.extend([d] * ((len(g) - 1) // d))
            f = poly_divmod(f, g, p)[0]
        d += 1
    if len(f) > 1:
        degrees.append(len(f) - 1)
    return sorted(degrees)


def min_extension_degree(minpolys, p: int) -> int:
    """Smallest r such that every root of every minpoly lies in GF(p^r):
    the lcm of all irreducible factor degrees mod p."""
    r = 1
    for m in minpolys:
        for d in factor_degrees_mod(m, p):
            r = math.lcm(r, d)
    return r


_embed_cache: dict = {}
_subfield_gen_cache: dict = {}


def _subfield_generator(p: int, d: int, F: ExtField) -> FieldElem:
    """A fixed root in F of the canonical degree-d modulus, realizing
    GF(p^d) inside F.  Cached: this is the only place the big-field
    root search runs."""
    key = (p, d, F.r, F.modulus)
    hit = _subfield_gen_cache.get(key)
    if hit is None:
        m = canonical_modulus(p, d)
        roots = fpoly_roots([F(c) for c in m], F)
        hit = roots[0]
        _subfield_gen_cache[key] = hit
    return hit


def embed_residue_field(minpoly, F: ExtField) -> list[FieldElem]:
    """One embedding per root of minpoly in F, given by the image of the
    generator, in increasing order of the image's integer encoding.

    Raises if minpoly is not squarefree mod p (ramified prime)."""
    key = (tuple(minpoly), F.p, F.r, F.modulus)
    hit = _embed_cache.get(key)
    if hit is not None:
        return list(hit)
    if not is_squarefree_mod(minpoly, F.p):
        raise ValueError(f"polynomial is ramified at {F.p} (not squarefree mod p)")
    p = F.p
    roots: list[FieldElem] = []
    for u in factor_squarefree_mod(minpoly, p):
        d = len(u) - 1
        if F.r % d != 0:
            continue  # this factor's roots live outside F
        if d == 1:
            roots.append(F(-u[0]))
            continue
        # roots of u inside GF(p^d), then mapped through a fixed embedding
        K = ExtField(p, d)
        kroots = fpoly_roots([K(c) for c in u], K)
        t = _subfield_generator(p, d, F)
        tp = [F.one]
        for _ in range(d - 1):
            tp.append(tp[-1] * t)
        for kr in kroots:
            img = F.zero
            for c, ti in zip(kr.coeffs, tp):
                if c:
                    img = img + ti * c
            roots.append(img)
    roots.sort(key=lambda e: e.encode())
    _embed_cache[key] = list(roots)
    return roots


def build_extension(p: int, r: int) -> ExtField:
    return ExtField(p, r)
