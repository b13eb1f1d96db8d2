"""The database of known Galois-representation constituents.

One-dimensional pieces are Dirichlet characters times powers of the
cyclotomic character; two-dimensional pieces are reductions of classical
newforms of weights 2, 3, 4 ingested from data files, with one reduction
per embedding of the coefficient field into the working field; the
three-dimensional pieces are symmetric squares of the two-dimensional ones
and ingested tables for classes that are not symmetric squares, all
twisted by the one-dimensional list.

Frobenius polynomials are normalized as det(I - rho(Frob) X): a character
chi eps^w contributes 1 - chi(l) l^w X, a weight-k newform reduction
1 - a_l X + psi(l) l^(k-1) X^2, and twisting substitutes X by chi(l) l^w X,
so determinants multiply to the nebentype times the sixth cyclotomic power
on the table rows and Hodge-Tate lists concatenate to 0..3.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from functools import lru_cache

from .dirichlet import DirichletChar, char_from_exponents, char_label, parse_char_label, trivial_char
from .ffield import ExtField, FieldElem, embed_residue_field
from .hecke import FullPoly


# ---------------------------------------------------------------------------
# newform records


@dataclass(frozen=True)
class NewformRecord:
    label: str
    level: int
    weight: int
    neb_exponents: tuple  # over the canonical character basis mod `level`
    minpoly: tuple  # integer coefficients, low degree first, monic
    ap: dict  # prime -> integer coefficient tuple (poly in the generator)

    def neb(self, p: int) -> DirichletChar:
        return char_from_exponents(self.level, p, list(self.neb_exponents))

    def field_degree(self) -> int:
        return len(self.minpoly) - 1

    def good_primes(self):
        return sorted(self.ap)


def parse_newform_file(path) -> NewformRecord:
    label = level = weight = None
    neb = None
    minpoly = None
    ap = {}
    with open(path) as fh:
        for raw in fh:
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if line.startswith("NEWFORM"):
                _, label, level, weight, neb = line.split()
                level, weight = int(level), int(weight)
            elif line.startswith("FIELD"):
                minpoly = tuple(int(x) for x in line.split()[1:])
            elif line.startswith("AP"):
                m = re.match(r"AP\s+(\d+)\s*:\s*(.*)$", line)
                ell = int(m.group(1))
                coeffs = tuple(int(x) for x in m.group(2).split())
                ap[ell] = coeffs
            else:
                raise ValueError(f"unrecognized line in {path}: {line!r}")
    if None in (label, level, weight, neb, minpoly):
        raise ValueError(f"incomplete newform file {path}")
    if minpoly[-1] != 1:
        raise ValueError(f"{path}: minimal polynomial must be monic")
    neb_exp = tuple(int(x) for x in neb.split(",")) if neb != "-" else ()
    rec = NewformRecord(label=label, level=level, weight=weight, neb_exponents=neb_exp, minpoly=minpoly, ap=ap)
    # parity consistency: psi(-1) = (-1)^weight
    psi = rec.neb(_scratch_prime(level))
    if psi.parity != (-1) ** weight:
        raise ValueError(f"{path}: nebentype parity inconsistent with the weight")
    return rec


def _scratch_prime(N: int) -> int:
    from .ffield import find_admissible_prime

    return find_admissible_prime(max(N, 1), 1000)


@dataclass(frozen=True)
class GL3Record:
    label: str
    level: int
    neb_exponents: tuple
    table: dict  # prime -> (c1, c2, c3) integer coefficients of the cubic

    def neb(self, p: int) -> DirichletChar:
        return char_from_exponents(self.level, p, list(self.neb_exponents))

    def good_primes(self):
        return sorted(self.table)


def parse_gl3_file(path) -> GL3Record:
    label = level = None
    neb = None
    table = {}
    with open(path) as fh:
        for raw in fh:
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if line.startswith("GL3"):
                _, label, level, neb = line.split()
                level = int(level)
            elif line.startswith("POLY"):
                m = re.match(r"POLY\s+(\d+)\s*:\s*(.*)$", line)
                ell = int(m.group(1))
                c = tuple(int(x) for x in m.group(2).split())
                if len(c) != 4 or c[0] != 1:
                    raise ValueError(f"{path}: cubic polynomial must have constant term 1")
                table[ell] = c[1:]
            else:
                raise ValueError(f"unrecognized line in {path}: {line!r}")
    if None in (label, level, neb):
        raise ValueError(f"incomplete file {path}")
    neb_exp = tuple(int(x) for x in neb.split(",")) if neb != "-" else ()
    return GL3Record(label=label, level=level, neb_exponents=neb_exp, table=table)


# ---------------------------------------------------------------------------
# constituents


@dataclass(frozen=True)
class Constituent:
    """A known representation with computable Frobenius polynomials.

    kind: 'char' | 'newform' | 'sym2' | 'gl3'.  chi is the twisting
    character stored primitively (trivial allowed), w the cyclotomic power.
    For newform kinds, `record` and the embedding index identify the
    reduction; sym2 applies to the untwisted reduction.
    """

    kind: str
    chi: DirichletChar
    w: int
    record: object = None  # NewformRecord | GL3Record | None
    emb_index: int = 0

    @property
    def degree(self) -> int:
        return {"char": 1, "newform": 2, "sym2": 3, "gl3": 3}[self.kind]

    def hodge_tate(self) -> tuple:
        if self.kind == "char":
            return (self.w,)
        if self.kind == "newform":
            k = self.record.weight
            return (self.w, self.w + k - 1)
        if self.kind == "sym2":
            k = self.record.weight
            return (self.w, self.w + k - 1, self.w + 2 * (k - 1))
        return (self.w, self.w + 1, self.w + 2)

    def label(self) -> str:
        parts = []
        if not self.chi.is_trivial():
            parts.append(char_label(self.chi.N, self.chi.p, self.chi))
        parts.append(f"eps^{self.w}")
        if self.kind == "newform":
            parts.append(self.record.label + (f"#{self.emb_index}" if _needs_emb(self.record) else ""))
        elif self.kind == "sym2":
            parts.append(f"Sym^2({self.record.label}" + (f"#{self.emb_index})" if _needs_emb(self.record) else ")"))
        elif self.kind == "gl3":
            parts.append(self.record.label)
        return " ".join(parts)


def _needs_emb(rec) -> bool:
    return isinstance(rec, NewformRecord) and rec.field_degree() > 1


class ConstituentDatabase:
    """All constituents usable at one (N, F): the character twists, the
    newform reductions with twists, and the three-dimensional list."""

    def __init__(self, N: int, F: ExtField, newforms=(), gl3=()):
        self.N = N
        self.F = F
        self.p = F.p
        self.newforms = [r for r in newforms if N % r.level == 0]
        self.gl3 = [r for r in gl3 if N % r.level == 0]
        self._embeddings: dict[str, list[FieldElem]] = {}
        self._frob_cache: dict = {}
        for rec in self.newforms:
            self._embeddings[rec.label] = embed_residue_field(rec.minpoly, F)
        self.L1 = self._build_L1()
        self.L2_0 = self._build_L2_0()
        self.L2 = self._twist_closure(self.L2_0)
        self.L3 = self._build_L3()
        self.all = self._dedup(self.L1 + self.L2 + self.L3)

    # -- pieces ------------------------------------------------------------

    def _build_L1(self) -> list[Constituent]:
        from .dirichlet import character_group

        out = []
        seen = set()
        for chi in character_group(self.N, self.p):
            prim = chi.restrict(chi.conductor())
            key = (prim.N, prim.values)
            if key in seen:
                continue
            seen.add(key)
            for w in range(4):
                out.append(Constituent(kind="char", chi=prim, w=w))
        out.sort(key=lambda c: (c.w, c.chi.N, c.chi.values))
        return out

    def _build_L2_0(self) -> list[Constituent]:
        triv = trivial_char(1, self.p)
        out = []
        for rec in self.newforms:
            for i, _ in enumerate(self._embeddings[rec.label]):
                out.append(Constituent(kind="newform", chi=triv, w=0, record=rec, emb_index=i))
        return out

    def _twist_closure(self, base) -> list[Constituent]:
        out = []
        for c in base:
            for t in self.L1:
                out.append(
                    Constituent(kind=c.kind, chi=t.chi, w=t.w, record=c.record, emb_index=c.emb_index)
                )
        return out

    def _build_L3(self) -> list[Constituent]:
        triv = trivial_char(1, self.p)
        base = [
            Constituent(kind="sym2", chi=triv, w=0, record=c.record, emb_index=c.emb_index)
            for c in self.L2_0
        ]
        base += [Constituent(kind="gl3", chi=triv, w=0, record=rec) for rec in self.gl3]
        return self._twist_closure(base)

    # -- evaluation ----------------------------------------------------------

    def embedding(self, c: Constituent) -> FieldElem:
        return self._embeddings[c.record.label][c.emb_index]

    def _embed_ap(self, c: Constituent, ell: int) -> FieldElem:
        coeffs = c.record.ap.get(ell)
        if coeffs is None:
            raise KeyError(f"{c.record.label}: no stored coefficient at {ell}")
        alpha = self.embedding(c)
        acc = self.F.zero
        for co in reversed(coeffs):
            acc = acc * alpha + self.F(co)
        return acc

    def frob_poly(self, c: Constituent, ell: int) -> FullPoly:
        """det(I - rho(Frob_ell) X) for ell coprime to p, the twist
        conductor, and the record level."""
        key = (
            c.kind,
            c.chi.N,
            c.chi.values,
            c.w,
            c.record.label if c.record is not None else None,
            c.emb_index,
            ell,
        )
        hit = self._frob_cache.get(key)
        if hit is not None:
            return hit
        out = self._frob_poly_raw(c, ell)
        self._frob_cache[key] = out
        return out

    def _frob_poly_raw(self, c: Constituent, ell: int) -> FullPoly:
        F = self.F
        if ell == self.p:
            raise ValueError("Frobenius at the working characteristic is undefined here")
        if not c.chi.is_trivial() and math.gcd(ell, c.chi.N) != 1:
            raise ValueError(f"prime {ell} ramified in the twist")
        t = F(c.chi.eval(ell)) * F(ell) ** c.w
        if c.kind == "char":
            return FullPoly(coeffs=(F.one, -t))
        if c.kind in ("newform", "sym2"):
            rec = c.record
            if ell == rec.level or rec.level % ell == 0:
                raise ValueError(f"prime {ell} divides the level of {rec.label}")
            a = self._embed_ap(c, ell)
            d = F(rec.neb(self.p).eval(ell)) * F(ell) ** (rec.weight - 1)
            if c.kind == "newform":
                base = (F.one, -a, d)
            else:
                e1 = a * a - d
                e2 = a * a * d - d * d
                e3 = d ** 3
                base = (F.one, -e1, e2, -e3)
        else:
            rec = c.record
            if rec.level % ell == 0:
                raise ValueError(f"prime {ell} divides the level of {rec.label}")
            cs = rec.table.get(ell)
            if cs is None:
                raise KeyError(f"{rec.label}: no stored polynomial at {ell}")
            base = (F.one, F(cs[0]), F(cs[1]), F(cs[2]))
        # substitute X -> t X
        out = []
        tp = F.one
        for co in base:
            out.append(co * tp)
            tp = tp * t
        return FullPoly(coeffs=tuple(out))

    def det_value(self, c: Constituent, ell: int) -> FieldElem:
        poly = self.frob_poly(c, ell)
        top = poly.coeffs[-1]
        return top if c.degree % 2 == 0 else -top

    def good_primes(self, c: Constituent, bound=1000):
        out = []
        for ell in _primes_cached(bound):
            if ell == self.p:
                continue
            if c.kind != "char":
                if c.record.level % ell == 0:
                    continue
                table = c.record.ap if c.kind in ("newform", "sym2") else c.record.table
                if ell not in table:
                    continue
            if not c.chi.is_trivial() and math.gcd(ell, c.chi.N) != 1:
                continue
            out.append(ell)
        return out

    # -- dedup ---------------------------------------------------------------

    def _system_key(self, c: Constituent):
        primes = [ell for ell in self.good_primes(c, 60) if self.N % ell and ell != self.p][:8]
        return (c.degree, tuple((ell, tuple(x.encode() for x in self.frob_poly(c, ell).coeffs)) for ell in primes))

    def _dedup(self, items) -> list[Constituent]:
        seen = {}
        for c in items:
            key = self._system_key(c)
            if key not in seen:
                seen[key] = c
        return list(seen.values())


@lru_cache(maxsize=8)
def _primes_cached(bound):
    from .ffield import primes_up_to

    return tuple(primes_up_to(bound))


_db_cache: dict = {}


def database_for(N: int, F: ExtField, newforms=None, gl3=None) -> ConstituentDatabase:
    """Session-cached database (the bundled records by default)."""
    key = (N, F.p, F.r, F.modulus, newforms is None, gl3 is None)
    if key not in _db_cache or newforms is not None or gl3 is not None:
        db = ConstituentDatabase(
            N,
            F,
            shipped_newforms() if newforms is None else newforms,
            shipped_gl3() if gl3 is None else gl3,
        )
        if newforms is not None or gl3 is not None:
            return db
        _db_cache[key] = db
    return _db_cache[key]


# ---------------------------------------------------------------------------
# elliptic-curve trace oracle (grounds the rational weight-2 data)


def ap_from_elliptic_curve(ainv, ell: int) -> int:
    """ell + 1 - #E(F_ell) by exhaustive point counting; requires good
    reduction at ell."""
    a1, a2, a3, a4, a6 = ainv
    b2 = a1 * a1 + 4 * a2
    b4 = 2 * a4 + a1 * a3
    b6 = a3 * a3 + 4 * a6
    b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
    disc = -b2 * b2 * b8 - 8 * b4**3 - 27 * b6 * b6 + 9 * b2 * b4 * b6
    if disc % ell == 0:
        raise ValueError(f"bad reduction at {ell}")
    if ell == 2:
        count = 1  # infinity
        for x in range(2):
            for y in range(2):
                if (y * y + a1 * x * y + a3 * y - (x**3 + a2 * x * x + a4 * x + a6)) % 2 == 0:
                    count += 1
        return 2 + 1 - count
    # complete the square: (2y + a1 x + a3)^2 = 4x^3 + b2 x^2 + 2 b4 x + b6
    qr = [0] * ell
    for t in range((ell + 1) // 2 + 1):
        qr[t * t % ell] = 1
    count = 1
    for x in range(ell):
        g = (4 * x**3 + b2 * x * x + 2 * b4 * x + b6) % ell
        if g == 0:
            count += 1
        elif qr[g]:
            count += 2
    return ell + 1 - count


# well-known minimal models for the rational weight-2 forms we bundle
ELLIPTIC_CURVES = {
    "sigma_{11,2}": (0, -1, 1, -10, -20),
    "sigma_{14,2}": (1, 0, 1, 4, -6),
    "sigma_{15,2}": (1, 1, 1, -10, -10),
    "sigma_{17,2a}": (1, -1, 1, -1, -14),
    "sigma_{19,2a}": (0, 1, 1, -9, -15),
    "sigma_{20,2a}": (0, 1, 0, 4, 4),
    "sigma_{21,2a}": (1, 0, 0, -4, -1),
    "sigma_{24,2a}": (0, -1, 0, -4, 4),
    "sigma_{26,2a}": (1, 0, 1, -5, -8),
    "sigma_{26,2b}": (1, -1, 1, -3, 3),
    "sigma_{27,2a}": (0, 0, 1, 0, -7),
    "sigma_{37,2a}": (0, 0, 1, -1, 0),
    "sigma_{37,2b}": (0, 1, 1, -23, -50),
}


# ---------------------------------------------------------------------------
# directory ingestion


def ingest_newforms(paths, F: ExtField | None = None) -> list[NewformRecord]:
    """Parse record files; with a field supplied, reject records whose
    minimal polynomial is ramified at p."""
    out = []
    for path in paths:
        rec = parse_newform_file(path)
        if F is not None:
            embed_residue_field(rec.minpoly, F)  # raises when ramified
        out.append(rec)
    out.sort(key=lambda r: r.label)
    return out


def load_newform_dir(dirpath) -> list[NewformRecord]:
    import pathlib

    files = sorted(pathlib.Path(dirpath).glob("*.nf"))
    return ingest_newforms(files)


def load_gl3_dir(dirpath) -> list[GL3Record]:
    import pathlib

    return [parse_gl3_file(f) for f in sorted(pathlib.Path(dirpath).glob("*.gl3"))]


@lru_cache(maxsize=None)
def shipped_newforms() -> tuple:
    import importlib.resources as res

    root = res.files("arithcoh").joinpath("data/newforms")
    recs = []
    for entry in sorted(root.iterdir(), key=lambda e: e.name):
        if entry.name.endswith(".nf"):
            with res.as_file(entry) as path:
                recs.append(parse_newform_file(path))
    return tuple(recs)


@lru_cache(maxsize=None)
def shipped_gl3() -> tuple:
    import importlib.resources as res

    root = res.files("arithcoh").joinpath("data/gl3")
    recs = []
    for entry in sorted(root.iterdir(), key=lambda e: e.name):
        if entry.name.endswith(".gl3"):
            with res.as_file(entry) as path:
                recs.append(parse_gl3_file(path))
    return tuple(recs)
