"""Matching Hecke eigenpackets to direct sums of known constituents.

A polynomial system maps each working prime to either the full degree-4
polynomial built from a complete set of eigenvalues or, when only the
first operator was computed, the partial polynomial known modulo X^2.
Constituent systems are always full.  Products multiply entrywise (full
times partial truncates), a system divides another when the polynomial at
every full entry divides exactly, and quotients at partial entries
multiply by the inverse unit modulo X^2 while the tracked degree drops;
division stops when the full polynomials of the quotient reach degree 0.

The search lists every constituent whose system divides the eigenspace
system, then walks subsets by descending degree looking for direct sums
whose system equals the target, annotating each hit with the Hodge-Tate
and determinant checks, and flagging multiple hits as coincident when
their systems agree at every usable prime below one thousand.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field

from .constituents import Constituent, ConstituentDatabase
from .dirichlet import DirichletChar, char_label, parse_char_label, trivial_char
from .ffield import ExtField, FieldElem, primes_up_to
from .hecke import Eigenpacket, FullPoly, PartialPoly, SimultaneousEigenspace, _poly_mul_f, hecke_polynomial


# ---------------------------------------------------------------------------
# polynomial helpers over F


def poly_divide_exact(num: tuple, den: tuple, F: ExtField):
    """Quotient of dense F-polynomials when the division is exact, else
    None."""
    num = list(num)
    if len(den) > len(num):
        return None
    dn = len(den) - 1
    inv = den[-1].inverse()
    q = [F.zero] * (len(num) - dn)
    for k in range(len(num) - dn - 1, -1, -1):
        c = num[dn + k] * inv
        q[k] = c
        if c:
            for i, d in enumerate(den):
                num[k + i] = num[k + i] - c * d
    if any(num):
        return None
    return tuple(q)


# ---------------------------------------------------------------------------
# systems


@dataclass(frozen=True)
class PolySystem:
    """degree + map prime -> FullPoly | PartialPoly (constant terms 1)."""

    degree: int
    entries: tuple  # sorted tuple of (ell, poly)

    def at(self, ell):
        for l2, poly in self.entries:
            if l2 == ell:
                return poly
        raise KeyError(ell)

    def primes(self):
        return tuple(ell for ell, _ in self.entries)

    def full_primes(self):
        return tuple(ell for ell, poly in self.entries if isinstance(poly, FullPoly))


def system_of_eigenspace(E: SimultaneousEigenspace, F: ExtField, eta: DirichletChar | None = None) -> PolySystem:
    entries = []
    for ell in E.packet.primes():
        entries.append((ell, hecke_polynomial(E.packet, ell, F, eta)))
    return PolySystem(degree=4, entries=tuple(sorted(entries)))


def system_of_constituents(db: ConstituentDatabase, parts, L) -> PolySystem:
    """Full product system of a multiset of constituents over the primes L."""
    F = db.F
    entries = []
    deg = sum(c.degree for c in parts)
    for ell in sorted(L):
        poly = (F.one,)
        for c in parts:
            poly = tuple(_poly_mul_f(list(poly), list(db.frob_poly(c, ell).coeffs), F))
        entries.append((ell, FullPoly(coeffs=poly)))
    return PolySystem(degree=deg, entries=tuple(entries))


def synthesize_packet(db: ConstituentDatabase, parts, full_primes, partial_primes=()) -> Eigenpacket:
    """Eigenpacket of the direct sum of `parts` (total degree 4): eigenvalues
    recovered from the product polynomial's coefficients."""
    F = db.F
    if sum(c.degree for c in parts) != 4:
        raise ValueError("total degree must be 4")
    values = {}
    for ell in sorted(set(full_primes) | set(partial_primes)):
        poly = (F.one,)
        for c in parts:
            poly = tuple(_poly_mul_f(list(poly), list(db.frob_poly(c, ell).coeffs), F))
        lfe = F(ell)
        ks = range(5) if ell in full_primes else (0, 1)
        for k in ks:
            denom = lfe ** (k * (k - 1) // 2)
            sign = F(-1) ** k
            values[(ell, k)] = poly[k] * sign * denom.inverse()
        # redundant by construction but kept as the documented invariant
        assert values[(ell, 0)] == F.one
    full = tuple(sorted(set(full_primes)))
    partial = tuple(sorted(set(partial_primes) - set(full_primes)))
    for ell in full:
        values.setdefault((ell, 4), values[(ell, 4)])
    return Eigenpacket(values=values, full=full, partial=partial)


def product(systems, F: ExtField) -> PolySystem:
    """Entrywise product; a partial entry anywhere truncates that prime."""
    if not systems:
        raise ValueError("empty product")
    primes = set(systems[0].primes())
    for s in systems[1:]:
        primes &= set(s.primes())
    entries = []
    for ell in sorted(primes):
        polys = [s.at(ell) for s in systems]
        if all(isinstance(q, FullPoly) for q in polys):
            acc = (F.one,)
            for q in polys:
                acc = tuple(_poly_mul_f(list(acc), list(q.coeffs), F))
            entries.append((ell, FullPoly(coeffs=acc)))
        else:
            lin = F.zero
            for q in polys:
                lin = lin + (q.coeffs[1] if isinstance(q, FullPoly) else q.linear)
            entries.append((ell, PartialPoly(linear=lin)))
    return PolySystem(degree=sum(s.degree for s in systems), entries=tuple(entries))


def divides(F1: PolySystem, F2: PolySystem, F: ExtField) -> bool:
    """F1 divides F2: exact polynomial division at every full entry of F2;
    partial entries are always divisible (units mod X^2) provided the
    degree bookkeeping allows.  F1 must be a full system."""
    if F1.degree > F2.degree:
        return False
    if any(isinstance(poly, PartialPoly) for _, poly in F1.entries):
        raise ValueError("a partial polynomial is never used as a divisor")
    for ell, poly in F2.entries:
        try:
            d = F1.at(ell)
        except KeyError:
            continue
        if isinstance(poly, FullPoly):
            if poly_divide_exact(poly.coeffs, d.coeffs, F) is None:
                return False
    return True


def quotient(F2: PolySystem, F1: PolySystem, F: ExtField) -> PolySystem:
    """The quotient system F2 / F1; partial entries multiply by the inverse
    of the divisor modulo X^2.  Degree underflow is refused."""
    if any(isinstance(poly, PartialPoly) for _, poly in F1.entries):
        raise ValueError("a partial polynomial is never used as a divisor")
    if F1.degree > F2.degree:
        raise ValueError("quotient degree would be negative")
    entries = []
    for ell, poly in F2.entries:
        d = F1.at(ell)
        if isinstance(poly, FullPoly):
            q = poly_divide_exact(poly.coeffs, d.coeffs, F)
            if q is None:
                raise ValueError(f"not divisible at {ell}")
            entries.append((ell, FullPoly(coeffs=q)))
        else:
            # inverse of 1 + cX mod X^2 is 1 - cX
            c = d.coeffs[1] if len(d.coeffs) > 1 else F.zero
            entries.append((ell, PartialPoly(linear=poly.linear - c)))
    return PolySystem(degree=F2.degree - F1.degree, entries=tuple(entries))


def systems_equal(a: PolySystem, b: PolySystem) -> bool:
    if a.degree != b.degree or a.primes() != b.primes():
        return False
    for (l1, p1), (l2, p2) in zip(a.entries, b.entries):
        if isinstance(p1, FullPoly) != isinstance(p2, FullPoly):
            return False
        if isinstance(p1, FullPoly):
            if p1.coeffs != p2.coeffs:
                return False
        elif p1.linear != p2.linear:
            return False
    return True


def is_finished(Q: PolySystem, F: ExtField) -> bool:
    """Quotient reached degree 0 with trivial entries everywhere."""
    if Q.degree != 0:
        return False
    for _, poly in Q.entries:
        if isinstance(poly, FullPoly):
            if len(poly.coeffs) != 1 or poly.coeffs[0] != F.one:
                return False
        elif poly.linear:
            return False
    return True


# ---------------------------------------------------------------------------
# the finder


@dataclass
class Assignment:
    parts: tuple  # Constituents, sorted canonically
    ht_ok: bool = False
    det_ok: bool = False
    unique: bool = False
    coincident: bool = False
    pattern: str = "Other"

    def total_degree(self):
        return sum(c.degree for c in self.parts)

    def signature(self):
        """Identity with embedding choices erased (conjugate reductions of
        one record share a signature)."""
        out = []
        for c in self.parts:
            rec = c.record.label if c.record is not None else None
            out.append((c.kind, c.chi.N, c.chi.values, c.w, rec))
        return tuple(sorted(out))

    def key(self):
        out = []
        for c in self.parts:
            rec = (c.record.label, c.emb_index) if c.record is not None else None
            out.append((c.kind, c.chi.N, c.chi.values, c.w, rec))
        return tuple(sorted(out))


def candidate_list(system: PolySystem, db: ConstituentDatabase) -> list[Constituent]:
    """All constituents whose system divides the eigenspace system."""
    F = db.F
    out = []
    for c in db.all:
        ok = True
        for ell, poly in system.entries:
            try:
                d = db.frob_poly(c, ell)
            except (KeyError, ValueError):
                ok = False
                break
            if isinstance(poly, FullPoly) and poly_divide_exact(poly.coeffs, d.coeffs, F) is None:
                ok = False
                break
        if ok:
            out.append(c)
    return out


def _sort_candidates(cands):
    return sorted(cands, key=lambda c: (-c.degree, c.label()))


def find_assignments(
    system: PolySystem,
    db: ConstituentDatabase,
    candidates=None,
    eta: DirichletChar | None = None,
    allow_multisets: bool = False,
) -> list[Assignment]:
    """All direct sums of candidates of total degree 4 whose product system
    equals the eigenspace system, with uniqueness/coincidence flags and the
    Hodge-Tate and determinant checks."""
    F = db.F
    if candidates is None:
        candidates = candidate_list(system, db)
    cands = _sort_candidates(candidates)
    csys = []
    for c in cands:
        csys.append(system_of_constituents(db, [c], system.primes()))
    found = []

    def dfs(start, Q, chosen):
        if is_finished(Q, F):
            found.append(tuple(chosen))
            return
        if Q.degree == 0:
            return
        for i in range(start, len(cands)):
            c, cs = cands[i], csys[i]
            if cs.degree > Q.degree:
                continue
            if not divides(cs, Q, F):
                continue
            chosen.append(c)
            dfs(i if allow_multisets else i + 1, quotient(Q, cs, F), chosen)
            chosen.pop()

    dfs(0, system, [])
    # dedup multisets found along different branches (cannot happen with
    # subsets, kept for the multiset option)
    seen = set()
    assignments = []
    for parts in found:
        a = Assignment(parts=tuple(sorted(parts, key=lambda c: c.label())))
        if a.key() in seen:
            continue
        seen.add(a.key())
        assignments.append(a)
    # checks
    for a in assignments:
        a.ht_ok = sorted(sum((list(c.hodge_tate()) for c in a.parts), [])) == [0, 1, 2, 3]
        a.det_ok = _det_ok(a, system, db, eta)
        a.pattern = classify_pattern(a)
    if len(assignments) == 1:
        assignments[0].unique = True
    elif len(assignments) > 1:
        coincident = all(
            _systems_agree_below(assignments[0].parts, b.parts, db, bound=1000)
            for b in assignments[1:]
        )
        for a in assignments:
            a.coincident = coincident
    assignments.sort(key=lambda a: a.key())
    return assignments


def _det_ok(a: Assignment, system: PolySystem, db: ConstituentDatabase, eta) -> bool:
    """X^4 coefficient at every full prime equals ell^6 times the nebentype
    value (the determinant identity for the attached degree-4 sum)."""
    if eta is None:
        eta = trivial_char(db.N, db.p)
    F = db.F
    for ell in system.full_primes():
        det = F.one
        for c in a.parts:
            det = det * db.det_value(c, ell)
        if det != F(eta.eval(ell)) * F(ell) ** 6:
            return False
    return True


def _common_good_primes(parts1, parts2, db, bound):
    s = None
    for c in list(parts1) + list(parts2):
        g = set(db.good_primes(c, bound))
        s = g if s is None else (s & g)
    return sorted(ell for ell in (s or set()) if db.N % ell and ell != db.p)


def _systems_agree_below(parts1, parts2, db: ConstituentDatabase, bound=1000) -> bool:
    primes = _common_good_primes(parts1, parts2, db, bound)
    s1 = system_of_constituents(db, list(parts1), primes)
    s2 = system_of_constituents(db, list(parts2), primes)
    return systems_equal(s1, s2)


def find_with_refinement(
    parts,
    db: ConstituentDatabase,
    full_primes,
    eta: DirichletChar | None = None,
    max_prime: int = 100,
):
    """Round-trip driver: synthesize the eigenpacket of a degree-4 sum over
    the given fully-computed primes, run the search, and while several
    non-coincident sums match, grow the prime set with the first-operator
    eigenvalue at the next usable prime (the cheap partial information) and
    rerun.  Returns (assignments, primes_used)."""
    full = sorted(full_primes)
    partial: list[int] = []
    while True:
        pk = synthesize_packet(db, parts, full, partial)
        system = PolySystem(
            degree=4,
            entries=tuple(
                sorted(
                    [(ell, hecke_polynomial(pk, ell, db.F, eta)) for ell in pk.primes()]
                )
            ),
        )
        hits = find_assignments(system, db, eta=eta)
        if len(hits) <= 1 or hits[0].coincident:
            return hits, tuple(full) + tuple(partial)
        nxt = None
        for ell in primes_up_to(max_prime):
            if ell in full or ell in partial or ell == db.p or db.N % ell == 0:
                continue
            try:
                for c in parts:
                    db.frob_poly(c, ell)
            except (KeyError, ValueError):
                continue
            nxt = ell
            break
        if nxt is None:
            return hits, tuple(full) + tuple(partial)
        partial.append(nxt)


def separating_primes(assignments, db: ConstituentDatabase, bound=1000, count=3):
    """For plural non-coincident hits: the smallest primes whose first
    eigenvalue would separate them (the take-more-operators strategy)."""
    if len(assignments) < 2:
        return []
    out = []
    primes = _common_good_primes(assignments[0].parts, sum((list(a.parts) for a in assignments[1:]), []), db, bound)
    for ell in primes:
        vals = set()
        for a in assignments:
            s = system_of_constituents(db, list(a.parts), [ell])
            vals.add(tuple(x.encode() for x in s.at(ell).coeffs[:2]))
        if len(vals) > 1:
            out.append(ell)
            if len(out) >= count:
                break
    return out


# ---------------------------------------------------------------------------
# Galois multiplicity


def galois_multiplicity(assigned: list) -> dict:
    """assigned: [(eigenspace id, Assignment)]; groups eigenspaces whose
    assignments differ only in the embedding choices of the same records
    and returns {eigenspace id: (multiplicity, representative bool)}.

    The representative of each group is the one with the smallest key."""
    groups: dict = {}
    for eid, a in assigned:
        groups.setdefault(a.signature(), []).append((eid, a))
    out = {}
    for sig, members in groups.items():
        members.sort(key=lambda t: t[1].key())
        g = len(members)
        for i, (eid, a) in enumerate(members):
            out[eid] = (g, i == 0)
    return out


# ---------------------------------------------------------------------------
# pattern classification


def classify_pattern(a: Assignment) -> str:
    degs = sorted(c.degree for c in a.parts)
    parts = a.parts
    if degs == [1, 3]:
        return "GL3"
    if degs == [1, 1, 1, 1]:
        return "FourChars"
    if degs == [1, 1, 2]:
        two = next(c for c in parts if c.degree == 2)
        ones = sorted(c.w for c in parts if c.degree == 1)
        k = two.record.weight
        if k == 2 and ones[1] == ones[0] + 1 and all(c.chi.is_trivial() for c in parts if c.degree == 1):
            return "W2"
        if k == 3:
            return "W3"
        if k == 4 and ones == [1, 2] and two.w == 0 and all(
            c.chi.is_trivial() for c in parts
        ):
            return "W4"
        return "Other"
    return "Other"


# ---------------------------------------------------------------------------
# report rendering


def _lift_char(chi: DirichletChar, N: int, p: int) -> DirichletChar:
    """Induce a primitive character to modulus N (conductor must divide N)."""
    if chi.N == N:
        return chi
    import math as _m

    if N % chi.N != 0 and chi.N != 1:
        raise ValueError("character conductor does not divide the level")
    vals = [0] * max(N, 1)
    for m in range(max(N, 1)):
        if N > 1 and _m.gcd(m, N) != 1:
            continue
        vals[m] = chi.eval(m)
    if N == 1:
        vals = [1]
    return DirichletChar(N, p, tuple(vals))


def constituent_string(c: Constituent, N: int | None = None) -> str:
    """Rendering with character labels over the level-N basis (the layout
    used by the result tables)."""
    if c.chi.is_trivial():
        chi_part = ""
    elif N is not None:
        lifted = _lift_char(c.chi, N, c.chi.p)
        chi_part = char_label(N, c.chi.p, lifted) + " "
    else:
        chi_part = char_label(c.chi.N, c.chi.p, c.chi) + " "
    if c.kind == "sym2":
        return f"{chi_part}eps^{c.w} Sym^2({c.record.label})"
    if c.kind == "char":
        return f"{chi_part}eps^{c.w}"
    return f"{chi_part}eps^{c.w} {c.record.label}"


def assignment_string(a: Assignment, N: int | None = None) -> str:
    parts = sorted(a.parts, key=lambda c: (c.degree > 1, c.w, constituent_string(c, N)))
    return " + ".join(constituent_string(c, N) for c in parts)


_TERM_RE = re.compile(
    r"^(?P<chi>(?:chi_[^ ]+ )*)eps\^(?P<w>\d+)(?: (?P<tail>.+))?$"
)


def parse_assignment(text: str, db: ConstituentDatabase) -> Assignment:
    """Inverse of assignment_string over a database (embedding index 0 is
    taken as the orbit representative for records with several)."""
    parts = []
    for term in text.split(" + "):
        m = _TERM_RE.match(term.strip())
        if not m:
            raise ValueError(f"cannot parse term {term!r}")
        w = int(m.group("w"))
        chi_txt = m.group("chi").strip()
        tail = m.group("tail")
        if chi_txt:
            joined = "*".join(chi_txt.split())
            mod = int(re.match(r"chi_\{?(\d+)", joined).group(1))
            chi = parse_char_label(joined, mod, db.p)
            chi = chi.restrict(chi.conductor())
        else:
            chi = trivial_char(1, db.p)
        if tail is None:
            parts.append(Constituent(kind="char", chi=chi, w=w))
            continue
        m2 = re.match(r"^Sym\^2\((?P<lbl>.+)\)$", tail)
        if m2:
            rec = _record_by_label(db, m2.group("lbl"))
            parts.append(Constituent(kind="sym2", chi=chi, w=w, record=rec, emb_index=0))
            continue
        rec = _record_by_label(db, tail)
        kind = "gl3" if rec in db.gl3 else "newform"
        parts.append(Constituent(kind=kind, chi=chi, w=w, record=rec, emb_index=0))
    return Assignment(parts=tuple(sorted(parts, key=lambda c: c.label())))


def _record_by_label(db: ConstituentDatabase, label: str):
    for rec in db.newforms:
        if rec.label == label:
            return rec
    for rec in db.gl3:
        if rec.label == label:
            return rec
    raise KeyError(f"no record named {label}")


def report_table(N, eta_label, F: ExtField, computed, rows) -> str:
    """rows: [(galois_mult, hecke_mult, assignment_string)]."""
    field = f"GF({F.p})" if F.r == 1 else f"GF({F.p}^{F.r})"
    ops = ", ".join(computed)
    lines = [
        f"Level N = {N}.  Nebentype eta = {eta_label}.  Field F = {field}.",
        f"Computed {ops}." if computed else "Computed nothing.",
    ]
    for g, h, s in rows:
        lines.append(f"{g} | {h} | {s}")
    return "\n".join(lines) + "\n"


def parse_report_rows(text: str):
    rows = []
    for line in text.splitlines():
        m = re.match(r"^(\d+) \| (\d+) \| (.+)$", line.strip())
        if m:
            rows.append((int(m.group(1)), int(m.group(2)), m.group(3)))
    return rows
