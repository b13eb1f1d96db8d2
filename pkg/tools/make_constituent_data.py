"""Generate the bundled constituent data files.

Rational weight-2 records come from point counts on the well-known minimal
curve models.  The weight-3 records at levels 7 and 8 and the two special
weight-2 records at levels 24 and 28 are genuine dihedral constructions
from the class-number-one imaginary quadratic fields (norm equations plus
a quadratic character at the conductor), so the symmetric-square
coincidences used by the acceptance suite hold identically; the script
verifies them at every usable prime below the table bound.  The remaining
records are synthetic placeholders with deterministic pseudo-random
coefficients: structurally valid (weight/parity/field-degree bookkeeping,
including the per-level extension degrees) but not the classical
q-expansions, which this package deliberately does not compute.

Run from the repository root:  python tools/make_constituent_data.py
"""

from __future__ import annotations

import hashlib
import math
import random
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from arithcoh.constituents import ELLIPTIC_CURVES, ap_from_elliptic_curve
from arithcoh.dirichlet import char_from_exponents
from arithcoh.ffield import factor_degrees_mod, primes_up_to

OUT = Path(__file__).resolve().parent.parent / "src" / "arithcoh" / "data"
BOUND = 1000
PRIMES = primes_up_to(BOUND)

TABLE_PRIMES = {
    9: 12379, 11: 4001, 12: 5413, 13: 12037, 14: 12379, 15: 12037, 16: 4001,
    17: 16001, 18: 3637, 19: 3637, 20: 12037, 21: 12037, 22: 16001, 23: 22067,
    24: 12379, 25: 16001, 26: 12037, 27: 11863, 28: 12379, 29: 2297, 31: 4201,
    37: 3889, 41: 21881,
}
TABLE_R = {
    9: 1, 11: 2, 12: 2, 13: 1, 14: 2, 15: 2, 16: 6, 17: 2, 18: 2, 19: 6,
    20: 12, 21: 6, 22: 2, 23: 60, 24: 2, 25: 60, 26: 2, 27: 6, 28: 12,
    29: 6, 31: 60, 37: 24, 41: 60,
}


def rng_for(label: str) -> random.Random:
    seed = int.from_bytes(hashlib.sha256(label.encode()).digest()[:8], "big")
    return random.Random(seed)


def legendre(a, p):
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


def nonsquare_mod(ps, lo=2):
    """Smallest squarefree u > 1 that is a quadratic nonresidue mod every
    prime in ps (and not a perfect square)."""
    u = lo
    while True:
        if int(math.isqrt(u)) ** 2 != u and all(legendre(u, p) == -1 for p in ps):
            return u
        u += 1


def find_irreducible(deg, p, label, extra_ps=()):
    """Monic integer polynomial of the given degree, irreducible mod p (so
    also over Q); deterministic search."""
    rng = rng_for("poly:" + label)
    while True:
        coeffs = [rng.randint(-9, 9) for _ in range(deg)] + [1]
        if coeffs[0] == 0:
            continue
        try:
            if factor_degrees_mod(tuple(coeffs), p) == [deg]:
                if all(max(factor_degrees_mod(tuple(coeffs), q)) <= deg for q in extra_ps):
                    return tuple(coeffs)
        except ValueError:
            continue


# ---------------------------------------------------------------------------
# dihedral constructions


def two_squares_form(ell, c):
    """One solution (x, y), y >= 0, of x^2 + c y^2 = ell, or None."""
    y = 0
    while c * y * y <= ell:
        t = ell - c * y * y
        x = int(math.isqrt(t))
        if x * x == t:
            return x, y
        y += 1
    return None


def ap_73(ell):
    """Level-7 weight-3 trace: pi^2 + conj for the norm equation
    4 ell = c^2 + 7 d^2; zero at inert primes."""
    if ell == 7:
        raise ValueError
    if legendre(-7, ell) == -1:
        return 0
    d = 0
    while 7 * d * d <= 4 * ell:
        t = 4 * ell - 7 * d * d
        c = int(math.isqrt(t))
        if c * c == t and (c - d) % 2 == 0:
            return (c * c - 7 * d * d) // 2
        d += 1
    raise AssertionError(f"no representation for {ell}")


def ap_83(ell):
    """Level-8 weight-3 trace: 2 (x^2 - 2 y^2) for ell = x^2 + 2 y^2."""
    if ell == 2:
        raise ValueError
    if legendre(-2, ell) == -1:
        return 0
    x, y = two_squares_form(ell, 2)
    return 2 * (x * x - 2 * y * y)


def lam3(t):
    t %= 3
    if t == 1:
        return 1
    if t == 2:
        return -1
    raise ValueError("argument divisible by 3")


def ap_24c(ell):
    """Level-24 weight-2 dihedral trace over Q(sqrt(-2)) with the quadratic
    character at the prime above 3: returns (c0, c1) coefficients over the
    generator sqrt(-2)."""
    if ell in (2, 3):
        raise ValueError
    if legendre(-2, ell) == -1:
        return (0, 0)
    x, y = two_squares_form(ell, 2)
    # pi = x + y sqrt(-2); sqrt(-2) = -1 at the prime (1 + sqrt(-2))
    s1 = lam3(x - y)
    s2 = lam3(x + y)
    # a = s1 (x + y g) + s2 (x - y g), g = sqrt(-2)
    return ((s1 + s2) * x, (s1 - s2) * y)


def _in_p2sq(u, v):
    """(u + v sqrt(-7))/8 in the maximal order: u, v = 0 mod 4 and
    u/4 = v/4 mod 2."""
    return u % 4 == 0 and v % 4 == 0 and ((u // 4) - (v // 4)) % 2 == 0


def lam_p2sq(x, y):
    """+-1 according to (x + y sqrt(-7)) = +-1 mod the square of the even
    prime of Q(sqrt(-7))."""
    # pi - 1 in p2^2  <=>  (pi - 1) * (-3 - sqrt(-7)) / 8 integral
    for sign in (1, -1):
        u = -3 * (x - sign) + 7 * y
        v = -(x - sign) - 3 * y
        if _in_p2sq(u, v):
            return sign
    raise AssertionError("unit class not found")


def ap_28c(ell):
    """Level-28 weight-2 dihedral trace over Q(sqrt(-7)): coefficients over
    the generator sqrt(-7)."""
    if ell in (2, 7):
        raise ValueError
    if legendre(-7, ell) == -1:
        return (0, 0)
    x, y = two_squares_form(ell, 7)
    s1 = lam_p2sq(x, y)
    s2 = lam_p2sq(x, -y)
    return ((s1 + s2) * x, (s1 - s2) * y)


# ---------------------------------------------------------------------------
# record specification


def synthetic_ap(label, weight, deg, ell, rng):
    bound = max(2, int(2 * math.isqrt(ell ** (weight - 1))))
    c0 = rng.randint(-bound, bound)
    rest = [rng.randint(-max(2, bound // 3), max(2, bound // 3)) for _ in range(deg - 1)]
    return tuple([c0] + rest)


def curve_record(label, level):
    ainv = ELLIPTIC_CURVES[label]
    ap = {}
    for ell in PRIMES:
        if level % ell == 0:
            continue
        a = ap_from_elliptic_curve(ainv, ell)
        assert a * a <= 4 * ell, (label, ell)
        ap[ell] = (a,)
    return dict(label=label, level=level, weight=2, neb=(0,) * _nbasis(level), minpoly=(0, 1), ap=ap)


def _nbasis(N):
    from arithcoh.dirichlet import unit_group_generators

    return len(unit_group_generators(N))


def cm_record(label, level, weight, neb, apfun, minpoly):
    ap = {}
    for ell in PRIMES:
        if level % ell == 0:
            continue
        a = apfun(ell)
        ap[ell] = a if isinstance(a, tuple) else (a,)
    return dict(label=label, level=level, weight=weight, neb=neb, minpoly=minpoly, ap=ap)


def synth_record(label, level, weight, neb, minpoly):
    deg = len(minpoly) - 1
    rng = rng_for(label)
    ap = {}
    for ell in PRIMES:
        if level % ell == 0:
            continue
        ap[ell] = synthetic_ap(label, weight, deg, ell, rng)
    return dict(label=label, level=level, weight=weight, neb=neb, minpoly=minpoly, ap=ap)


def build_records():
    recs = []
    # exact: rational weight-2 forms from the curve models
    curve_levels = {
        "sigma_{11,2}": 11, "sigma_{14,2}": 14, "sigma_{15,2}": 15,
        "sigma_{17,2a}": 17, "sigma_{19,2a}": 19, "sigma_{20,2a}": 20,
        "sigma_{21,2a}": 21, "sigma_{24,2a}": 24, "sigma_{26,2a}": 26,
        "sigma_{26,2b}": 26, "sigma_{27,2a}": 27, "sigma_{37,2a}": 37,
        "sigma_{37,2b}": 37,
    }
    for label, level in curve_levels.items():
        recs.append(curve_record(label, level))
    # exact: dihedral constructions
    recs.append(cm_record("sigma_{7,3}", 7, 3, (3,), ap_73, (0, 1)))
    recs.append(cm_record("sigma_{8,3}", 8, 3, (1, 1), ap_83, (0, 1)))
    recs.append(cm_record("sigma_{24,2c}", 24, 2, (1, 1, 1), ap_24c, (2, 0, 1)))
    recs.append(cm_record("sigma_{28,2c}", 28, 2, (1, 3), ap_28c, (7, 0, 1)))

    # synthetic placeholders (deterministic; see the module docstring)
    def quad_inert(label, ps):
        u = nonsquare_mod(ps)
        return (-u, 0, 1)

    S = synth_record
    recs += [
        S("sigma_{9,3}", 9, 3, (5,), (0, 1)),
        S("sigma_{11,2b}", 11, 2, (2,), quad_inert("11b", [4001, 16001])),
        S("sigma_{12,2a}", 12, 2, (1, 1), quad_inert("12a", [5413])),
        S("sigma_{13,4}", 13, 4, (0,), (0, 1)),
        S("sigma_{13,2}", 13, 2, (2,), (0, 1)),
        S("sigma_{14,2b}", 14, 2, (2,), quad_inert("14b", [12379])),
        S("sigma_{15,2b}", 15, 2, (0, 2), quad_inert("15b", [12037])),
        S("sigma_{16,2}", 16, 2, (0, 1), (0, 1)),
        S("sigma_{16,3a}", 16, 3, (1, 0), quad_inert("16a", [4001])),
        S("sigma_{16,3b}", 16, 3, (1, 0), find_irreducible(3, 4001, "16b")),
        S("sigma_{17,4}", 17, 4, (0,), (0, 1)),
        S("sigma_{17,2b}", 17, 2, (2,), (0, 1)),
        S("sigma_{17,2c}", 17, 2, (2,), quad_inert("17c", [16001])),
        S("sigma_{18,2}", 18, 2, (2,), (0, 1)),
        S("sigma_{18,2b}", 18, 2, (2,), quad_inert("18b", [3637])),
        S("sigma_{19,4}", 19, 4, (0,), (0, 1)),
        S("sigma_{19,2b}", 19, 2, (2,), (0, 1)),
        S("sigma_{19,3a}", 19, 3, (1,), find_irreducible(6, 3637, "19a")),
        S("sigma_{20,2b}", 20, 2, (1, 1), (0, 1)),
        S("sigma_{20,3a}", 20, 3, (0, 1), find_irreducible(4, 12037, "20a")),
        S("sigma_{20,3b}", 20, 3, (0, 1), find_irreducible(3, 12037, "20b")),
        S("sigma_{21,4}", 21, 4, (0, 0), (0, 1)),
        S("sigma_{21,2b}", 21, 2, (0, 2), (0, 1)),
        S("sigma_{21,2c}", 21, 2, (1, 1), (0, 1)),
        S("sigma_{21,3a}", 21, 3, (0, 1), quad_inert("21a", [12037])),
        S("sigma_{21,3b}", 21, 3, (0, 1), find_irreducible(3, 12037, "21b")),
        S("sigma_{22,4}", 22, 4, (0,), (0, 1)),
        S("sigma_{22,2}", 22, 2, (2,), (0, 1)),
        S("sigma_{23,2a}", 23, 2, (0,), (-1, -1, 1)),
        S("sigma_{23,4}", 23, 4, (0,), (0, 1)),
        S("sigma_{23,2b}", 23, 2, (2,), (0, 1)),
        S("sigma_{23,3a}", 23, 3, (1,), find_irreducible(4, 22067, "23a")),
        S("sigma_{23,3b}", 23, 3, (1,), find_irreducible(3, 22067, "23b")),
        S("sigma_{23,3c}", 23, 3, (1,), find_irreducible(5, 22067, "23c")),
        S("sigma_{24,2b}", 24, 2, (0, 1, 0), quad_inert("24b", [12379])),
        S("sigma_{25,4}", 25, 4, (0,), (0, 1)),
        S("sigma_{25,2a}", 25, 2, (2,), quad_inert("25a", [16001])),
        S("sigma_{25,2b}", 25, 2, (4,), (0, 1)),
        S("sigma_{25,3a}", 25, 3, (1,), find_irreducible(4, 16001, "25a3")),
        S("sigma_{25,3b}", 25, 3, (1,), find_irreducible(3, 16001, "25b3")),
        S("sigma_{25,3c}", 25, 3, (1,), find_irreducible(5, 16001, "25c3")),
        S("sigma_{26,2c}", 26, 2, (4,), (0, 1)),
        S("sigma_{26,2d}", 26, 2, (6,), quad_inert("26d", [12037])),
        S("sigma_{27,4}", 27, 4, (0,), (0, 1)),
        S("sigma_{27,2b}", 27, 2, (2,), quad_inert("27b", [11863])),
        S("sigma_{27,3a}", 27, 3, (1,), find_irreducible(3, 11863, "27a")),
        S("sigma_{28,4}", 28, 4, (0, 0), (0, 1)),
        S("sigma_{28,2a}", 28, 2, (0, 2), (0, 1)),
        S("sigma_{28,2b}", 28, 2, (1, 1), quad_inert("28b", [12379])),
        S("sigma_{28,3a}", 28, 3, (0, 1), find_irreducible(4, 12379, "28a")),
        S("sigma_{28,3b}", 28, 3, (0, 1), find_irreducible(3, 12379, "28b")),
        S("sigma_{29,2a}", 29, 2, (0,), quad_inert("29a", [2297])),
        S("sigma_{29,4}", 29, 4, (0,), quad_inert("294", [2297, 3])),
        S("sigma_{29,2b}", 29, 2, (2,), quad_inert("29b", [2297, 5])),
        S("sigma_{29,2c}", 29, 2, (4,), (0, 1)),
        S("sigma_{29,2d}", 29, 2, (14,), quad_inert("29d", [2297, 7])),
        S("sigma_{29,3a}", 29, 3, (1,), find_irreducible(3, 2297, "29a3")),
        S("sigma_{31,2a}", 31, 2, (0,), quad_inert("31a", [4201])),
        S("sigma_{31,4}", 31, 4, (0,), quad_inert("314", [4201, 3])),
        S("sigma_{31,2b}", 31, 2, (2,), quad_inert("31b", [4201, 5])),
        S("sigma_{31,2c}", 31, 2, (6,), (0, 1)),
        S("sigma_{31,2d}", 31, 2, (10,), quad_inert("31d", [4201, 7])),
        S("sigma_{31,3a}", 31, 3, (1,), find_irreducible(4, 4201, "31a3")),
        S("sigma_{31,3b}", 31, 3, (1,), find_irreducible(3, 4201, "31b3")),
        S("sigma_{31,3c}", 31, 3, (1,), find_irreducible(5, 4201, "31c3")),
        S("sigma_{37,4}", 37, 4, (0,), find_irreducible(4, 3889, "374")),
        S("sigma_{37,2c}", 37, 2, (2,), find_irreducible(3, 3889, "37c")),
        S("sigma_{37,2d}", 37, 2, (4,), (0, 1)),
        S("sigma_{37,2e}", 37, 2, (4,), (0, 1)),
        S("sigma_{37,2f}", 37, 2, (6,), quad_inert("37f", [3889])),
        S("sigma_{37,2g}", 37, 2, (12,), (0, 1)),
        S("sigma_{37,2h}", 37, 2, (18,), quad_inert("37h", [3889, 3])),
        S("sigma_{37,3a}", 37, 3, (1,), find_irreducible(8, 3889, "37a3")),
        S("sigma_{41,2a}", 41, 2, (0,), find_irreducible(3, 21881, "41a")),
        S("sigma_{41,4}", 41, 4, (0,), find_irreducible(3, 21881, "414")),
        S("sigma_{41,2b}", 41, 2, (2,), find_irreducible(3, 21881, "41b")),
        S("sigma_{41,2c}", 41, 2, (4,), quad_inert("41c", [21881])),
        S("sigma_{41,2d}", 41, 2, (8,), quad_inert("41d", [21881, 3])),
        S("sigma_{41,2e}", 41, 2, (10,), find_irreducible(3, 21881, "41e")),
        S("sigma_{41,2f}", 41, 2, (20,), quad_inert("41f", [21881, 5])),
        S("sigma_{41,3a}", 41, 3, (1,), find_irreducible(4, 21881, "41a3")),
        S("sigma_{41,3b}", 41, 3, (1,), find_irreducible(5, 21881, "41b3")),
    ]
    return recs


def write_newform(rec):
    name = rec["label"].replace("sigma_{", "sigma_").replace(",", "_").replace("}", "")
    path = OUT / "newforms" / f"{name}.nf"
    neb = ",".join(map(str, rec["neb"])) if rec["neb"] else "-"
    lines = [f"NEWFORM {rec['label']} {rec['level']} {rec['weight']} {neb}"]
    lines.append("FIELD " + " ".join(map(str, rec["minpoly"])))
    for ell in sorted(rec["ap"]):
        lines.append(f"AP {ell} : " + " ".join(map(str, rec["ap"][ell])))
    path.write_text("\n".join(lines) + "\n")


def write_gl3():
    p = TABLE_PRIMES[41]
    eta = char_from_exponents(41, p, [10])
    rng = rng_for("delta_41")
    lines = ["GL3 delta_41 41 10"]
    for ell in PRIMES:
        if ell in (41, p):
            continue
        c3 = (-eta.eval(ell) * pow(ell, 3, p)) % p
        c1 = rng.randrange(p)
        c2 = rng.randrange(p)
        lines.append(f"POLY {ell} : 1 {c1} {c2} {c3}")
    (OUT / "gl3" / "delta_41.gl3").write_text("\n".join(lines) + "\n")


# ---------------------------------------------------------------------------
# verification


def verify_dihedral_identities(recs):
    """Sym^2 of the level-24 (28) dihedral record equals the level-8 (7)
    weight-3 record plus the odd quadratic character of conductor 3 (4)
    times the cyclotomic character, as polynomial systems, at every prime
    below the bound away from the levels."""
    by = {r["label"]: r for r in recs}
    for dih, w3, disc in (
        ("sigma_{24,2c}", "sigma_{8,3}", -3),
        ("sigma_{28,2c}", "sigma_{7,3}", -4),
    ):
        d = by[dih]
        t = by[w3]
        u = -d["minpoly"][0]  # generator^2 = u (x^2 - u form with u < 0)
        for ell in PRIMES:
            if d["level"] % ell == 0:
                continue
            c0, c1 = d["ap"][ell]  # trace a = c0 + c1 sqrt(u)
            assert c0 == 0 or c1 == 0, "dihedral trace must be rational or pure"
            a2 = c0 * c0 + u * c1 * c1  # a^2, rational in both cases
            det = _psi_value_sign(d, ell) * ell
            e1 = a2 - det
            e2 = a2 * det - det * det
            e3 = det**3
            # right side: (1 - a' X + psi' ell^2 X^2)(1 - chi_odd(ell) ell X)
            ap3 = t["ap"][ell][0]
            psi3 = _psi_value_sign(t, ell)
            chi_odd = legendre(disc, ell)
            r1 = ap3 + chi_odd * ell
            r2 = psi3 * ell * ell + ap3 * chi_odd * ell
            r3 = psi3 * ell * ell * chi_odd * ell
            assert (e1, e2, e3) == (r1, r2, r3), (dih, ell, (e1, e2, e3), (r1, r2, r3))
    print("dihedral symmetric-square identities verified below", BOUND)


def _psi_value_sign(rec, ell):
    """Value (+-1) of the record's nebentype at ell, via the canonical
    basis over a scratch prime where the character is quadratic."""
    from arithcoh.ffield import find_admissible_prime

    p = find_admissible_prime(rec["level"], 10**6)
    chi = char_from_exponents(rec["level"], p, list(rec["neb"]))
    v = chi.eval(ell)
    if v == 1:
        return 1
    if v == p - 1:
        return -1
    raise AssertionError("nebentype not quadratic where it must be")


def verify_r_targets(recs):
    from arithcoh.ffield import min_extension_degree

    for N, r_target in sorted(TABLE_R.items()):
        p = TABLE_PRIMES[N]
        polys = [tuple(rec["minpoly"]) for rec in recs if N % rec["level"] == 0]
        r = min_extension_degree(polys, p) if polys else 1
        assert r == r_target, (N, r, r_target)
    print("per-level extension degrees match the run configurations")


def main():
    (OUT / "newforms").mkdir(parents=True, exist_ok=True)
    (OUT / "gl3").mkdir(parents=True, exist_ok=True)
    recs = build_records()
    labels = [r["label"] for r in recs]
    assert len(labels) == len(set(labels))
    verify_dihedral_identities(recs)
    verify_r_targets(recs)
    for rec in recs:
        write_newform(rec)
    write_gl3()
    print(f"wrote {len(recs)} newform records and 1 three-dimensional table")


if __name__ == "__main__":
    main()
