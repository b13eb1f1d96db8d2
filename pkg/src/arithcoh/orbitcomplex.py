"""Congruence-subgroup orbit structure on the reduction-theory cells and
the twisted chain complex.

Gamma0(N) is the subgroup of SL(n,Z) whose bottom row is (0,...,0,*) mod N;
its right cosets in SL(n,Z) are indexed by the projective space of bottom
rows mod N.  Each cell class carries the right action of its stabilizer on
that coset space; the orbits are the Gamma0(N)-classes of cells, an orbit
being "alive" exactly when the character-times-orientation local
representation of its stabilizer is trivial.  Alive orbits in degree k form
the basis of the k-th term of the twisted complex, and the differentials
accumulate, per facet, the incidence sign, the orientation value of the
stabilizer correction, and the character value of the congruence factor.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .dirichlet import DirichletChar
from .sparsela import SparseMatrix, homology_basis, rank
from .voronoi import TruncatedVoronoiComplex


# ---------------------------------------------------------------------------
# projective coset table


def projective_point_count(N: int, n: int) -> int:
    """#P^(n-1)(Z/N) = N^(n-1) prod_{q | N} (1 + 1/q + ... + 1/q^(n-1))."""
    if N == 1:
        return 1
    count = N ** (n - 1)
    num, den = 1, 1
    M = N
    q = 2
    while q <= M:
        if M % q == 0:
            num *= sum(q**i for i in range(n))
            den *= q ** (n - 1)
            while M % q == 0:
                M //= q
        q += 1
    assert (count * num) % den == 0
    return count * num // den


class CosetTable:
    """Representatives of Gamma0(N) \\ SL(n,Z) indexed by projective points
    of bottom rows mod N, with integral SL(n,Z) lifts on demand."""

    def __init__(self, N: int, n: int):
        self.N = N
        self.n = n
        if N == 1:
            self.canon = np.zeros(1, dtype=np.int64)
            self.points = np.zeros((1, n), dtype=np.int64)
            self.pid_of_index = np.zeros(1, dtype=np.int64)
            self.size = 1
            self._unit_data = []
            return
        total = N**n
        digits = np.empty((total, n), dtype=np.int64)
        idx = np.arange(total, dtype=np.int64)
        rem = idx.copy()
        for i in range(n):
            digits[:, i] = rem % N
            rem //= N
        g = np.full(total, N, dtype=np.int64)
        for i in range(n):
            g = np.gcd(g, digits[:, i])
        primitive = np.gcd(g, N) == 1
        units = [u for u in range(1, N) if math.gcd(u, N) == 1]
        weights = N ** np.arange(n, dtype=np.int64)
        canon = np.where(primitive, idx, -1)
        for u in units:
            scaled = (digits * u) % N
            uidx = scaled @ weights
            np.minimum(canon, np.where(primitive, uidx, -1), out=canon, where=primitive)
        self.canon = canon
        reps_mask = primitive & (canon == idx)
        rep_idx = np.flatnonzero(reps_mask)
        self.points = digits[rep_idx]
        self.size = len(rep_idx)
        pid = np.full(total, -1, dtype=np.int64)
        pid[rep_idx] = np.arange(self.size)
        self.pid_of_index = pid
        self.weights = weights
        # unit-extraction helpers per prime power q | N
        self._unit_data = []
        M = N
        q = 2
        while q <= M:
            if M % q == 0:
                e = 0
                while M % q == 0:
                    M //= q
                    e += 1
                qq = q**e
                rest = N // qq
                # CRT coefficient: 1 mod qq, 0 mod rest
                c = (rest * pow(rest, -1, qq)) % N if rest > 1 else 1 % N
                jq = np.zeros(self.size, dtype=np.int64)
                invq = np.zeros(self.size, dtype=np.int64)
                for k in range(self.size):
                    row = self.points[k]
                    for j in range(n):
                        if math.gcd(int(row[j]), q) == 1:
                            jq[k] = j
                            invq[k] = pow(int(row[j]) % qq, -1, qq)
                            break
                    else:
                        raise AssertionError("non-primitive representative")
                self._unit_data.append((qq, c, jq, invq))
            q += 1

    def pid(self, row) -> int:
        """Point id of an integer bottom row."""
        if self.N == 1:
            return 0
        idx = 0
        for i in reversed(range(self.n)):
            idx = idx * self.N + int(row[i]) % self.N
        c = self.canon[idx]
        if c < 0:
            raise ValueError("row not primitive mod N")
        return int(self.pid_of_index[c])

    def pids_of_rows(self, rows: np.ndarray) -> np.ndarray:
        if self.N == 1:
            return np.zeros(len(rows), dtype=np.int64)
        idx = (rows % self.N) @ self.weights
        return self.pid_of_index[self.canon[idx]]

    def unit_for(self, pids: np.ndarray, rows: np.ndarray) -> np.ndarray:
        """Units u mod N with rows = u * points[pids] mod N (rows must be
        unit multiples of the canonical representatives)."""
        if self.N == 1:
            return np.zeros(len(rows), dtype=np.int64)
        u = np.zeros(len(rows), dtype=np.int64)
        for qq, c, jq, invq in self._unit_data:
            j = jq[pids]
            vals = rows[np.arange(len(rows)), j] % qq
            uq = (vals * invq[pids]) % qq
            u = (u + uq * c) % self.N
        return u

    @lru_cache(maxsize=200000)
    def lift(self, pid: int):
        """An SL(n,Z) matrix whose bottom row reduces to the point."""
        row = [int(x) for x in self.points[pid]] if self.N > 1 else [0] * (self.n - 1) + [1]
        return sl_completion_bottom(row, self.N)


def sl_completion_bottom(row_mod, N):
    """SL(n,Z) matrix with bottom row congruent to row_mod mod N.

    Lifts the residue row to a primitive integer vector, then completes by
    integer column operations."""
    n = len(row_mod)
    v = [int(x) % N if N > 1 else int(x) for x in row_mod]
    if N == 1:
        v = [0] * (n - 1) + [1]
    # make the integer vector primitive (its gcd is coprime to N already)
    g = 0
    for x in v:
        g = math.gcd(g, x)
    tries = 0
    while g != 1:
        # bump an entry by N to break the common factor
        for i in range(n):
            w = v[:]
            w[i] += N
            g2 = 0
            for x in w:
                g2 = math.gcd(g2, x)
            if g2 < g:
                v = w
                g = g2
                break
        else:
            v[0] += N
            g = 0
            for x in v:
                g = math.gcd(g, x)
        tries += 1
        if tries > 64:
            raise AssertionError("failed to lift to a primitive vector")
    # column operations bringing v to e_n, accumulated on U (det 1)
    U = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    w = v[:]

    def colop(j, i, q):  # column j -= q * column i
        for rr in range(n):
            U[rr][j] -= q * U[rr][i]

    while True:
        nz = [i for i in range(n) if w[i] != 0]
        if len(nz) == 1 and abs(w[nz[0]]) == 1:
            break
        i = min(nz, key=lambda k: abs(w[k]))
        progressed = False
        for j in nz:
            if j == i:
                continue
            q = w[j] // w[i]
            if q:
                w[j] -= q * w[i]
                colop(j, i, q)
                progressed = True
        if not progressed:
            # all other entries smaller in abs; swap roles via subtraction
            j = [k for k in nz if k != i][0]
            w[i] -= w[j]
            colop(i, j, 1)
    k = [i for i in range(n) if w[i] != 0][0]
    if k != n - 1:
        # swap columns k and n-1 with a sign to keep det 1
        for rr in range(n):
            U[rr][k], U[rr][n - 1] = -U[rr][n - 1], U[rr][k]
        w[k], w[n - 1] = -w[n - 1], w[k]
    if w[n - 1] == -1:
        for rr in range(n):
            U[rr][n - 1] = -U[rr][n - 1]
            U[rr][0] = -U[rr][0]
        w[n - 1] = 1
    # v . U = e_n, so U^{-1} has bottom row v
    r = int_inverse(U)
    assert r[n - 1] == tuple(v), "completion failed"
    assert int_det(r) == 1
    return r


def int_det(m):
    from fractions import Fraction

    from .voronoi import _det

    return int(_det([[Fraction(x) for x in row] for row in m]))


def int_inverse(m):
    """Inverse of an integer matrix with det +-1, as a tuple of row tuples."""
    n = len(m)
    d = int_det(m)
    if abs(d) != 1:
        raise ValueError("matrix not invertible over Z")
    from fractions import Fraction

    from .voronoi import _mat_inv

    inv = _mat_inv([[Fraction(x) for x in row] for row in m])
    return tuple(tuple(int(x) for x in row) for row in inv)


def mat_mul(a, b):
    n = len(a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)) for i in range(n)
    )


# ---------------------------------------------------------------------------
# orbit structure per cell class


@dataclass
class CellOrbits:
    """Right-action orbit data of one cell class on the coset space."""

    class_degree: int
    class_index: int
    orbit_rep: np.ndarray  # point -> chosen point of its orbit
    to_chosen: np.ndarray  # point -> index (into stab) of h with p.h = chosen
    chosen: np.ndarray  # sorted chosen points (one per orbit)
    orbit_index: np.ndarray  # point -> orbit number (index into chosen)
    alive: np.ndarray  # per orbit, bool
    local_nontrivial: np.ndarray  # per orbit, bool (kept for diagnostics)


class CellOrbitStructure:
    """All orbit data for one (N, eta, complex); basis of the twisted
    complex and the decompose bookkeeping."""

    def __init__(self, N: int, eta: DirichletChar, cx: TruncatedVoronoiComplex, coset: CosetTable | None = None):
        self.N = N
        self.eta = eta
        self.cx = cx
        self.n = cx.n
        self.p = eta.p
        self.coset = coset or CosetTable(N, cx.n)
        self.orbits: list[list[CellOrbits]] = [[], [], []]
        eta_vals = np.array([eta.eval(m) if N > 1 else 1 for m in range(max(N, 1))], dtype=np.int64)
        for k in range(3):
            for ci, cls in enumerate(cx.classes[k]):
                self.orbits[k].append(self._build_orbits(k, ci, cls, eta_vals))
        # basis: per degree, list of (class index, orbit number); offsets
        self.basis: list[list[tuple[int, int]]] = [[], [], []]
        for k in range(3):
            for ci, od in enumerate(self.orbits[k]):
                for o in range(len(od.chosen)):
                    if od.alive[o]:
                        self.basis[k].append((ci, o))
        self.dims = [len(b) for b in self.basis]
        self.basis_index: list[dict] = []
        for k in range(3):
            self.basis_index.append({key: i for i, key in enumerate(self.basis[k])})

    # -- construction ----------------------------------------------------

    def _build_orbits(self, k, ci, cls, eta_vals) -> CellOrbits:
        ct = self.coset
        P = ct.size
        n = self.n
        p = self.p
        elems = [g for g, _ in cls.stab]
        zvals = [z for _, z in cls.stab]
        acts = []
        rows = ct.points if self.N > 1 else np.zeros((1, n), dtype=np.int64)
        for g in elems:
            garr = np.array(g, dtype=np.int64)
            imgs = rows @ garr
            acts.append(ct.pids_of_rows(imgs))
        # the stored stabilizer is the full group, so the orbit of p is
        # exactly {p.g : g}, and one sweep gives the minimum
        orbit_rep = np.arange(P, dtype=np.int64)
        for act in acts:
            np.minimum(orbit_rep, act, out=orbit_rep)
        # to_chosen: element index h with p.h = orbit_rep[p]
        to_chosen = np.full(P, -1, dtype=np.int64)
        for ei, act in enumerate(acts):
            hit = (act == orbit_rep) & (to_chosen < 0)
            to_chosen[hit] = ei
        assert np.all(to_chosen >= 0), "orbit closure incomplete"
        chosen = np.unique(orbit_rep)
        orbit_index = np.searchsorted(chosen, orbit_rep)
        # aliveness: for every stab element fixing the chosen point,
        # eta(unit) * orientation == 1
        alive = np.ones(len(chosen), dtype=bool)
        nontriv = np.zeros(len(chosen), dtype=bool)
        for ei, act in enumerate(acts):
            fixing = act[chosen] == chosen
            if not np.any(fixing):
                continue
            pids = chosen[fixing]
            imgs = (rows[pids] @ np.array(elems[ei], dtype=np.int64)) % max(self.N, 1)
            u = ct.unit_for(pids, imgs)
            val = eta_vals[u] if self.N > 1 else np.ones(len(pids), dtype=np.int64)
            if zvals[ei] == -1:
                val = (-val) % p
            bad = val != 1
            idx = np.flatnonzero(fixing)
            alive[idx[bad]] = False
            nontriv[idx[bad]] = True
        return CellOrbits(
            class_degree=k,
            class_index=ci,
            orbit_rep=orbit_rep,
            to_chosen=to_chosen,
            chosen=chosen,
            orbit_index=orbit_index,
            alive=alive,
            local_nontrivial=nontriv,
        )

    # -- decompose ---------------------------------------------------------

    def decompose(self, g, k: int, ci: int):
        """Write g in SL(n,Z) as gamma . r . g_sigma with gamma in
        Gamma0(N), r the chosen representative of the cell-orbit of g's
        coset, and g_sigma in the class stabilizer.  Exact integer
        matrices."""
        cls = self.cx.classes[k][ci]
        od = self.orbits[k][ci]
        ct = self.coset
        n = self.n
        bottom = g[n - 1]
        q = ct.pid(bottom)
        e = int(od.to_chosen[q])
        h = cls.stab[e][0]
        q0 = int(od.orbit_rep[q])
        r = ct.lift(q0)
        gh = mat_mul(tuple(map(tuple, g)), h)
        gamma = mat_mul(gh, int_inverse(r))
        g_sigma = int_inverse(h)
        # sanity: gamma in Gamma0(N)
        if self.N > 1 and any(gamma[n - 1][j] % self.N for j in range(n - 1)):
            raise AssertionError("decompose produced an element outside the congruence subgroup")
        return gamma, r, g_sigma

    # -- boundary ----------------------------------------------------------

    def boundary_matrix(self, k: int) -> SparseMatrix:
        """Differential from degree k to degree k-1 as a (dim_k x dim_{k-1})
        sparse matrix over GF(p)."""
        if k not in (1, 2):
            raise ValueError("differentials exist for degrees 1 and 2")
        p = self.p
        ct = self.coset
        n = self.n
        N = max(self.N, 1)
        entries: dict[tuple[int, int], int] = {}
        rows_pts = ct.points if self.N > 1 else np.zeros((1, n), dtype=np.int64)
        for ci, cls in enumerate(self.cx.classes[k]):
            od = self.orbits[k][ci]
            src_orbits = [o for o in range(len(od.chosen)) if od.alive[o]]
            if not src_orbits:
                continue
            src_pids = od.chosen[np.array(src_orbits, dtype=np.int64)]
            src_rows = rows_pts[src_pids]
            for face in cls.faces:
                if face is None:
                    continue
                j, ti, h, s_j = face
                tod = self.orbits[k - 1][ti]
                tcls = self.cx.classes[k - 1][ti]
                harr = np.array(h, dtype=np.int64)
                rows1 = (src_rows @ harr) % N
                qpids = ct.pids_of_rows(rows1)
                base_sign = (-1) ** (j + 1) * s_j
                for a, o in enumerate(src_orbits):
                    q = int(qpids[a])
                    to = int(tod.orbit_index[q])
                    if not tod.alive[to]:
                        continue
                    e = int(tod.to_chosen[q])
                    ge = np.array(tcls.stab[e][0], dtype=np.int64)
                    z_e = tcls.stab[e][1]
                    row2 = (rows1[a] @ ge) % N
                    q0 = int(tod.orbit_rep[q])
                    u = int(ct.unit_for(np.array([q0]), row2.reshape(1, -1))[0])
                    etaval = self.eta.eval(u) if self.N > 1 else 1
                    coeff = base_sign * z_e * pow(etaval, p - 2, p)
                    src_idx = self.basis_index[k][(ci, o)]
                    tgt_idx = self.basis_index[k - 1][(ti, to)]
                    key = (src_idx, tgt_idx)
                    entries[key] = (entries.get(key, 0) + coeff) % p
        mat = SparseMatrix.from_entries(
            self.dims[k], self.dims[k - 1], p, [(i, j, v) for (i, j), v in entries.items() if v % p]
        )
        return mat


# ---------------------------------------------------------------------------
# top-level drivers


def coset_table(N: int, n: int) -> CosetTable:
    ct = CosetTable(N, n)
    expect = projective_point_count(N, n)
    if ct.size != expect:
        raise AssertionError(f"coset table size {ct.size} != {expect}")
    return ct


def cell_orbits(N: int, eta: DirichletChar, cx: TruncatedVoronoiComplex) -> CellOrbitStructure:
    return CellOrbitStructure(N, eta, cx)


@dataclass
class ComplexResult:
    structure: CellOrbitStructure
    d2: SparseMatrix
    d1: SparseMatrix

    @property
    def dims(self):
        return self.structure.dims


def build_complex(N: int, eta: DirichletChar, cx: TruncatedVoronoiComplex) -> ComplexResult:
    st = CellOrbitStructure(N, eta, cx)
    d2 = st.boundary_matrix(2)
    d1 = st.boundary_matrix(1)
    if not d2.matmul(d1).is_zero():
        raise AssertionError("differentials do not compose to zero")
    return ComplexResult(structure=st, d2=d2, d1=d1)


def homology_h1(N: int, eta: DirichletChar, cx: TruncatedVoronoiComplex, want_basis=False):
    """Middle homology of the twisted complex; returns (dimension, result,
    basis-or-None)."""
    res = build_complex(N, eta, cx)
    dim = res.dims[1] - rank(res.d1) - rank(res.d2)
    basis = homology_basis(res.d1, res.d2) if want_basis else None
    if want_basis and basis.dimension != dim:
        raise AssertionError("rank computation disagrees with the quotient basis")
    return dim, res, basis


def homology_h0(res: ComplexResult) -> int:
    """Bottom homology (coinvariants modulo boundaries)."""
    return res.dims[0] - rank(res.d1)
