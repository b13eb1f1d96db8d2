"""Hecke operator machinery on the middle homology.

Single right-coset representatives for the double cosets of the diagonal
matrices with k entries equal to ell, ingestion and validation of operator
matrices on a homology basis, a pluggable cycle-reduction oracle (the
actual reduction algorithm is external; the bundled oracle only handles
chains already supported on the cell symbols), simultaneous eigenspace
refinement, eigenpackets, and full/partial Hecke polynomials.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .dirichlet import DirichletChar
from .ffield import ExtField, FieldElem, fpoly_roots


def gaussian_binomial(n: int, k: int, q: int) -> int:
    if not 0 <= k <= n:
        return 0
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    assert num % den == 0
    return num // den


def single_coset_reps(n: int, ell: int, k: int) -> list[tuple]:
    """Upper-triangular representatives of the single cosets in the double
    coset of diag(1,..,1,ell,..,ell) with k entries ell; determinant ell^k,
    count the Gaussian binomial."""
    if k < 0 or k > n:
        raise ValueError("k out of range")
    reps = []
    for positions in itertools.combinations(range(n), k):
        pos = set(positions)
        free = [(i, j) for i in range(n) for j in range(i + 1, n) if i not in pos and j in pos]
        for combo in itertools.product(range(ell), repeat=len(free)):
            m = [[0] * n for _ in range(n)]
            for i in range(n):
                m[i][i] = ell if i in pos else 1
            for (i, j), v in zip(free, combo):
                m[i][j] = v
            reps.append(tuple(tuple(row) for row in m))
    assert len(reps) == gaussian_binomial(n, k, ell)
    return reps


# ---------------------------------------------------------------------------
# dense linear algebra over an ExtField (small matrices)


def mat_identity(F: ExtField, d: int):
    return [[F.one if i == j else F.zero for j in range(d)] for i in range(d)]


def mat_mul_f(A, B, F):
    n, m, l = len(A), len(B[0]), len(B)
    out = [[F.zero] * m for _ in range(n)]
    for i in range(n):
        for k in range(l):
            a = A[i][k]
            if not a:
                continue
            for j in range(m):
                if B[k][j]:
                    out[i][j] = out[i][j] + a * B[k][j]
    return out


def mat_equal(A, B):
    return all(x == y for ra, rb in zip(A, B) for x, y in zip(ra, rb))


def rref_f(M, F):
    """Reduced row echelon over F; returns (rank, pivots, rows) without
    mutating the input."""
    rows = [list(r) for r in M]
    nr = len(rows)
    nc = len(rows[0]) if rows else 0
    rank = 0
    pivots = []
    for col in range(nc):
        piv = None
        for i in range(rank, nr):
            if rows[i][col]:
                piv = i
                break
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = rows[rank][col].inverse()
        rows[rank] = [x * inv for x in rows[rank]]
        for i in range(nr):
            if i != rank and rows[i][col]:
                f = rows[i][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[rank])]
        pivots.append(col)
        rank += 1
    return rank, pivots, rows


def kernel_f(M, F):
    """Basis of {x : x M = 0} for a dense matrix over F (rows = domain)."""
    d = len(M)
    n = len(M[0]) if M else 0
    aug = [list(M[i]) + [F.one if j == i else F.zero for j in range(d)] for i in range(d)]
    # eliminate on the first n columns only
    rank = 0
    for col in range(n):
        piv = None
        for i in range(rank, d):
            if aug[i][col]:
                piv = i
                break
        if piv is None:
            continue
        aug[rank], aug[piv] = aug[piv], aug[rank]
        inv = aug[rank][col].inverse()
        aug[rank] = [x * inv for x in aug[rank]]
        for i in range(d):
            if i != rank and aug[i][col]:
                f = aug[i][col]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[rank])]
        rank += 1
    out = []
    for i in range(rank, d):
        if all(not x for x in aug[i][:n]):
            out.append(aug[i][n:])
    return out


def solve_in_rowspace(B, y, F):
    """Coefficients c with c B = y, or None (B rows assumed independent)."""
    d = len(B)
    n = len(y)
    aug = [list(B[i]) + [F.one if j == i else F.zero for j in range(d)] for i in range(d)]
    vec = list(y) + [F.zero] * d
    rank = 0
    for col in range(n):
        piv = None
        for i in range(rank, d):
            if aug[i][col]:
                piv = i
                break
        if piv is None:
            continue
        aug[rank], aug[piv] = aug[piv], aug[rank]
        inv = aug[rank][col].inverse()
        aug[rank] = [x * inv for x in aug[rank]]
        for i in range(d):
            if i != rank and aug[i][col]:
                f = aug[i][col]
                aug[i] = [x - f * y2 for x, y2 in zip(aug[i], aug[rank])]
        rank += 1
    # reduce y along the same echelon
    for i in range(rank):
        lead = next(j for j in range(n) if aug[i][j])
        if vec[lead]:
            f = vec[lead]
            vec = [x - f * y2 for x, y2 in zip(vec, aug[i])]
    if any(vec[:n]):
        return None
    return [-x for x in vec[n:]]


def charpoly_f(M, F):
    """det(X I - M) by evaluation at distinct scalars and Lagrange
    interpolation (needs |F| > dim, always true here)."""
    d = len(M)
    xs = [F(i) for i in range(d + 1)]
    ys = []
    for lam in xs:
        A = [[(lam if i == j else F.zero) - M[i][j] for j in range(d)] for i in range(d)]
        ys.append(_det_f(A, F))
    # Lagrange interpolation to coefficient form
    coeffs = [F.zero] * (d + 1)
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        num = [F.one]
        den = F.one
        for j, xj in enumerate(xs):
            if i == j:
                continue
            num = _poly_mul_f(num, [-xj, F.one], F)
            den = den * (xi - xj)
        scale = yi * den.inverse()
        for k, c in enumerate(num):
            coeffs[k] = coeffs[k] + scale * c
    return coeffs


def _poly_mul_f(a, b, F):
    out = [F.zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + x * y
    return out


def _det_f(M, F):
    m = [list(r) for r in M]
    d = len(m)
    det = F.one
    for col in range(d):
        piv = None
        for i in range(col, d):
            if m[i][col]:
                piv = i
                break
        if piv is None:
            return F.zero
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        det = det * m[col][col]
        inv = m[col][col].inverse()
        for i in range(col + 1, d):
            if m[i][col]:
                f = m[i][col] * inv
                m[i] = [x - f * y for x, y in zip(m[i], m[col])]
    return det


# ---------------------------------------------------------------------------
# operators


class HeckeValidationError(ValueError):
    pass


class NonRationalSpectrumError(RuntimeError):
    """Raised when an operator's spectrum is not rational over the working
    field or the operator is not semisimple on the space; observed never to
    happen on genuine data, so this is a diagnostic, not a code path."""


@dataclass
class HeckeOperator:
    ell: int
    k: int
    matrix: list  # dense rows over F

    @property
    def dim(self):
        return len(self.matrix)


class HeckeCollection:
    """Validated set of commuting operators for one (N, eta) homology."""

    def __init__(self, N: int, eta: DirichletChar, F: ExtField, dim: int):
        self.N = N
        self.eta = eta
        self.F = F
        self.dim = dim
        self.operators: list[HeckeOperator] = []

    def add(self, op: HeckeOperator):
        F = self.F
        if op.dim != self.dim or any(len(r) != self.dim for r in op.matrix):
            raise HeckeValidationError("operator dimension mismatch")
        if self.N % op.ell == 0 or F.p == op.ell:
            raise HeckeValidationError("operator prime divides the level or the characteristic")
        if op.k == 0:
            if not mat_equal(op.matrix, mat_identity(F, self.dim)):
                raise HeckeValidationError("the k=0 operator must be the identity")
        if op.k == 4:
            scal = F(self.eta.eval(op.ell))
            want = [[scal if i == j else F.zero for j in range(self.dim)] for i in range(self.dim)]
            if not mat_equal(op.matrix, want):
                raise HeckeValidationError("the k=4 operator must be the nebentype value times the identity")
        for other in self.operators:
            ab = mat_mul_f(op.matrix, other.matrix, F)
            ba = mat_mul_f(other.matrix, op.matrix, F)
            if not mat_equal(ab, ba):
                raise HeckeValidationError(
                    f"operators ({op.ell},{op.k}) and ({other.ell},{other.k}) do not commute"
                )
        self.operators.append(op)

    def save(self, op: HeckeOperator, path, eta_label: str, r_declared=None):
        F = self.F
        with open(path, "w") as fh:
            fh.write(f"HECKE {self.N} {eta_label} {F.p} {F.r} {op.ell} {op.k} {self.dim}\n")
            for row in op.matrix:
                fh.write(" ".join(str(x.encode()) for x in row) + "\n")

    @staticmethod
    def load_matrix(path, F: ExtField):
        with open(path) as fh:
            head = fh.readline().split()
            if head[0] != "HECKE":
                raise ValueError("not a Hecke matrix file")
            N, eta_label, p, r, ell, k, dim = (
                int(head[1]), head[2], int(head[3]), int(head[4]), int(head[5]), int(head[6]), int(head[7]),
            )
            if (p, r) != (F.p, F.r):
                raise HeckeValidationError("field mismatch in Hecke file")
            rows = []
            for line in fh:
                if line.strip():
                    rows.append([F.from_encoding(int(x)) for x in line.split()])
            if len(rows) != dim or any(len(r_) != dim for r_ in rows):
                raise HeckeValidationError("matrix shape mismatch in Hecke file")
        return N, eta_label, HeckeOperator(ell=ell, k=k, matrix=rows)


# ---------------------------------------------------------------------------
# reduction oracle


class ReductionOracle:
    """Interface: given a symbol chain, return a homologous chain supported
    on the cell symbols of the complex."""

    def reduce(self, chain, supported) -> "object":
        raise NotImplementedError


class TrivialReductionOracle(ReductionOracle):
    """Identity on chains that are already supported; anything else is out
    of scope for this package (the reduction algorithm is external)."""

    def reduce(self, chain, supported):
        for key in chain.terms:
            if key not in supported:
                raise NotImplementedError(
                    "chain not supported on cell symbols; supply an external reduction "
                    "or ingest precomputed operator matrices"
                )
        return chain


# ---------------------------------------------------------------------------
# eigen structure


@dataclass
class Eigenpacket:
    """(ell, k) -> eigenvalue over F; `full` lists the ell with all k
    computed, `partial` those with only k=1."""

    values: dict
    full: tuple
    partial: tuple = ()

    def a(self, ell: int, k: int) -> FieldElem:
        return self.values[(ell, k)]

    def primes(self):
        return tuple(sorted(set(self.full) | set(self.partial)))


@dataclass
class SimultaneousEigenspace:
    basis: list  # rows over F inside the homology coordinates
    packet: Eigenpacket

    @property
    def hecke_multiplicity(self) -> int:
        return len(self.basis)


def eigenspaces_of_operator(op: HeckeOperator, F: ExtField):
    """[(eigenvalue, basis rows)], F-rational part; raises the diagnostic
    error if the operator is not split-semisimple over F."""
    d = op.dim
    cp = charpoly_f(op.matrix, F)
    roots = fpoly_roots(cp, F)
    spaces = []
    total = 0
    for a in roots:
        shifted = [[op.matrix[i][j] - (a if i == j else F.zero) for j in range(d)] for i in range(d)]
        basis = kernel_f(shifted, F)
        if basis:
            spaces.append((a, basis))
            total += len(basis)
    if total != d:
        raise NonRationalSpectrumError(
            f"operator ({op.ell},{op.k}): eigenspaces span {total} of {d} dimensions "
            "(non-rational or non-semisimple spectrum)"
        )
    return spaces


def _restrict(op_matrix, basis, F):
    """Matrix of the operator on the row-span of basis."""
    rows = [ [sum((basis[i][t] * op_matrix[t][j] for t in range(len(op_matrix))), F.zero) for j in range(len(op_matrix[0]))] for i in range(len(basis)) ]
    out = []
    for row in rows:
        c = solve_in_rowspace(basis, row, F)
        if c is None:
            raise NonRationalSpectrumError("operator does not preserve a refinement subspace")
        out.append(c)
    return out


def simultaneous_eigenspaces(collection: HeckeCollection) -> list[SimultaneousEigenspace]:
    """Common refinement of the eigenspace decompositions of all operators.

    Result is independent of operator order (they commute); deterministic
    ordering by eigenvalue encodings."""
    F = collection.F
    d = collection.dim
    pieces = [(mat_identity(F, d), {})]  # (basis rows, partial packet)
    ops = sorted(collection.operators, key=lambda o: (o.ell, o.k))
    for op in ops:
        new_pieces = []
        for basis, packet in pieces:
            sub = _restrict(op.matrix, basis, F)
            subop = HeckeOperator(ell=op.ell, k=op.k, matrix=sub)
            for a, kb in eigenspaces_of_operator(subop, F):
                rows = [
                    [sum((kv[i] * basis[i][j] for i in range(len(basis))), F.zero) for j in range(d)]
                    for kv in kb
                ]
                pk = dict(packet)
                pk[(op.ell, op.k)] = a
                new_pieces.append((rows, pk))
        pieces = new_pieces
    out = []
    for basis, pk in pieces:
        ells = sorted({ell for (ell, k) in pk})
        # an ell is full when k = 1, 2, 3 are all present
        full = tuple(ell for ell in ells if all((ell, kk) in pk for kk in (1, 2, 3)))
        partial = tuple(ell for ell in ells if ell not in full)
        out.append(SimultaneousEigenspace(basis=basis, packet=Eigenpacket(values=pk, full=full, partial=partial)))
    out.sort(key=lambda E: tuple(v.encode() for _, v in sorted(E.packet.values.items())))
    return out


# ---------------------------------------------------------------------------
# Hecke polynomials


@dataclass(frozen=True)
class FullPoly:
    """Monic-at-zero polynomial over F (constant term one), degree fixed."""

    coeffs: tuple  # FieldElem, length degree+1

    @property
    def degree(self):
        return len(self.coeffs) - 1


@dataclass(frozen=True)
class PartialPoly:
    """Unit of F[X]/(X^2) with constant term one: only the linear
    coefficient is known."""

    linear: FieldElem


def hecke_polynomial(packet: Eigenpacket, ell: int, F: ExtField, eta: DirichletChar | None = None):
    """The degree-4 polynomial sum_k (-1)^k ell^(k(k-1)/2) a(ell,k) X^k when
    all k were computed at ell, else the partial polynomial 1 - a(ell,1) X.

    a(ell,0) is always 1 and a(ell,4) is the nebentype value when only the
    middle eigenvalues are stored."""
    if (ell, 1) not in packet.values:
        raise KeyError(f"no eigenvalue stored for T({ell},1)")
    if ell in packet.full:
        coeffs = [F.one]
        for k in range(1, 5):
            if (ell, k) in packet.values:
                a = packet.values[(ell, k)]
            elif k == 4:
                if eta is None:
                    raise KeyError(f"missing a({ell},4) and no nebentype supplied")
                a = F(eta.eval(ell))
            else:
                raise KeyError(f"missing a({ell},{k})")
            sign = F(-1) ** k
            coeffs.append(sign * F(ell) ** (k * (k - 1) // 2) * a)
        return FullPoly(coeffs=tuple(coeffs))
    return PartialPoly(linear=-packet.values[(ell, 1)])
