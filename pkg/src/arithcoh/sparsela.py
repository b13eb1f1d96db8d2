"""Sparse linear algebra over finite fields.

A SparseMatrix represents a linear map by rows: the map sends a coefficient
vector c (indexed by rows) to sum_i c_i row_i, so composing maps is matrix
multiplication in row convention and "kernel" always means the left kernel
{c : c M = 0}.  Rows are kept as sorted (cols, vals) numpy array pairs with
values reduced mod p (base-p encodings of extension-field elements when
r > 1; all the heavy instances in the pipeline have r = 1).

Elimination uses Markowitz-style pivoting (column of least count, then
shortest row, ties by lowest index), which keeps fill low on the very
sparse incidence matrices this package produces, and is deterministic.
Row operations during kernel/quotient computations are appended to an
on-disk log which can be replayed against a single vector, so expressing a
cycle in a homology basis does not need the transform held in memory.
"""

from __future__ import annotations

import os
import tempfile
from dataclasses import dataclass

import numpy as np

from . import kernels
from .ffield import ExtField


def _empty_row():
    return (np.empty(0, dtype=np.int32), np.empty(0, dtype=np.int64))


class SparseMatrix:
    def __init__(self, nrows: int, ncols: int, p: int, r: int = 1, modulus=None):
        self.nrows = nrows
        self.ncols = ncols
        self.p = p
        self.r = r
        if r > 1:
            self.field = ExtField(p, r, modulus)
            self.modulus = self.field.modulus
        else:
            self.field = None
            self.modulus = (0, 1)
        self.rows = [_empty_row() for _ in range(nrows)]

    # -- construction ------------------------------------------------------

    @classmethod
    def from_entries(cls, nrows, ncols, p, entries, r=1, modulus=None):
        """entries: iterable of (row, col, value) with integer values
        (encodings when r > 1); duplicates are summed."""
        m = cls(nrows, ncols, p, r, modulus)
        byrow: dict[int, dict[int, int]] = {}
        for i, j, v in entries:
            if not (0 <= i < nrows and 0 <= j < ncols):
                raise ValueError("entry out of range")
            d = byrow.setdefault(i, {})
            d[j] = m._add(d.get(j, 0), v)
        for i, d in byrow.items():
            items = sorted((j, v) for j, v in d.items() if v)
            if items:
                cols = np.array([j for j, _ in items], dtype=np.int32)
                vals = np.array([v for _, v in items], dtype=np.int64)
                m.rows[i] = (cols, vals)
        return m

    def _add(self, a, b):
        if self.r == 1:
            return (a + b) % self.p
        fa, fb = self.field.from_encoding(a), self.field.from_encoding(b)
        return (fa + fb).encode()

    def set_row(self, i, cols, vals):
        cols = np.asarray(cols, dtype=np.int32)
        vals = np.asarray(vals, dtype=np.int64)
        keep = vals != 0
        self.rows[i] = (cols[keep], vals[keep])

    def row_dict(self, i) -> dict:
        cols, vals = self.rows[i]
        return dict(zip(cols.tolist(), vals.tolist()))

    @property
    def nnz(self) -> int:
        return sum(len(c) for c, _ in self.rows)

    def copy(self) -> "SparseMatrix":
        m = SparseMatrix(self.nrows, self.ncols, self.p, self.r, self.modulus if self.r > 1 else None)
        m.rows = [(c.copy(), v.copy()) for c, v in self.rows]
        return m

    def __eq__(self, other):
        if not isinstance(other, SparseMatrix):
            return NotImplemented
        if (self.nrows, self.ncols, self.p, self.r) != (other.nrows, other.ncols, other.p, other.r):
            return False
        if self.r > 1 and self.modulus != other.modulus:
            return False
        return all(
            np.array_equal(c1, c2) and np.array_equal(v1, v2)
            for (c1, v1), (c2, v2) in zip(self.rows, other.rows)
        )

    def is_zero(self) -> bool:
        return all(len(c) == 0 for c, _ in self.rows)

    # -- arithmetic --------------------------------------------------------

    def matmul(self, other: "SparseMatrix") -> "SparseMatrix":
        """Composite map: first self, then other (self.ncols == other.nrows)."""
        if self.ncols != other.nrows or self.p != other.p or self.r != other.r:
            raise ValueError("shape or field mismatch")
        out = SparseMatrix(self.nrows, other.ncols, self.p, self.r, self.modulus if self.r > 1 else None)
        if self.r == 1:
            p = self.p
            for i, (cols, vals) in enumerate(self.rows):
                acc_c, acc_v = _empty_row()
                for j, v in zip(cols.tolist(), vals.tolist()):
                    bc, bv = other.rows[j]
                    acc_c, acc_v = kernels.row_axpy(acc_c, acc_v, bc, bv, v, p)
                out.rows[i] = (acc_c, acc_v)
        else:
            F = self.field
            for i, (cols, vals) in enumerate(self.rows):
                acc: dict[int, object] = {}
                for j, v in zip(cols.tolist(), vals.tolist()):
                    fv = F.from_encoding(int(v))
                    bc, bv = other.rows[j]
                    for jj, w in zip(bc.tolist(), bv.tolist()):
                        cur = acc.get(jj, F.zero)
                        acc[jj] = cur + fv * F.from_encoding(int(w))
                items = sorted((jj, e.encode()) for jj, e in acc.items() if e)
                if items:
                    out.rows[i] = (
                        np.array([a for a, _ in items], dtype=np.int32),
                        np.array([b for _, b in items], dtype=np.int64),
                    )
        return out

    # -- persistence -------------------------------------------------------

    def save(self, path):
        with open(path, "w") as fh:
            fh.write(f"SMAT {self.p} {self.r} {self.nrows} {self.ncols} {self.nnz}\n")
            if self.r > 1:
                fh.write("MOD " + " ".join(map(str, self.modulus)) + "\n")
            for i, (cols, vals) in enumerate(self.rows):
                for j, v in zip(cols.tolist(), vals.tolist()):
                    fh.write(f"{i} {j} {v}\n")

    @classmethod
    def load(cls, path) -> "SparseMatrix":
        with open(path) as fh:
            header = fh.readline().split()
            if not header or header[0] != "SMAT":
                raise ValueError("not a sparse matrix file")
            p, r, nrows, ncols, nnz = map(int, header[1:6])
            modulus = None
            pos = fh.tell()
            line = fh.readline()
            if line.startswith("MOD "):
                modulus = tuple(int(x) for x in line.split()[1:])
                if r == 1:
                    raise ValueError("unexpected modulus for a prime field")
            else:
                if r > 1:
                    raise ValueError("missing modulus line for extension field")
                fh.seek(pos)
            entries = []
            count = 0
            for line in fh:
                if not line.strip():
                    continue
                i, j, v = line.split()
                v = int(v)
                if not (0 < v < p**r):
                    raise ValueError("entry value out of range for the field")
                entries.append((int(i), int(j), v))
                count += 1
            if count != nnz:
                raise ValueError(f"expected {nnz} entries, found {count}")
        return cls.from_entries(nrows, ncols, p, entries, r=r, modulus=modulus)


# ---------------------------------------------------------------------------
# elimination


class RowOpsLog:
    """Append-only log of row operations, replayable against a vector.

    Ops: ('s', i, f): row_i *= f;  ('a', i, j, f): row_i += f * row_j.
    Replay treats the vector as indexed by row number."""

    def __init__(self, path=None):
        self._own = path is None
        if path is None:
            fd, path = tempfile.mkstemp(suffix=".rowops")
            os.close(fd)
        self.path = path
        self._fh = open(path, "w")

    def scale(self, i, f):
        self._fh.write(f"s {i} {f}\n")

    def axpy(self, i, j, f):
        self._fh.write(f"a {i} {j} {f}\n")

    def close(self):
        if self._fh:
            self._fh.close()
            self._fh = None

    def replay_dense(self, vec, p):
        """Apply the logged operations to a dense integer vector mod p."""
        self.close()
        v = [x % p for x in vec]
        with open(self.path) as fh:
            for line in fh:
                parts = line.split()
                if parts[0] == "s":
                    i, f = int(parts[1]), int(parts[2])
                    v[i] = v[i] * f % p
                else:
                    i, j, f = int(parts[1]), int(parts[2]), int(parts[3])
                    v[i] = (v[i] + f * v[j]) % p
        return v

    def __del__(self):
        try:
            self.close()
            if self._own and os.path.exists(self.path):
                os.unlink(self.path)
        except Exception:
            pass


def _markowitz_order(mat: SparseMatrix):
    """Destructive row echelon over GF(p), r = 1 fast path.

    Returns (rank, pivot list [(row, col)]).  mat.rows is echelonized in
    place (pivot rows normalized to 1)."""
    p = mat.p
    rows = mat.rows
    nrows = len(rows)
    # column counts
    live = [True] * nrows
    colcount: dict[int, int] = {}
    colrows: dict[int, set] = {}
    for i, (cols, _) in enumerate(rows):
        for j in cols.tolist():
            colcount[j] = colcount.get(j, 0) + 1
            colrows.setdefault(j, set()).add(i)
    pivots = []
    used_rows = set()
    while colcount:
        # pivot column: least count, lowest index
        col = min(colcount, key=lambda j: (colcount[j], j))
        cands = [i for i in colrows[col] if i not in used_rows]
        if not cands:
            del colcount[col]
            del colrows[col]
            continue
        piv = min(cands, key=lambda i: (len(rows[i][0]), i))
        pcols, pvals = rows[piv]
        idx = int(np.searchsorted(pcols, col))
        pval = int(pvals[idx])
        inv = pow(pval, p - 2, p)
        if inv != 1:
            pcols, pvals = kernels.row_scale(pcols, pvals, inv, p)
            rows[piv] = (pcols, pvals)
        used_rows.add(piv)
        pivots.append((piv, col))
        for i in list(colrows[col]):
            if i == piv or i in used_rows:
                continue
            cols_i, vals_i = rows[i]
            k = int(np.searchsorted(cols_i, col))
            f = (-int(vals_i[k])) % p
            # update the column index before the row changes
            for j in cols_i.tolist():
                colrows[j].discard(i)
                colcount[j] -= 1
            new_c, new_v = kernels.row_axpy(cols_i, vals_i, pcols, pvals, f, p)
            rows[i] = (new_c, new_v)
            for j in new_c.tolist():
                if j in colcount:
                    colrows[j].add(i)
                    colcount[j] += 1
                else:
                    colcount[j] = 1
                    colrows[j] = {i}
        # retire the pivot column and the pivot row's other columns
        for j in pcols.tolist():
            colrows[j].discard(piv)
            colcount[j] -= 1
        for j in [j for j, c in list(colcount.items()) if c <= 0]:
            del colcount[j]
            colrows.pop(j, None)
    return len(pivots), pivots


def _generic_row_reduce(mat: SparseMatrix):
    """Echelon over GF(p^r) via FieldElem dicts; small matrices only."""
    F = mat.field
    rows = [dict(zip(c.tolist(), (F.from_encoding(int(v)) for v in v_.tolist()))) for c, v_ in mat.rows]
    pivots = []
    used = set()
    for col in range(mat.ncols):
        piv = None
        for i in range(len(rows)):
            if i not in used and col in rows[i] and min(rows[i]) == col:
                piv = i
                break
        if piv is None:
            for i in range(len(rows)):
                if i not in used and col in rows[i]:
                    piv = i
                    break
        if piv is None:
            continue
        inv = rows[piv][col].inverse()
        rows[piv] = {j: v * inv for j, v in rows[piv].items()}
        for i in range(len(rows)):
            if i != piv and col in rows[i]:
                f = rows[i][col]
                new = dict(rows[i])
                for j, v in rows[piv].items():
                    w = new.get(j, F.zero) - f * v
                    if w:
                        new[j] = w
                    else:
                        new.pop(j, None)
                rows[i] = new
        used.add(piv)
        pivots.append((piv, col))
    for i, d in enumerate(rows):
        items = sorted((j, v.encode()) for j, v in d.items())
        mat.rows[i] = (
            np.array([j for j, _ in items], dtype=np.int32),
            np.array([v for _, v in items], dtype=np.int64),
        )
    return len(pivots), pivots


def rank(mat: SparseMatrix) -> int:
    if mat.r == 1:
        # static minimum-degree flavor: relabel columns by increasing count,
        # feed rows shortest-first; rank is invariant under both
        counts = np.zeros(mat.ncols, dtype=np.int64)
        for c, _ in mat.rows:
            counts[c] += 1
        order = np.argsort(counts, kind="stable")
        perm = np.empty(mat.ncols, dtype=np.int64)
        perm[order] = np.arange(mat.ncols)
        rows = []
        for c, v in mat.rows:
            if len(c) == 0:
                continue
            c2 = perm[c]
            o = np.argsort(c2, kind="stable")
            rows.append((c2[o].astype(np.int32), v[o].copy()))
        rows.sort(key=lambda cv: (len(cv[0]), int(cv[0][0])))
        r, _, _ = kernels.echelon_insert_buffered(rows, mat.p, mat.ncols)
        return r
    work = mat.copy()
    r, _ = _generic_row_reduce(work)
    return r


def _echelon_with_transform(mat: SparseMatrix, log: RowOpsLog | None = None):
    """Row-reduce a copy of mat while carrying the transform T (T mat_in =
    mat_out).  Returns (work, T, pivots).  r = 1 only."""
    assert mat.r == 1
    p = mat.p
    work = mat.copy()
    n = mat.nrows
    T = SparseMatrix(n, n, p)
    for i in range(n):
        T.rows[i] = (np.array([i], dtype=np.int32), np.array([1], dtype=np.int64))
    rows = work.rows
    trows = T.rows
    colcount: dict[int, int] = {}
    colrows: dict[int, set] = {}
    for i, (cols, _) in enumerate(rows):
        for j in cols.tolist():
            colcount[j] = colcount.get(j, 0) + 1
            colrows.setdefault(j, set()).add(i)
    pivots = []
    used_rows = set()
    while colcount:
        col = min(colcount, key=lambda j: (colcount[j], j))
        cands = [i for i in colrows[col] if i not in used_rows]
        if not cands:
            del colcount[col]
            del colrows[col]
            continue
        piv = min(cands, key=lambda i: (len(rows[i][0]), i))
        pcols, pvals = rows[piv]
        idx = int(np.searchsorted(pcols, col))
        inv = pow(int(pvals[idx]), p - 2, p)
        if inv != 1:
            rows[piv] = kernels.row_scale(pcols, pvals, inv, p)
            trows[piv] = kernels.row_scale(*trows[piv], inv, p)
            if log:
                log.scale(piv, inv)
            pcols, pvals = rows[piv]
        used_rows.add(piv)
        pivots.append((piv, col))
        for i in list(colrows[col]):
            if i == piv or i in used_rows:
                continue
            cols_i, vals_i = rows[i]
            k = int(np.searchsorted(cols_i, col))
            f = (-int(vals_i[k])) % p
            for j in cols_i.tolist():
                colrows[j].discard(i)
                colcount[j] -= 1
            rows[i] = kernels.row_axpy(cols_i, vals_i, pcols, pvals, f, p)
            trows[i] = kernels.row_axpy(*trows[i], *trows[piv], f, p)
            if log:
                log.axpy(i, piv, f)
            for j in rows[i][0].tolist():
                if j in colcount:
                    colrows[j].add(i)
                    colcount[j] += 1
                else:
                    colcount[j] = 1
                    colrows[j] = {i}
        for j in pcols.tolist():
            colrows[j].discard(piv)
            colcount[j] -= 1
        for j in [j for j, c in list(colcount.items()) if c <= 0]:
            del colcount[j]
            colrows.pop(j, None)
    return work, T, pivots


def kernel_basis(mat: SparseMatrix) -> list[dict]:
    """Basis of {c : c M = 0} as sparse dicts {row index: value}."""
    if mat.r == 1:
        work, T, pivots = _echelon_with_transform(mat)
        pivot_rows = {i for i, _ in pivots}
        out = []
        for i in range(mat.nrows):
            if i not in pivot_rows and len(work.rows[i][0]) == 0:
                out.append(T.row_dict(i))
        # deterministic order
        out.sort(key=lambda d: sorted(d.items()))
        return out
    # generic small path
    F = mat.field
    dense = [[F.zero] * mat.ncols for _ in range(mat.nrows)]
    for i, (c, v) in enumerate(mat.rows):
        for j, w in zip(c.tolist(), v.tolist()):
            dense[i][j] = F.from_encoding(int(w))
    aug = [row + [F.one if k == i else F.zero for k in range(mat.nrows)] for i, row in enumerate(dense)]
    # eliminate on the first ncols columns
    rank_ = 0
    for col in range(mat.ncols):
        piv = None
        for i in range(rank_, len(aug)):
            if aug[i][col]:
                piv = i
                break
        if piv is None:
            continue
        aug[rank_], aug[piv] = aug[piv], aug[rank_]
        inv = aug[rank_][col].inverse()
        aug[rank_] = [x * inv for x in aug[rank_]]
        for i in range(len(aug)):
            if i != rank_ and aug[i][col]:
                f = aug[i][col]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[rank_])]
        rank_ += 1
    out = []
    for i in range(rank_, mat.nrows):
        if all(not x for x in aug[i][: mat.ncols]):
            d = {k: aug[i][mat.ncols + k].encode() for k in range(mat.nrows) if aug[i][mat.ncols + k]}
            out.append(d)
    out.sort(key=lambda d: sorted(d.items()))
    return out


def image_basis(mat: SparseMatrix) -> list[dict]:
    """Echelon basis of the row space, as sparse dicts {col: value}."""
    work = mat.copy()
    if mat.r == 1:
        _, pivots = _markowitz_order(work)
    else:
        _, pivots = _generic_row_reduce(work)
    out = [work.row_dict(i) for i, _ in pivots]
    out.sort(key=lambda d: min(d))
    return out


@dataclass
class QuotientBasis:
    """Basis of ker(A)/im(B) with enough structure to express cycles.

    echelon: rows (sparse dicts col->val) in echelon form spanning ker A,
    the first `n_im` of which span im B; pivot_of maps echelon row index to
    its pivot column.  Basis classes are the echelon rows beyond n_im.
    """

    ambient: int
    p: int
    echelon: list
    pivot_of: list
    n_im: int
    A: SparseMatrix

    @property
    def dimension(self) -> int:
        return len(self.echelon) - self.n_im

    def basis_vectors(self) -> list[dict]:
        return [dict(r) for r in self.echelon[self.n_im :]]

    def express(self, y) -> list[int]:
        """Coefficients c with y = sum c_i x_i modulo im B; y may be a dense
        list or a dict.  Raises if y is not a cycle."""
        p = self.p
        if isinstance(y, dict):
            vec = dict(y)
        else:
            vec = {j: v % p for j, v in enumerate(y) if v % p}
        # cycle check: y . A = 0
        acc: dict[int, int] = {}
        for j, v in vec.items():
            cols, vals = self.A.rows[j]
            for jj, w in zip(cols.tolist(), vals.tolist()):
                acc[jj] = (acc.get(jj, 0) + v * w) % p
        if any(x % p for x in acc.values()):
            raise ValueError("vector is not a cycle")
        coeffs = [0] * self.dimension
        for idx, row in enumerate(self.echelon):
            piv = self.pivot_of[idx]
            c = vec.get(piv, 0) % p
            if not c:
                continue
            if idx >= self.n_im:
                coeffs[idx - self.n_im] = c
            for j, v in row.items():
                w = (vec.get(j, 0) - c * v) % p
                if w:
                    vec[j] = w
                else:
                    vec.pop(j, None)
        if vec:
            raise ValueError("vector does not reduce into ker A (inconsistent input)")
        return coeffs


def homology_basis(A: SparseMatrix, B: SparseMatrix) -> QuotientBasis:
    """Basis of ker(A)/im(B), where B then A compose to zero.

    A: n1 x n0 (the outgoing map), B: n2 x n1 (the incoming map)."""
    if A.r != 1 or B.r != 1:
        raise NotImplementedError("extension-field homology pairs not needed")
    if B.ncols != A.nrows:
        raise ValueError("shape mismatch")
    if not B.matmul(A).is_zero():
        raise ValueError("composite of the two maps is nonzero: broken complex")
    p = A.p
    # echelonize im B
    workB = B.copy()
    _, pivB = _markowitz_order(workB)
    im_rows = [workB.row_dict(i) for i, _ in pivB]
    im_rows.sort(key=lambda d: min(d))
    # kernel of A
    K = kernel_basis(A)
    # stack: im rows first, then kernel rows; echelonize incrementally
    echelon: list[dict] = []
    pivot_of: list[int] = []

    def reduce_add(row: dict) -> bool:
        vec = dict(row)
        for idx, r in enumerate(echelon):
            piv = pivot_of[idx]
            c = vec.get(piv, 0) % p
            if not c:
                continue
            for j, v in r.items():
                w = (vec.get(j, 0) - c * v) % p
                if w:
                    vec[j] = w
                else:
                    vec.pop(j, None)
        if not vec:
            return False
        piv = min(vec)
        inv = pow(vec[piv], p - 2, p)
        vec = {j: v * inv % p for j, v in vec.items()}
        echelon.append(vec)
        pivot_of.append(piv)
        return True

    n_im = 0
    for row in im_rows:
        if reduce_add(row):
            n_im += 1
    for row in K:
        reduce_add(row)
    return QuotientBasis(ambient=A.nrows, p=p, echelon=echelon, pivot_of=pivot_of, n_im=n_im, A=A)
