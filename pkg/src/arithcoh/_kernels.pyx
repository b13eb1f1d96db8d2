# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled sparse-row kernels over GF(p).

Same contracts as _kernels_py; selected at import by the kernels module.
"""

import numpy as np

cimport numpy as cnp

IMPLEMENTATION = "cython"


cdef long long mod_inv(long long a, long long p):
    cdef long long result = 1, base = a % p, e = p - 2
    while e:
        if e & 1:
            result = result * base % p
        base = base * base % p
        e >>= 1
    return result


def row_axpy(cnp.ndarray[cnp.int32_t, ndim=1] cols_a,
             cnp.ndarray[cnp.int64_t, ndim=1] vals_a,
             cnp.ndarray[cnp.int32_t, ndim=1] cols_b,
             cnp.ndarray[cnp.int64_t, ndim=1] vals_b,
             long long factor, long long p):
    cdef long long f = factor % p
    if f < 0:
        f += p
    cdef Py_ssize_t na = cols_a.shape[0], nb = cols_b.shape[0]
    if nb == 0 or f == 0:
        return cols_a, vals_a
    cdef cnp.ndarray[cnp.int32_t, ndim=1] out_cols = np.empty(na + nb, dtype=np.int32)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] out_vals = np.empty(na + nb, dtype=np.int64)
    cdef Py_ssize_t i = 0, j = 0, k = 0
    cdef long long v
    while i < na and j < nb:
        if cols_a[i] < cols_b[j]:
            out_cols[k] = cols_a[i]
            out_vals[k] = vals_a[i]
            i += 1
            k += 1
        elif cols_a[i] > cols_b[j]:
            v = f * vals_b[j] % p
            if v:
                out_cols[k] = cols_b[j]
                out_vals[k] = v
                k += 1
            j += 1
        else:
            v = (vals_a[i] + f * vals_b[j]) % p
            if v:
                out_cols[k] = cols_a[i]
                out_vals[k] = v
                k += 1
            i += 1
            j += 1
    while i < na:
        out_cols[k] = cols_a[i]
        out_vals[k] = vals_a[i]
        i += 1
        k += 1
    while j < nb:
        v = f * vals_b[j] % p
        if v:
            out_cols[k] = cols_b[j]
            out_vals[k] = v
            k += 1
        j += 1
    return out_cols[:k].copy(), out_vals[:k].copy()


def row_scale(cnp.ndarray[cnp.int32_t, ndim=1] cols,
              cnp.ndarray[cnp.int64_t, ndim=1] vals,
              long long factor, long long p):
    cdef long long f = factor % p
    if f < 0:
        f += p
    cdef Py_ssize_t n = cols.shape[0]
    cdef cnp.ndarray[cnp.int32_t, ndim=1] out_cols = np.empty(n, dtype=np.int32)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] out_vals = np.empty(n, dtype=np.int64)
    cdef Py_ssize_t i, k = 0
    cdef long long v
    for i in range(n):
        v = vals[i] * f % p
        if v:
            out_cols[k] = cols[i]
            out_vals[k] = v
            k += 1
    return out_cols[:k].copy(), out_vals[:k].copy()


def echelon_insert_buffered(rows, long long p, Py_ssize_t ncols, bint keep_rows=False):
    """Forward echelon by row insertion using a dense scatter buffer for
    the active row, so the reduction cascade allocates nothing.  Pivot rows
    are frozen once created.  Same result contract as echelon_insert."""
    cdef cnp.ndarray[cnp.int64_t, ndim=1] buf = np.zeros(ncols, dtype=np.int64)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] pivot_of = np.full(ncols, -1, dtype=np.int64)
    cdef list ech_cols = []
    cdef list ech_vals = []
    cdef Py_ssize_t rank = 0
    cdef Py_ssize_t c, k, m, lead, nnz
    cdef long long f, inv, v
    cdef cnp.ndarray[cnp.int32_t, ndim=1] cols, pc, out_c
    cdef cnp.ndarray[cnp.int64_t, ndim=1] vals, pv, out_v
    cdef cnp.int32_t[:] pc_v
    cdef cnp.int64_t[:] pv_v
    for item in rows:
        cols, vals = item
        m = cols.shape[0]
        if m == 0:
            continue
        lead = cols[0]
        for k in range(m):
            buf[cols[k]] = vals[k] % p
        c = lead
        while c < ncols:
            v = buf[c]
            if v == 0:
                c += 1
                continue
            if pivot_of[c] < 0:
                break
            pc = ech_cols[pivot_of[c]]
            pv = ech_vals[pivot_of[c]]
            pc_v = pc
            pv_v = pv
            f = v % p
            for k in range(pc_v.shape[0]):
                buf[pc_v[k]] = (buf[pc_v[k]] - f * pv_v[k]) % p
            c += 1
        if c < ncols:
            # harvest the reduced row as a new pivot
            nnz = 0
            for k in range(c, ncols):
                if buf[k] != 0:
                    nnz += 1
            out_c = np.empty(nnz, dtype=np.int32)
            out_v = np.empty(nnz, dtype=np.int64)
            nnz = 0
            inv = mod_inv(buf[c] % p, p)
            for k in range(c, ncols):
                if buf[k] != 0:
                    out_c[nnz] = k
                    out_v[nnz] = buf[k] % p * inv % p if inv != 1 else buf[k] % p
                    if out_v[nnz] < 0:
                        out_v[nnz] += p
                    nnz += 1
                    buf[k] = 0
            pivot_of[c] = rank
            ech_cols.append(out_c)
            ech_vals.append(out_v)
            rank += 1
        # clear any residue below the harvest point
        for k in range(lead, ncols if c >= ncols else c):
            buf[k] = 0
    pivots = [int(x) for x in np.flatnonzero(pivot_of >= 0)]
    if keep_rows:
        order = sorted(range(rank), key=lambda i: int(ech_cols[i][0]))
        return rank, pivots, [(ech_cols[i], ech_vals[i]) for i in order]
    return rank, pivots, None


def echelon_insert(rows, long long p, Py_ssize_t ncols, bint keep_rows=False):
    """Forward echelon by row insertion: reduce each row's leading entry
    against the pivot table until it lands on a free column or vanishes.
    rows: list of (int32 cols, int64 vals), consumed in the given order.
    Returns (rank, pivot_cols, echelon_rows or None)."""
    cdef cnp.ndarray[cnp.int64_t, ndim=1] pivot_of = np.full(ncols, -1, dtype=np.int64)
    cdef list ech_cols = []
    cdef list ech_vals = []
    cdef Py_ssize_t rank = 0
    cdef long long f, inv
    cdef Py_ssize_t c0, pr
    cdef cnp.ndarray[cnp.int32_t, ndim=1] cols
    cdef cnp.ndarray[cnp.int64_t, ndim=1] vals
    for item in rows:
        cols, vals = item
        while cols.shape[0] > 0:
            c0 = cols[0]
            pr = pivot_of[c0]
            if pr < 0:
                inv = mod_inv(vals[0] % p, p)
                if inv != 1:
                    cols, vals = row_scale(cols, vals, inv, p)
                pivot_of[c0] = rank
                ech_cols.append(cols)
                ech_vals.append(vals)
                rank += 1
                break
            f = (p - vals[0] % p) % p
            cols, vals = row_axpy(cols, vals, ech_cols[pr], ech_vals[pr], f, p)
    pivots = [int(c) for c in np.flatnonzero(pivot_of >= 0)]
    if keep_rows:
        order = sorted(range(rank), key=lambda i: int(ech_cols[i][0]))
        return rank, pivots, [(ech_cols[i], ech_vals[i]) for i in order]
    return rank, pivots, None


def dense_row_reduce(cnp.ndarray[cnp.int64_t, ndim=2] m, long long p):
    cdef Py_ssize_t nrows = m.shape[0], ncols = m.shape[1]
    cdef Py_ssize_t rank = 0, col, r, piv, c
    cdef long long inv, factor
    pivots = []
    for col in range(ncols):
        piv = -1
        for r in range(rank, nrows):
            if m[r, col] % p:
                piv = r
                break
        if piv < 0:
            continue
        if piv != rank:
            for c in range(ncols):
                m[rank, c], m[piv, c] = m[piv, c], m[rank, c]
        inv = mod_inv(m[rank, col] % p, p)
        for c in range(ncols):
            m[rank, c] = m[rank, c] % p * inv % p
        for r in range(nrows):
            if r != rank and m[r, col] % p:
                factor = m[r, col] % p
                for c in range(ncols):
                    m[r, c] = (m[r, c] - factor * m[rank, c]) % p
                    if m[r, c] < 0:
                        m[r, c] += p
        pivots.append(col)
        rank += 1
    return rank, pivots
