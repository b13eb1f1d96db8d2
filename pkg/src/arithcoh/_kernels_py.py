"""Pure-Python fallbacks for the compiled elimination kernels.

Rows are (cols, vals) pairs of numpy arrays: int32 column indices, strictly
increasing, and int64 values in 1..p-1.  The compiled module in
_kernels.pyx implements the same signatures.
"""

from __future__ import annotations

import numpy as np

IMPLEMENTATION = "python"


def row_axpy(cols_a, vals_a, cols_b, vals_b, factor, p):
    """a + factor * b over GF(p) for sparse rows; returns (cols, vals)."""
    if len(cols_b) == 0 or factor % p == 0:
        return cols_a, vals_a
    if len(cols_a) == 0:
        vals = (vals_b * (factor % p)) % p
        keep = vals != 0
        return cols_b[keep].copy(), vals[keep]
    allcols = np.union1d(cols_a, cols_b)
    out = np.zeros(len(allcols), dtype=np.int64)
    ia = np.searchsorted(allcols, cols_a)
    ib = np.searchsorted(allcols, cols_b)
    out[ia] = vals_a
    out[ib] = (out[ib] + factor * vals_b) % p
    keep = out % p != 0
    return allcols[keep].astype(np.int32), out[keep] % p


def row_scale(cols, vals, factor, p):
    vals = (vals * (factor % p)) % p
    keep = vals != 0
    return cols[keep], vals[keep]


def echelon_insert_buffered(rows, p, ncols, keep_rows=False):
    """Dense-scatter-buffer twin of the compiled kernel."""
    buf = np.zeros(ncols, dtype=np.int64)
    pivot_of = np.full(ncols, -1, dtype=np.int64)
    ech = []
    rank = 0
    for cols, vals in rows:
        if len(cols) == 0:
            continue
        lead = int(cols[0])
        buf[cols] = vals % p
        c = lead
        while c < ncols:
            v = int(buf[c])
            if v == 0:
                c += 1
                continue
            pr = int(pivot_of[c])
            if pr < 0:
                break
            pc, pv = ech[pr]
            buf[pc] = (buf[pc] - v * pv) % p
            c += 1
        if c < ncols:
            nz = c + np.flatnonzero(buf[c:])
            inv = pow(int(buf[c]), p - 2, p)
            out_c = nz.astype(np.int32)
            out_v = (buf[nz] * inv) % p
            buf[nz] = 0
            pivot_of[c] = rank
            ech.append((out_c, out_v))
            rank += 1
        else:
            buf[lead:] = 0
    pivots = [int(x) for x in np.flatnonzero(pivot_of >= 0)]
    if keep_rows:
        order = sorted(range(rank), key=lambda i: int(ech[i][0][0]))
        return rank, pivots, [ech[i] for i in order]
    return rank, pivots, None


def echelon_insert(rows, p, ncols, keep_rows=False):
    """Forward echelon by row insertion; see the compiled twin."""
    pivot_of = np.full(ncols, -1, dtype=np.int64)
    ech = []
    rank = 0
    for cols, vals in rows:
        while len(cols):
            c0 = int(cols[0])
            pr = int(pivot_of[c0])
            if pr < 0:
                inv = pow(int(vals[0]) % p, p - 2, p)
                if inv != 1:
                    cols, vals = row_scale(cols, vals, inv, p)
                pivot_of[c0] = rank
                ech.append((cols, vals))
                rank += 1
                break
            f = (p - int(vals[0]) % p) % p
            cols, vals = row_axpy(cols, vals, ech[pr][0], ech[pr][1], f, p)
    pivots = [int(c) for c in np.flatnonzero(pivot_of >= 0)]
    if keep_rows:
        order = sorted(range(rank), key=lambda i: int(ech[i][0][0]))
        return rank, pivots, [ech[i] for i in order]
    return rank, pivots, None


def dense_row_reduce(mat, p):
    """In-place row echelon form of a dense int64 matrix mod p; returns
    (rank, pivot_cols)."""
    m = mat
    nrows, ncols = m.shape
    rank = 0
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
            m[[rank, piv]] = m[[piv, rank]]
        inv = pow(int(m[rank, col]), p - 2, p)
        m[rank] = (m[rank] * inv) % p
        for r in range(nrows):
            if r != rank and m[r, col] % p:
                m[r] = (m[r] - m[r, col] * m[rank]) % p
        pivots.append(col)
        rank += 1
    return rank, pivots
