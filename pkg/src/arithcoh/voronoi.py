"""Polyhedral reduction theory for GL(n,Z), n <= 4.

Builds the cell classes of the reduction-theory fan in cone dimensions
n..n+2: faces of the top cones over the perfect quadratic forms, filtered to
those whose interior meets the positive-definite cone, reduced modulo the
integral linear group with stabilizers, orientation characters and oriented
incidence data.

Cells are stored by their vertex vectors, one per +-pair, each vector
primitive with positive leading entry, and the vertex tuple sorted in the
canonical (descending lexicographic) order shared with the symbol module.
The class representatives for n = 2, 3, 4 are deterministic; the n = 4
complex ships as a data file and can be regenerated and re-verified.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .sharbly import canonicalize, normalize_column


# ---------------------------------------------------------------------------
# quadratic forms


def gram_eval(q, x) -> int:
    return sum(q[i][j] * x[i] * x[j] for i in range(len(x)) for j in range(len(x)))


def is_positive_definite(q) -> bool:
    """Leading principal minors, exact integer arithmetic."""
    n = len(q)
    m = [[Fraction(q[i][j]) for j in range(n)] for i in range(n)]
    det = Fraction(1)
    for k in range(n):
        # Gaussian elimination tracking leading minors
        if m[k][k] <= 0:
            # pivot could still be positive after elimination; compute minor
            pass
        minor = _det([[m[i][j] for j in range(k + 1)] for i in range(k + 1)])
        if minor <= 0:
            return False
    return True


def _det(m):
    m = [row[:] for row in m]
    n = len(m)
    det = Fraction(1)
    for col in range(n):
        piv = None
        for i in range(col, n):
            if m[i][col]:
                piv = i
                break
        if piv is None:
            return Fraction(0)
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        det *= m[col][col]
        inv = 1 / m[col][col]
        for i in range(col + 1, n):
            if m[i][col]:
                c = m[i][col] * inv
                m[i] = [a - c * b for a, b in zip(m[i], m[col])]
    return det


def minimal_vectors(q) -> list[tuple]:
    """All nonzero integer x attaining min q(x), one per +-pair, canonical
    sign, sorted.  Exhaustive over an exact search box."""
    n = len(q)
    if not is_positive_definite(q):
        raise ValueError("form is not positive definite")
    arr = np.array(q, dtype=float)
    lam = float(np.linalg.eigvalsh(arr)[0])
    # first pass: find the minimum among short-ish candidates
    best = min(gram_eval(q, tuple(1 if j == i else 0 for j in range(n))) for i in range(n))
    bound = int(math.isqrt(int(best / lam * (1 + 1e-9)))) + 1
    vecs = {}
    minval = None
    for x in itertools.product(range(-bound, bound + 1), repeat=n):
        if all(v == 0 for v in x):
            continue
        val = gram_eval(q, x)
        if minval is None or val < minval:
            if minval is not None and val < minval:
                vecs.clear()
            minval = val
            vecs[normalize_column(x)] = True
        elif val == minval:
            vecs[normalize_column(x)] = True
    return sorted(vecs, reverse=True)


_PERFECT = {
    2: [((2, 1), (1, 2))],
    3: [((2, 1, 1), (1, 2, 1), (1, 1, 2))],
    4: [
        ((2, 1, 1, 1), (1, 2, 1, 1), (1, 1, 2, 1), (1, 1, 1, 2)),
        ((2, -1, 0, 0), (-1, 2, -1, -1), (0, -1, 2, 0), (0, -1, 0, 2)),
    ],
}


def perfect_forms(n: int) -> list[tuple]:
    """One Gram matrix per class of perfect forms, verified: the rank-one
    forms on the minimal vectors span the full space of symmetric matrices."""
    if n not in _PERFECT:
        raise ValueError("only 2 <= n <= 4 supported")
    out = []
    for q in _PERFECT[n]:
        mv = minimal_vectors(q)
        dim = n * (n + 1) // 2
        if sym_rank([rank_one(x) for x in mv]) != dim:
            raise AssertionError("stored form is not perfect")
        out.append(q)
    return out


def rank_one(x) -> tuple:
    """Upper triangle of x x^t, row-major, as the coordinate vector used for
    all span computations."""
    n = len(x)
    return tuple(x[i] * x[j] for i in range(n) for j in range(i, n))


def sym_rank(vectors) -> int:
    from .sharbly import int_rank

    return int_rank(list(vectors))


# ---------------------------------------------------------------------------
# face enumeration of a polyhedral cone given by extreme generators


def _nullspace_1d(rows):
    """Integer normal vector of a hyperplane spanned by rows (rank = dim-1),
    or None."""
    m = [[Fraction(x) for x in r] for r in rows]
    ncols = len(m[0])
    # row reduce
    pivots = []
    rank = 0
    for col in range(ncols):
        piv = None
        for i in range(rank, len(m)):
            if m[i][col]:
                piv = i
                break
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = 1 / m[rank][col]
        m[rank] = [x * inv for x in m[rank]]
        for i in range(len(m)):
            if i != rank and m[i][col]:
                c = m[i][col]
                m[i] = [a - c * b for a, b in zip(m[i], m[rank])]
        pivots.append(col)
        rank += 1
    if rank != ncols - 1:
        return None
    free = [c for c in range(ncols) if c not in pivots][0]
    v = [Fraction(0)] * ncols
    v[free] = Fraction(1)
    for r, col in enumerate(pivots):
        v[col] = -m[r][free]
    den = 1
    for x in v:
        den = den * x.denominator // math.gcd(den, x.denominator)
    w = [int(x * den) for x in v]
    g = 0
    for x in w:
        g = math.gcd(g, x)
    return tuple(x // g for x in w)


def cone_faces(generators, dims) -> list[frozenset]:
    """All faces of cone(generators) whose generator span has rank in dims,
    as frozensets of generator indices.

    Facets are found from supporting hyperplanes spanned by generator
    subsets; the face lattice is the closure of the facet set under
    intersection."""
    gens = [rank_one(x) if not isinstance(x[0], tuple) else x for x in generators]
    pts = [list(g) for g in gens]
    m = len(pts)
    ambient = sym_rank(pts)
    facets = set()
    for sub in itertools.combinations(range(m), ambient - 1):
        rows = [pts[i] for i in sub]
        nu = _nullspace_1d(rows)
        if nu is None:
            continue
        vals = [sum(a * b for a, b in zip(nu, pt)) for pt in pts]
        if all(v >= 0 for v in vals) or all(v <= 0 for v in vals):
            facets.add(frozenset(i for i, v in enumerate(vals) if v == 0))
    # close under intersection
    everything = frozenset(range(m))
    faces = {everything}
    frontier = set(facets)
    while frontier:
        faces |= frontier
        new = set()
        for f in frontier:
            for g in facets:
                h = f & g
                if h and h not in faces:
                    new.add(h)
        frontier = new - faces
    out = []
    lo, hi = min(dims), max(dims)
    for f in faces:
        r = sym_rank([pts[i] for i in f])
        if lo <= r <= hi:
            # the face's generators must actually be exactly those on it;
            # by construction f is an intersection of facet zero-sets, so yes
            out.append(f)
    return sorted(out, key=lambda f: (len(f), sorted(f)))


# ---------------------------------------------------------------------------
# cells and integral equivalence


def cell_interior(vertices) -> bool:
    """A cell meets the interior of the compactified cone iff the sum of the
    rank-one forms over its vertices is positive definite."""
    n = len(vertices[0])
    s = [[0] * n for _ in range(n)]
    for x in vertices:
        for i in range(n):
            for j in range(n):
                s[i][j] += x[i] * x[j]
    return is_positive_definite(s)


def barycenter_form(vertices):
    n = len(vertices[0])
    s = [[0] * n for _ in range(n)]
    for x in vertices:
        for i in range(n):
            for j in range(n):
                s[i][j] += x[i] * x[j]
    return s


def _adjugate(m):
    n = len(m)
    adj = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = [[Fraction(m[a][b]) for b in range(n) if b != j] for a in range(n) if a != i]
            adj[j][i] = int((-1) ** (i + j) * _det(minor))
    return adj


def _profile(vertices):
    """Integer pairing x_a^t adj(B) x_b, invariant under unimodular maps of
    the cell (B the barycenter form)."""
    B = barycenter_form(vertices)
    adj = _adjugate(B)
    m = len(vertices)
    n = len(vertices[0])
    out = [[0] * m for _ in range(m)]
    for a in range(m):
        ya = [sum(adj[i][j] * vertices[a][j] for j in range(n)) for i in range(n)]
        for b in range(m):
            out[a][b] = sum(ya[i] * vertices[b][i] for i in range(n))
    return out


def _solve_map(src_vecs, dst_vecs):
    """Integer matrix g with g src_i = dst_i, or None; src must have full
    column rank n with n vectors."""
    n = len(src_vecs)
    A = [[Fraction(src_vecs[j][i]) for j in range(n)] for i in range(n)]  # columns = src
    d = _det(A)
    if d == 0:
        return None
    # g = D * A^{-1} where D has columns dst
    Ainv = _mat_inv(A)
    g = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            g[i][j] = sum(Fraction(dst_vecs[k][i]) * Ainv[k][j] for k in range(n))
    out = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if g[i][j].denominator != 1:
                return None
            out[i][j] = int(g[i][j])
    return out


def _mat_inv(m):
    n = len(m)
    a = [[m[i][j] for j in range(n)] + [Fraction(1 if k == i else 0) for k in range(n)] for i, _ in enumerate(m) for k in [0]]
    # rebuild properly
    a = [[m[i][j] for j in range(n)] + [Fraction(1) if k == i else Fraction(0) for k in range(n)] for i in range(n)]
    for col in range(n):
        piv = None
        for r in range(col, n):
            if a[r][col]:
                piv = r
                break
        if piv is None:
            raise ZeroDivisionError
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                c = a[r][col]
                a[r] = [x - c * y for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]


def _int_det(g):
    return int(_det([[Fraction(x) for x in row] for row in g]))


def cell_maps(src, dst, det_one_only=False, first_only=True):
    """Integral maps g with g . {+-src} = {+-dst} as vertex-pair sets.

    Backtracking over pair assignments with sign choices, pruned by the
    adjugate-pairing profile.  Returns a list of integer matrices
    (all maps when first_only is False)."""
    m = len(src)
    if len(dst) != m:
        return []
    n = len(src[0])
    P1 = _profile(src)
    P2 = _profile(dst)
    # quick invariant: multisets of |pairing| rows must match
    inv1 = sorted(sorted(map(abs, row)) for row in P1)
    inv2 = sorted(sorted(map(abs, row)) for row in P2)
    if inv1 != inv2:
        return []
    results = []
    assign = [None] * m  # index into dst
    sign = [0] * m
    used = [False] * m

    # choose a frame of n linearly independent src vertices, earliest ones
    frame = []
    from .sharbly import int_rank

    for i in range(m):
        if int_rank([src[j] for j in frame + [i]]) == len(frame) + 1:
            frame.append(i)
        if len(frame) == n:
            break
    frame_set = set(frame)

    def extend(i):
        if i == m:
            return True
        return False

    def check_partial(i):
        for j in range(i):
            if P1[i][j] != sign[i] * sign[j] * P2[assign[i]][assign[j]]:
                return False
        if P1[i][i] != P2[assign[i]][assign[i]]:
            return False
        return True

    def verify_and_emit():
        g = _solve_map([src[i] for i in frame], [tuple(sign[i] * c for c in dst[assign[i]]) for i in frame])
        if g is None:
            return
        d = _int_det(g)
        if abs(d) != 1 or (det_one_only and d != 1):
            return
        # g must map every +-pair correctly per the assignment
        for i in range(m):
            img = tuple(sum(g[r][c] * src[i][c] for c in range(n)) for r in range(n))
            want = tuple(sign[i] * c for c in dst[assign[i]])
            if img != want:
                return
        results.append([row[:] for row in g])

    def bt(i):
        if first_only and results:
            return
        if i == m:
            verify_and_emit()
            return
        for j in range(m):
            if used[j]:
                continue
            for s in (1, -1):
                assign[i] = j
                sign[i] = s
                if check_partial(i):
                    used[j] = True
                    bt(i + 1)
                    used[j] = False
                if first_only and results:
                    return
        assign[i] = None

    bt(0)
    return results


def cell_equivalence(c1, c2, det_one_only=False):
    """A g in the integral group with g c1 = c2 as vertex-pair sets, or
    None.  det_one_only restricts to determinant +1."""
    maps = cell_maps(tuple(c1), tuple(c2), det_one_only=det_one_only, first_only=True)
    return maps[0] if maps else None


def stabilizer(cell, det_one_only=True):
    """All integral maps fixing the cell (as a set of +-vertex pairs), each
    with its orientation sign: the parity of the induced permutation of the
    vertex pairs.  By default restricted to determinant +1."""
    cell = tuple(cell)
    maps = cell_maps(cell, cell, det_one_only=det_one_only, first_only=False)
    out = []
    for g in maps:
        perm = []
        for v in cell:
            img = normalize_column(tuple(sum(g[r][c] * v[c] for c in range(len(v))) for r in range(len(v))))
            perm.append(cell.index(img))
        from .sharbly import perm_sign

        out.append((tuple(tuple(row) for row in g), perm_sign(perm)))
    out.sort()
    return out


# ---------------------------------------------------------------------------
# the truncated complex of cell classes


@dataclass
class CellClass:
    degree: int  # k = cone dim - n
    vertices: tuple  # canonical sorted vertex tuple
    stab: list  # [(matrix, orientation sign)]
    faces: list = field(default_factory=list)  # [(drop index, target class id, h, sign)] or None entries

    @property
    def dim(self):
        return len(self.vertices)

    def orientation_nontrivial(self) -> bool:
        return any(s == -1 for _, s in self.stab)


@dataclass
class TruncatedVoronoiComplex:
    n: int
    classes: list  # list of lists per degree k = 0, 1, 2 of CellClass

    def all_classes(self):
        for k, cl in enumerate(self.classes):
            for i, c in enumerate(cl):
                yield k, i, c


def _canonical_cell(vertices) -> tuple:
    return tuple(sorted((normalize_column(v) for v in vertices), reverse=True))


def enumerate_cell_classes(n: int, progress=None) -> TruncatedVoronoiComplex:
    """Classes of interior cells of cone dimension n..n+2 modulo the
    determinant-one integral group, with stabilizers, orientation data and
    oriented facet incidence."""
    cells_by_dim: dict[int, list[tuple]] = {d: [] for d in range(n, n + 3)}
    seen: dict[int, set] = {d: set() for d in range(n, n + 3)}
    for q in perfect_forms(n):
        mv = minimal_vectors(q)
        faces = cone_faces(mv, dims=(n, n + 2))
        for f in faces:
            verts = _canonical_cell([mv[i] for i in f])
            d = sym_rank([rank_one(v) for v in verts])
            if not (n <= d <= n + 2):
                continue
            if len(verts) != d:
                raise AssertionError("non-simplicial cell in the truncated range")
            if verts in seen[d]:
                continue
            seen[d].add(verts)
            if cell_interior(verts):
                cells_by_dim[d].append(verts)
    # reduce modulo SL classes
    classes: list[list[CellClass]] = [[], [], []]
    for k in range(3):
        d = n + k
        reps: list[tuple] = []
        for verts in sorted(cells_by_dim[d]):
            if any(cell_equivalence(verts, r, det_one_only=True) for r in reps):
                continue
            reps.append(verts)
        for verts in reps:
            stab = stabilizer(verts, det_one_only=True)
            classes[k].append(CellClass(degree=k, vertices=verts, stab=stab))
        if progress:
            progress(f"degree {k}: {len(classes[k])} classes")
    cx = TruncatedVoronoiComplex(n=n, classes=classes)
    _build_incidence(cx)
    return cx


def _build_incidence(cx: TruncatedVoronoiComplex):
    """For each class of degree k >= 1 and each vertex-drop facet, find the
    target class id, a determinant-one map h with h (target vertices) =
    facet vertices, and the symbol-level sign relating the ordered facet to
    h applied to the target's ordered vertices."""
    n = cx.n
    for k in (1, 2):
        for c in cx.classes[k]:
            c.faces = []
            for j in range(len(c.vertices)):
                face_verts = c.vertices[:j] + c.vertices[j + 1 :]
                if not cell_interior(face_verts):
                    c.faces.append(None)
                    continue
                target = None
                for ti, t in enumerate(cx.classes[k - 1]):
                    h = cell_equivalence(t.vertices, face_verts, det_one_only=True)
                    if h is not None:
                        target = (ti, h)
                        break
                if target is None:
                    raise AssertionError("interior facet not equivalent to any class")
                ti, h = target
                sign = _incidence_sign(face_verts, h, cx.classes[k - 1][ti].vertices)
                c.faces.append((j, ti, tuple(tuple(r) for r in h), sign))


def _incidence_sign(face_verts, h, target_verts) -> int:
    """Sign s with [face_verts] = s * h [target_verts] as canonical symbols."""
    a = canonicalize(list(face_verts))
    ht = [tuple(sum(h[r][c] * v[c] for c in range(len(v))) for r in range(len(v))) for v in target_verts]
    b = canonicalize(ht)
    if a is None or b is None or a.columns != b.columns:
        raise AssertionError("incidence bookkeeping mismatch")
    return a.sign * b.sign


# ---------------------------------------------------------------------------
# persistence


def export_cells(cx: TruncatedVoronoiComplex, path):
    lines = [f"VCELLS {cx.n}"]
    for k, i, c in cx.all_classes():
        lines.append(f"CLASS {k} {len(c.vertices)}")
        for v in c.vertices:
            lines.append("V " + " ".join(map(str, v)))
        lines.append(f"STAB {len(c.stab)}")
        for g, s in c.stab:
            flat = " ".join(str(x) for row in g for x in row)
            lines.append(f"S {s} {flat}")
        faces = c.faces or []
        lines.append(f"FACES {len(faces)}")
        for f in faces:
            if f is None:
                lines.append("F -")
            else:
                j, ti, h, sign = f
                flat = " ".join(str(x) for row in h for x in row)
                lines.append(f"F {j} {ti} {sign} {flat}")
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")


def ingest_cells(path) -> TruncatedVoronoiComplex:
    """Load a complex and re-verify its structural invariants: simplex
    property, interiority, stabilizer correctness, incidence consistency."""
    with open(path) as fh:
        tokens = [line.rstrip("\n") for line in fh if line.strip()]
    it = iter(tokens)
    head = next(it).split()
    if head[0] != "VCELLS":
        raise ValueError("not a cell data file")
    n = int(head[1])
    classes: list[list[CellClass]] = [[], [], []]
    line = next(it, None)
    while line is not None:
        parts = line.split()
        if parts[0] != "CLASS":
            raise ValueError(f"expected CLASS, got {line!r}")
        k, nv = int(parts[1]), int(parts[2])
        verts = []
        for _ in range(nv):
            row = next(it).split()
            if row[0] != "V":
                raise ValueError("malformed vertex line")
            verts.append(tuple(int(x) for x in row[1:]))
        verts = tuple(verts)
        stab_line = next(it).split()
        stab = []
        for _ in range(int(stab_line[1])):
            row = next(it).split()
            s = int(row[1])
            flat = [int(x) for x in row[2:]]
            g = tuple(tuple(flat[i * n : (i + 1) * n]) for i in range(n))
            stab.append((g, s))
        faces_line = next(it).split()
        faces = []
        for _ in range(int(faces_line[1])):
            row = next(it).split()
            if row[1] == "-":
                faces.append(None)
            else:
                j, ti, sign = int(row[1]), int(row[2]), int(row[3])
                flat = [int(x) for x in row[4:]]
                h = tuple(tuple(flat[i * n : (i + 1) * n]) for i in range(n))
                faces.append((j, ti, h, sign))
        classes[k].append(CellClass(degree=k, vertices=verts, stab=stab, faces=faces))
        line = next(it, None)
    cx = TruncatedVoronoiComplex(n=n, classes=classes)
    verify_complex(cx)
    return cx


_shipped_cache: dict = {}


def shipped_cell_complex(n: int) -> TruncatedVoronoiComplex:
    """The bundled, verified cell data for n = 2, 3, 4 (regenerable with
    enumerate_cell_classes)."""
    if n not in _shipped_cache:
        import importlib.resources as res

        path = res.files("arithcoh").joinpath(f"data/cells/vcells_n{n}.txt")
        with res.as_file(path) as p:
            _shipped_cache[n] = ingest_cells(p)
    return _shipped_cache[n]


def verify_complex(cx: TruncatedVoronoiComplex):
    """Structural invariants; raises on any violation."""
    n = cx.n
    for k, i, c in cx.all_classes():
        d = sym_rank([rank_one(v) for v in c.vertices])
        if d != n + k or len(c.vertices) != d:
            raise ValueError(f"class ({k},{i}): not a simplex of cone dimension {n + k}")
        if not cell_interior(c.vertices):
            raise ValueError(f"class ({k},{i}): fails the interiority test")
        if c.vertices != _canonical_cell(c.vertices):
            raise ValueError(f"class ({k},{i}): vertices not canonical")
        vset = set(c.vertices)
        for g, s in c.stab:
            if _int_det(list(map(list, g))) != 1:
                raise ValueError(f"class ({k},{i}): stabilizer element with det != 1")
            perm = []
            for v in c.vertices:
                img = normalize_column(tuple(sum(g[r][cc] * v[cc] for cc in range(n)) for r in range(n)))
                if img not in vset:
                    raise ValueError(f"class ({k},{i}): stabilizer does not fix the cell")
                perm.append(c.vertices.index(img))
            from .sharbly import perm_sign

            if perm_sign(perm) != s:
                raise ValueError(f"class ({k},{i}): wrong orientation value")
        if k >= 1:
            if c.faces is None or len(c.faces) != len(c.vertices):
                raise ValueError(f"class ({k},{i}): missing facet data")
            for f in c.faces:
                if f is None:
                    continue
                j, ti, h, sign = f
                face_verts = c.vertices[:j] + c.vertices[j + 1 :]
                t = cx.classes[k - 1][ti]
                img = _canonical_cell(
                    tuple(sum(h[r][cc] * v[cc] for cc in range(n)) for r in range(n)) for v in t.vertices
                )
                if img != _canonical_cell(face_verts):
                    raise ValueError(f"class ({k},{i}) facet {j}: wrong target map")
                if _incidence_sign(face_verts, [list(r) for r in h], t.vertices) != sign:
                    raise ValueError(f"class ({k},{i}) facet {j}: wrong incidence sign")
