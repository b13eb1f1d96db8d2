"""Batch driver: prime selection, complex construction, homology, operator
ingestion, eigenspace refinement, constituent matching, reports.

Stage outputs are cached under the configured output directory and reused
on rerun, so an interrupted run resumes where it stopped.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import __version__
from .config import RunConfig, parse_config
from .constituents import ConstituentDatabase, load_gl3_dir, load_newform_dir, shipped_gl3, shipped_newforms
from .dirichlet import char_from_exponents, char_label, character_basis, trivial_char
from .ffield import ExtField, find_admissible_prime, is_admissible_prime, min_extension_degree
from .finder import (
    Assignment,
    assignment_string,
    find_assignments,
    galois_multiplicity,
    parse_assignment,
    report_table,
    synthesize_packet,
    system_of_eigenspace,
)
from .hecke import HeckeCollection, HeckeOperator, simultaneous_eigenspaces
from .sparsela import SparseMatrix, rank
from .voronoi import enumerate_cell_classes, ingest_cells, shipped_cell_complex


def _load_cells(cfg: RunConfig, n=4):
    if cfg.cells == "builtin":
        return shipped_cell_complex(n)
    if cfg.cells == "enumerate":
        return enumerate_cell_classes(n)
    return ingest_cells(cfg.cells)


def _load_records(cfg: RunConfig):
    nf = shipped_newforms() if cfg.newforms == "builtin" else load_newform_dir(cfg.newforms)
    g3 = shipped_gl3() if cfg.gl3 == "builtin" else load_gl3_dir(cfg.gl3)
    return nf, g3


def _field(cfg: RunConfig):
    nf, _ = _load_records(cfg)
    if cfg.r == "auto":
        polys = [r.minpoly for r in nf if cfg.N % r.level == 0]
        r = min_extension_degree(polys, cfg.p) if polys else 1
    else:
        r = cfg.r
    return ExtField(cfg.p, r)


def _eta(cfg: RunConfig):
    return char_from_exponents(cfg.N, cfg.p, list(cfg.eta_exponents))


def _eta_label(cfg: RunConfig) -> str:
    return char_label(cfg.N, cfg.p, _eta(cfg))


def cmd_admissible_prime(args):
    if args.p is not None:
        ok = is_admissible_prime(args.p, args.N)
        print(f"{args.p} {'admissible' if ok else 'inadmissible'} for N={args.N}")
        return 0 if ok else 1
    p = find_admissible_prime(args.N, args.min)
    print(p)
    return 0


def cmd_characters(args):
    basis = character_basis(args.N, args.p)
    if not basis:
        print(f"(Z/{args.N})^x is trivial")
        return 0
    from .dirichlet import unit_group_generators

    gens = unit_group_generators(args.N)
    for i, (chi, (g, order)) in enumerate(zip(basis, gens)):
        name = f"chi_{args.N}" if len(basis) == 1 else f"chi_{{{args.N},{i}}}"
        parity = "even" if chi.parity == 1 else "odd"
        val = chi.eval(g)
        shown = val if val <= args.p // 2 else val - args.p
        print(f"{name}  order {chi.order}  parity {parity}  definition {g} -> {shown}")
    return 0


def _complex_paths(cfg: RunConfig):
    out = Path(cfg.out)
    tag = f"N{cfg.N}_eta{'_'.join(map(str, cfg.eta_exponents)) or '1'}_p{cfg.p}"
    return out / f"{tag}_d2.smat", out / f"{tag}_d1.smat"


def _build_or_load_complex(cfg: RunConfig, quiet=False):
    from .orbitcomplex import build_complex

    p2, p1 = _complex_paths(cfg)
    if p2.exists() and p1.exists():
        d2 = SparseMatrix.load(p2)
        d1 = SparseMatrix.load(p1)
        if not quiet:
            print(f"loaded cached differentials from {p2.parent}")
        return d2, d1
    cx = _load_cells(cfg)
    res = build_complex(cfg.N, _eta(cfg), cx)
    p2.parent.mkdir(parents=True, exist_ok=True)
    res.d2.save(p2)
    res.d1.save(p1)
    return res.d2, res.d1


def cmd_build_complex(args):
    cfg = parse_config(args.config)
    d2, d1 = _build_or_load_complex(cfg)
    print(f"d2: {d2.nrows} x {d2.ncols} ({d2.nnz} nonzero)")
    print(f"d1: {d1.nrows} x {d1.ncols} ({d1.nnz} nonzero)")
    print(f"d2*d1 zero: {d2.matmul(d1).is_zero()}")
    return 0


def cmd_homology(args):
    cfg = parse_config(args.config)
    d2, d1 = _build_or_load_complex(cfg)
    dim = d1.nrows - rank(d1) - rank(d2)
    print(f"dim H = {dim}")
    (Path(cfg.out) / "homology.txt").write_text(f"{dim}\n")
    return 0


def cmd_hecke_validate(args):
    cfg = parse_config(args.config)
    if not cfg.hecke_dir:
        print("no hecke_dir configured", file=sys.stderr)
        return 2
    F = _field(cfg)
    files = sorted(Path(cfg.hecke_dir).glob("*.hecke"))
    if not files:
        print("no operator files found", file=sys.stderr)
        return 2
    _, eta = None, _eta(cfg)
    first = HeckeCollection.load_matrix(files[0], F)
    dim = first[2].dim
    coll = HeckeCollection(cfg.N, eta, F, dim)
    for f in files:
        _, _, op = HeckeCollection.load_matrix(f, F)
        coll.add(op)
        print(f"T({op.ell},{op.k}) validated")
    print(f"{len(coll.operators)} operators, pairwise commuting")
    return 0


def cmd_eigenspaces(args):
    cfg = parse_config(args.config)
    F = _field(cfg)
    eta = _eta(cfg)
    files = sorted(Path(cfg.hecke_dir).glob("*.hecke")) if cfg.hecke_dir else []
    if not files:
        print("no operator files; nothing to refine", file=sys.stderr)
        return 2
    first = HeckeCollection.load_matrix(files[0], F)
    coll = HeckeCollection(cfg.N, eta, F, first[2].dim)
    for f in files:
        coll.add(HeckeCollection.load_matrix(f, F)[2])
    spaces = simultaneous_eigenspaces(coll)
    outdir = Path(cfg.out) / "packets"
    outdir.mkdir(parents=True, exist_ok=True)
    for i, E in enumerate(spaces):
        lines = [f"PACKET {cfg.N} {_eta_label(cfg)} {F.p} {F.r} {E.hecke_multiplicity}"]
        for (ell, k), v in sorted(E.packet.values.items()):
            lines.append(f"A {ell} {k} {v.encode()}")
        (outdir / f"eigenspace_{i}.packet").write_text("\n".join(lines) + "\n")
        print(f"eigenspace {i}: dim {E.hecke_multiplicity}, primes {E.packet.primes()}")
    return 0


def cmd_synthesize(args):
    cfg = parse_config(args.config)
    F = _field(cfg)
    nf, g3 = _load_records(cfg)
    db = ConstituentDatabase(cfg.N, F, nf, g3)
    a = parse_assignment(args.sum, db)
    full = list(cfg.full_primes)
    packet = synthesize_packet(db, a.parts, full, list(cfg.partial_primes))
    outdir = Path(cfg.out) / "packets"
    outdir.mkdir(parents=True, exist_ok=True)
    name = args.name or "synthesized"
    lines = [f"PACKET {cfg.N} {_eta_label(cfg)} {F.p} {F.r} 1"]
    for (ell, k), v in sorted(packet.values.items()):
        lines.append(f"A {ell} {k} {v.encode()}")
    (outdir / f"{name}.packet").write_text("\n".join(lines) + "\n")
    print(f"wrote {outdir / (name + '.packet')}")
    return 0


def _load_packets(cfg: RunConfig, F):
    from .hecke import Eigenpacket

    outdir = Path(cfg.out) / "packets"
    packets = []
    for f in sorted(outdir.glob("*.packet")):
        mult = 1
        values = {}
        for line in f.read_text().splitlines():
            parts = line.split()
            if parts[0] == "PACKET":
                mult = int(parts[5])
            elif parts[0] == "A":
                values[(int(parts[1]), int(parts[2]))] = F.from_encoding(int(parts[3]))
        ells = sorted({ell for ell, _ in values})
        full = tuple(e for e in ells if all((e, k) in values for k in (1, 2, 3, 4)))
        partial = tuple(e for e in ells if e not in full)
        packets.append((f.stem, mult, Eigenpacket(values=values, full=full, partial=partial)))
    return packets


def cmd_find(args):
    cfg = parse_config(args.config)
    F = _field(cfg)
    eta = _eta(cfg)
    nf, g3 = _load_records(cfg)
    db = ConstituentDatabase(cfg.N, F, nf, g3)
    packets = _load_packets(cfg, F)
    if not packets:
        print("no packets found; run synthesize or eigenspaces first", file=sys.stderr)
        return 2
    results = []
    for name, mult, pk in packets:
        system = system_of_eigenspace(type("E", (), {"packet": pk})(), F, eta)
        hits = find_assignments(system, db, eta=eta)
        results.append((name, mult, hits))
        flag = "unique" if (hits and hits[0].unique) else ("coincident" if hits and hits[0].coincident else f"{len(hits)} matches")
        print(f"{name}: {flag}")
        for h in hits:
            print(f"  {assignment_string(h, cfg.N)}  [ht={'ok' if h.ht_ok else 'NO'} det={'ok' if h.det_ok else 'NO'} {h.pattern}]")
    # stash rows for report
    rows_path = Path(cfg.out) / "rows.txt"
    assigned = [(name, hits[0]) for name, mult, hits in results if hits]
    mults = galois_multiplicity(assigned)
    lines = []
    for name, mult, hits in results:
        if not hits:
            lines.append(f"# {name}: no assignment found")
            continue
        g, is_rep = mults[name]
        if is_rep:
            lines.append(f"{g} | {mult} | {assignment_string(hits[0], cfg.N)}")
    rows_path.parent.mkdir(parents=True, exist_ok=True)
    rows_path.write_text("\n".join(lines) + "\n")
    return 0


def cmd_report(args):
    cfg = parse_config(args.config)
    F = _field(cfg)
    rows_path = Path(cfg.out) / "rows.txt"
    rows = []
    if rows_path.exists():
        for line in rows_path.read_text().splitlines():
            if line.startswith("#") or not line.strip():
                continue
            g, h, s = line.split(" | ")
            rows.append((int(g), int(h), s))
    computed = [f"T_{ell}" for ell in cfg.full_primes] + [f"T_{ell},1" for ell in cfg.partial_primes]
    text = report_table(cfg.N, _eta_label(cfg), F, computed, rows)
    out = Path(cfg.out) / "report.txt"
    out.write_text(text)
    print(text, end="")
    return 0


def main(argv=None):
    ap = argparse.ArgumentParser(prog="arithcoh", description=__doc__)
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="cmd", required=True)

    sp = sub.add_parser("admissible-prime", help="find or check a working prime for a level")
    sp.add_argument("N", type=int)
    sp.add_argument("--min", type=int, default=1000)
    sp.add_argument("--check", dest="p", type=int, default=None)
    sp.set_defaults(func=cmd_admissible_prime)

    sp = sub.add_parser("characters", help="print the canonical character basis")
    sp.add_argument("N", type=int)
    sp.add_argument("p", type=int)
    sp.set_defaults(func=cmd_characters)

    for name, fn, help_ in [
        ("build-complex", cmd_build_complex, "build and cache the twisted differentials"),
        ("homology", cmd_homology, "dimension of the middle homology"),
        ("hecke-validate", cmd_hecke_validate, "validate ingested operator matrices"),
        ("eigenspaces", cmd_eigenspaces, "refine simultaneous eigenspaces from ingested operators"),
        ("find", cmd_find, "match packets against the constituent database"),
        ("report", cmd_report, "emit the results table"),
    ]:
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("--config", required=True)
        sp.set_defaults(func=fn)

    sp = sub.add_parser("synthesize", help="build an eigenpacket from a named constituent sum")
    sp.add_argument("--config", required=True)
    sp.add_argument("--sum", required=True, help='e.g. "eps^0 + eps^1 + eps^2 sigma_{11,2}"')
    sp.add_argument("--name", default=None)
    sp.set_defaults(func=cmd_synthesize)

    args = ap.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
