"""Flat key = value run configuration.

Example::

    N = 24
    eta = 1,1,1          # exponent vector over the canonical basis (or a label)
    p = 12379
    r = 2                # or "auto": smallest field containing all ingested data
    primes = 5, 7, 11:1, 13:1, 17:1    # ell for full, ell:1 for first-operator-only
    cells = builtin
    newforms = builtin
    gl3 = builtin
    out = runs/N24

Unknown keys are rejected; `#` starts a comment.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

KNOWN_KEYS = {"N", "eta", "p", "r", "primes", "cells", "newforms", "gl3", "hecke_dir", "out"}


@dataclass
class RunConfig:
    N: int
    p: int
    eta_exponents: tuple
    r: int | str = "auto"
    full_primes: tuple = ()
    partial_primes: tuple = ()
    cells: str = "builtin"
    newforms: str = "builtin"
    gl3: str = "builtin"
    hecke_dir: str | None = None
    out: str = "runs/out"

    def validate(self):
        from .ffield import is_admissible_prime

        if not is_admissible_prime(self.p, self.N):
            raise ValueError(
                f"p = {self.p} is inadmissible for N = {self.N}: need p > 5, p prime to N, "
                "and the exponent of the unit group dividing p - 1"
            )
        for ell in self.full_primes + self.partial_primes:
            if self.N % ell == 0 or ell == self.p:
                raise ValueError(f"working prime {ell} divides p*N")
        return self


def parse_config(path) -> RunConfig:
    values = {}
    for raw in Path(path).read_text().splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"malformed config line: {raw!r}")
        key, val = (s.strip() for s in line.split("=", 1))
        if key not in KNOWN_KEYS:
            raise ValueError(f"unknown config key {key!r}")
        values[key] = val
    try:
        N = int(values["N"])
        p = int(values["p"])
    except KeyError as exc:
        raise ValueError(f"missing required config key {exc}") from exc
    eta_txt = values.get("eta", "")
    from .dirichlet import char_exponents, parse_char_label, unit_group_generators

    nbasis = len(unit_group_generators(N))
    if eta_txt in ("", "1", "trivial"):
        eta_exp = (0,) * nbasis
    elif "chi" in eta_txt:
        eta_exp = char_exponents(parse_char_label(eta_txt, N, p))
    else:
        eta_exp = tuple(int(x) for x in eta_txt.split(","))
        if len(eta_exp) != nbasis:
            raise ValueError(f"eta needs {nbasis} exponents for N = {N}")
    full, partial = [], []
    for tok in values.get("primes", "").replace(" ", "").split(","):
        if not tok:
            continue
        if ":" in tok:
            ell, kind = tok.split(":")
            if kind != "1":
                raise ValueError("partial primes are marked ell:1")
            partial.append(int(ell))
        else:
            full.append(int(tok))
    r_val = values.get("r", "auto")
    return RunConfig(
        N=N,
        p=p,
        eta_exponents=eta_exp,
        r=r_val if r_val == "auto" else int(r_val),
        full_primes=tuple(full),
        partial_primes=tuple(partial),
        cells=values.get("cells", "builtin"),
        newforms=values.get("newforms", "builtin"),
        gl3=values.get("gl3", "builtin"),
        hecke_dir=values.get("hecke_dir") or None,
        out=values.get("out", "runs/out"),
    ).validate()
