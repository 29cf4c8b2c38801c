"""Modular-polynomial text files.

One coefficient per line, ``n i j c``: c is the coefficient of X^i Y^j in Phi_n, listed
for i >= j only (the other half follows by symmetry). ``#`` starts a comment. Header
comments of the form ``# key value`` carry metadata:

    # modulus 0            0 means integer coefficients, otherwise reduced mod this prime
    # provenance qexp
    # checksum <sha256 of the data lines>

Files in the bracketed one-level-per-file convention (``[i,j] c``) are accepted too; the
level comes from a ``# level n`` line or, failing that, from the single requested level.
"""

from __future__ import annotations

import hashlib
import os
import re
import tempfile
from pathlib import Path

from ..algebra.bipoly import BiPoly
from ..errors import (
    ChecksumMismatch,
    DegreeMismatch,
    IOFailure,
    MissingLevel,
    ModulusMismatch,
    ParseError,
)
from .records import ModPolyRecord, psi

_INT = r"[+-]?\d+"
_PLAIN = re.compile(rf"^({_INT})\s+({_INT})\s+({_INT})\s+({_INT})$")
_BRACKET = re.compile(rf"^\[\s*({_INT})\s*,\s*({_INT})\s*\]\s+({_INT})$")


def _checksum(lines) -> str:
    h = hashlib.sha256()
    for line in lines:
        h.update(line.encode())
        h.update(b"\n")
    return h.hexdigest()


def _read_lines(path):
    try:
        with open(path, encoding="ascii") as fh:
            return fh.read().splitlines()
    except (OSError, UnicodeDecodeError) as exc:
        raise IOFailure(f"cannot read {path}: {exc}") from exc


def parse_db(path, levels=None, p: int | None = None) -> dict[int, ModPolyRecord]:
    """Read the requested levels (all if None), reduced mod p, symmetric-completed."""
    lines = _read_lines(path)
    meta: dict[str, str] = {}
    terms: dict[int, dict] = {}
    data_lines = []
    level = None
    wanted = None if levels is None else set(levels)
    single = next(iter(wanted)) if wanted and len(wanted) == 1 else None
    for no, raw in enumerate(lines, 1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            parts = line[1:].split()
            if len(parts) == 2 and parts[0] in ("modulus", "provenance", "checksum", "level"):
                meta[parts[0]] = parts[1]
                if parts[0] == "level":
                    level = _int(parts[1], no)
            continue
        data_lines.append(line)
        m = _PLAIN.match(line)
        if m:
            n, i, j, c = (int(g) for g in m.groups())
        else:
            b = _BRACKET.match(line)
            if not b:
                raise ParseError(no, f"unrecognised line {line!r}")
            n = level if level is not None else single
            if n is None:
                raise ParseError(no, "bracketed entry without a level")
            i, j, c = (int(g) for g in b.groups())
        if n < 1 or i < 0 or j < 0:
            raise ParseError(no, "negative level or exponent")
        if i < j:
            raise ParseError(no, "entries must have i >= j")
        if wanted is not None and n not in wanted:
            continue
        terms.setdefault(n, {})[(i, j)] = c
    if "checksum" in meta and meta["checksum"] != _checksum(data_lines):
        raise ChecksumMismatch(f"{path}: checksum does not match contents")
    modulus = int(meta.get("modulus", "0"))
    if p is None:
        if modulus == 0:
            raise ModulusMismatch("integer database needs a target prime")
        p = modulus
    if modulus not in (0, p):
        raise ModulusMismatch(f"{path} is reduced mod {modulus}, requested {p}")
    if wanted is not None:
        missing = sorted(wanted - set(terms))
        if missing:
            raise MissingLevel(f"level {missing[0]} not present in {path}")
    prov = meta.get("provenance", "database")
    out = {}
    for n, t in sorted(terms.items()):
        full = {}
        for (i, j), c in t.items():
            full[(i, j)] = c % p
            full[(j, i)] = c % p
        poly = BiPoly.from_terms(p, full)
        if poly.deg_x != psi(n):
            raise DegreeMismatch(f"level {n}: degree {poly.deg_x}, expected psi({n}) = {psi(n)}")
        out[n] = ModPolyRecord(n, p, poly, prov)
    return out


def format_records(records, modulus: int, provenance: str, extra: list[str] = ()) -> str:
    """Render coefficient tables {n: {(i, j): c}} or ModPolyRecords in the file format."""
    data = []
    for rec in records:
        if isinstance(rec, ModPolyRecord):
            n, items = rec.level, ((i, j, c) for i, j, c in rec.poly.terms())
        else:
            n, table = rec
            items = ((i, j, c) for (i, j), c in table.items())
        for i, j, c in sorted(items):
            if i >= j and c:
                data.append(f"{n} {i} {j} {c}")
    head = ["# sslab modular polynomial table", f"# modulus {modulus}", f"# provenance {provenance}"]
    head += [f"# {x}" for x in extra]
    head.append(f"# checksum {_checksum(data)}")
    return "\n".join(head + data) + "\n"


def write_atomic(path, text: str) -> None:
    path = Path(path)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name, suffix=".tmp")
        with os.fdopen(fd, "w", encoding="ascii") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except OSError as exc:
        raise IOFailure(f"cannot write {path}: {exc}") from exc


def cache_path(cache_dir, n: int, p: int) -> Path:
    return Path(cache_dir) / f"phi_{n}_p{p}.txt"


def cache_store(cache_dir, rec: ModPolyRecord) -> Path:
    path = cache_path(cache_dir, rec.level, rec.p)
    write_atomic(path, format_records([rec], rec.p, rec.provenance, [f"level {rec.level}"]))
    return path


def cache_load(cache_dir, n: int, p: int) -> ModPolyRecord | None:
    path = cache_path(cache_dir, n, p)
    if not path.exists():
        return None
    return parse_db(path, [n], p)[n]


def _int(s, no):
    try:
        return int(s)
    except ValueError:
        raise ParseError(no, f"bad integer {s!r}") from None


def shipped_db() -> Path:
    """Integer Phi_ell for the small prime levels, installed with the package."""
    return Path(__file__).resolve().parents[1] / "data" / "modpoly_small.txt"
