"""CSV and meta file emission."""

from __future__ import annotations

import platform
import time
from pathlib import Path

from ..errors import IOFailure
from ..modpoly.dbfile import write_atomic

SCHEMA_VERSION = 1


def csv_text(table: str, header: str, rows, seed: int) -> str:
    lines = [f"# schema=sslab/{SCHEMA_VERSION} table={table} seed={seed}", header, *rows]
    return "\n".join(lines) + "\n"


def write_csv(out_dir: Path, table: str, header: str, rows, seed: int) -> Path:
    path = Path(out_dir) / f"{table}.csv"
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        write_atomic(path, csv_text(table, header, list(rows), seed))
    except OSError as e:
        raise IOFailure(f"cannot write {path}: {e}") from e
    return path


def write_meta(out_dir: Path, config, wall_seconds: float, files) -> Path:
    import numpy
    import sympy

    from .. import __version__

    lines = ["# run metadata", f"timestamp={time.strftime('%Y-%m-%dT%H:%M:%S%z')}", f"wall_seconds={wall_seconds:.3f}",
             f"sslab={__version__}", f"python={platform.python_version()}", f"numpy={numpy.__version__}",
             f"sympy={sympy.__version__}", "# config", *config.echo(), "# outputs", *(Path(f).name for f in files)]
    path = Path(out_dir) / "meta.txt"
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        write_atomic(path, "\n".join(lines) + "\n")
    except OSError as e:
        raise IOFailure(f"cannot write {path}: {e}") from e
    return path
