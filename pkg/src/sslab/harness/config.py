"""Experiment configuration: dataclass defaults, then a key=value file, then command-line flags."""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass, field
from pathlib import Path

from ..errors import ConfigError, IOFailure

SUBCOMMANDS = ("hasse-iter", "mappings", "conjgcd", "torsion", "qwalk", "cgl", "modpoly-build")


def parse_range(s) -> tuple[int, int]:
    """'2..12' -> (2, 12); '7' -> (7, 7)."""
    if isinstance(s, (tuple, list)):
        return int(s[0]), int(s[1])
    s = str(s).strip()
    try:
        if ".." in s:
            lo, hi = s.split("..", 1)
            out = int(lo), int(hi)
        else:
            out = int(s), int(s)
    except ValueError:
        raise ConfigError(f"bad range {s!r}; expected LO..HI or an integer") from None
    if out[0] > out[1]:
        raise ConfigError(f"empty range {s!r}")
    return out


def parse_ints(s) -> tuple[int, ...]:
    if isinstance(s, (tuple, list)):
        return tuple(int(v) for v in s)
    s = str(s).strip()
    if not s:
        return ()
    try:
        return tuple(int(v) for v in s.replace(";", ",").split(","))
    except ValueError:
        raise ConfigError(f"bad integer list {s!r}") from None


@dataclass
class ExperimentConfig:
    subcommand: str
    seed: int = 0
    out: Path = Path("out")
    modpoly_db: Path | None = None
    cache: Path | None = None
    threads: int = 1
    extended: bool = False
    # prime selection
    p: int | None = None
    p_range: tuple | None = None
    p_mod: tuple | None = None  # (modulus, residue) filter on p_range
    samples: int = 0  # random primes drawn from p_range (0 = all)
    # hasse-iter
    kind: str = "newton"
    newton_abort: str = "nonreaching"
    # mappings
    n: tuple = (2, 12)
    m: tuple = (0, 1, 5)
    k: tuple = (1, 2, 5)
    trials: int = 0
    mc_n: int = 100_000
    mc_m: int = 10
    # conjgcd
    m_factor: int = 3
    sweep: tuple = ()  # (n, m) for a prime sweep
    classify: bool = True
    # torsion
    ells: tuple = (3, 5)
    variant: str = "basic"
    r: int | None = None
    drop: tuple = ()
    timing: bool = False
    # qwalk
    ell: int = 2
    T: float = 10.0
    draws: int = 0
    # cgl
    bits: str = ""
    length: int = 64
    # modpoly-build
    levels: tuple = (2, 13)
    method: str = "qexp"

    def __post_init__(self):
        if self.subcommand not in SUBCOMMANDS:
            raise ConfigError(f"unknown subcommand {self.subcommand!r}")
        if self.threads < 1:
            raise ConfigError("threads must be >= 1")
        self.out = Path(self.out)
        if self.modpoly_db is not None:
            self.modpoly_db = Path(self.modpoly_db)
        if self.cache is not None:
            self.cache = Path(self.cache)

    def echo(self) -> list[str]:
        return [f"{f.name}={_show(getattr(self, f.name))}" for f in dataclasses.fields(self)]


def _show(v) -> str:
    if isinstance(v, tuple):
        return ",".join(map(str, v))
    return "" if v is None else str(v)


_INT = {"seed", "threads", "p", "samples", "trials", "mc_n", "mc_m", "m_factor", "r", "ell", "draws", "length"}
_BOOL = {"extended", "classify", "timing"}
_FLOAT = {"T"}
_RANGE = {"p_range", "n", "levels"}
_LIST = {"m", "k", "sweep", "ells", "drop", "p_mod"}
_PATH = {"out", "modpoly_db", "cache"}


def coerce(key: str, value):
    """Typed value for a config key given as a string."""
    if value is None or not isinstance(value, str):
        return value
    v = value.strip()
    try:
        if key in _INT:
            return int(v)
        if key in _FLOAT:
            return float(v)
    except ValueError:
        raise ConfigError(f"{key}: expected a number, got {v!r}") from None
    if key in _BOOL:
        if v.lower() in ("1", "true", "yes", "on"):
            return True
        if v.lower() in ("0", "false", "no", "off"):
            return False
        raise ConfigError(f"{key}: expected a boolean, got {v!r}")
    if key in _RANGE:
        return parse_range(v)
    if key in _LIST:
        return parse_ints(v.replace(":", ","))
    if key in _PATH:
        return Path(v)
    return v


def read_config_file(path) -> dict:
    """key=value lines; '#' starts a comment; keys may use dashes or underscores."""
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise IOFailure(f"cannot read config {path}: {e}") from e
    names = {f.name for f in dataclasses.fields(ExperimentConfig)}
    out = {}
    for no, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{path}:{no}: expected key=value")
        key, val = (s.strip() for s in line.split("=", 1))
        key = key.replace("-", "_")
        if key not in names:
            raise ConfigError(f"{path}:{no}: unknown key {key!r}")
        out[key] = coerce(key, val)
    return out


def make_config(subcommand: str, file_values: dict | None = None, flag_values: dict | None = None) -> ExperimentConfig:
    vals = dict(file_values or {})
    vals.update({k: v for k, v in (flag_values or {}).items() if v is not None})
    vals.pop("subcommand", None)
    unknown = set(vals) - {f.name for f in dataclasses.fields(ExperimentConfig)}
    if unknown:
        raise ConfigError(f"unknown config keys: {', '.join(sorted(unknown))}")
    return ExperimentConfig(subcommand=subcommand, **vals)
