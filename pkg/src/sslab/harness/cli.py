"""Command-line entry point: ``sslab <subcommand> [flags]``.

Exit codes: 0 success, 2 configuration error, 3 math error, 4 I/O error. Failures print one
line ``error <category> <ErrorName>: <message>`` on stderr.
"""

from __future__ import annotations

import argparse
import logging
import sys
import time

from ..errors import ConfigError, SslabError
from .config import SUBCOMMANDS, coerce, make_config, read_config_file
from .drivers import DRIVERS
from .output import write_csv, write_meta

EXIT = {"config": 2, "math": 3, "io": 4}

# flag -> (config key, help)
_COMMON = [
    ("--config", None, "key=value configuration file; flags override it"),
    ("--p", "p", "prime"),
    ("--p-range", "p_range", "prime range LO..HI"),
    ("--p-mod", "p_mod", "keep primes = RES mod MOD, given as MOD:RES"),
    ("--samples", "samples", "number of primes drawn from --p-range (0 = all)"),
    ("--seed", "seed", "64-bit seed, echoed in every output header"),
    ("--out", "out", "output directory"),
    ("--modpoly-db", "modpoly_db", "modular polynomial database file"),
    ("--cache", "cache", "cache directory for built modular polynomials"),
    ("--threads", "threads", "worker processes"),
]

_SPECIFIC = {
    "hasse-iter": [("--kind", "kind", "newton | plain_p | plain_p2 | norm"),
                   ("--newton-abort", "newton_abort", "nonreaching | skip")],
    "mappings": [("--n", "n", "size range LO..HI"), ("--m", "m", "fixed-point counts, comma separated"),
                 ("--k", "k", "step bounds, comma separated"), ("--trials", "trials", "Monte Carlo trials (0 = none)"),
                 ("--mc-n", "mc_n", "Monte Carlo domain size"), ("--mc-m", "mc_m", "Monte Carlo fixed points")],
    "conjgcd": [("--n", "n", "level range for n, LO..HI"), ("--m-factor", "m_factor", "m runs over n < m <= factor*n"),
                ("--sweep", "sweep", "N,M: sweep primes instead of a grid"),
                ("--classify", "classify", "classify roots (true/false)")],
    "torsion": [("--ells", "ells", "odd levels, comma separated"), ("--variant", "variant", "basic | prime_power | coset | hybrid"),
                ("--r", "r", "coset order dividing p^2 - 1"), ("--drop", "drop", "levels dropped by the hybrid variant"),
                ("--timing", "timing", "fill the runtime_ms column (true/false)")],
    "qwalk": [("--ell", "ell", "isogeny degree"), ("--T", "T", "walk time"), ("--draws", "draws", "limiting samples")],
    "cgl": [("--bits", "bits", "0/1 string steering the walk"), ("--length", "length", "random bit count when --bits is empty")],
    "modpoly-build": [("--levels", "levels", "level range LO..HI"), ("--method", "method", "qexp | velu")],
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ConfigError(message)


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="sslab", description="Supersingular-curve experiments")
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="subcommand", required=True)
    for name in SUBCOMMANDS:
        sp = sub.add_parser(name)
        sp.error = _Parser.error.__get__(sp)
        for flag, key, hlp in _COMMON + _SPECIFIC[name]:
            sp.add_argument(flag, dest=key or "config", default=None, help=hlp)
        sp.add_argument("--extended", action="store_const", const=True, default=None,
                        help="full grids that need a prime-level database")
    return ap


def parse_config(argv):
    ns = build_parser().parse_args(argv)
    flags = {k: coerce(k, v) for k, v in vars(ns).items() if k not in ("subcommand", "config", "verbose")}
    file_vals = read_config_file(ns.config) if ns.config else {}
    return make_config(ns.subcommand, file_vals, flags), ns.verbose


def run(cfg) -> list:
    t0 = time.perf_counter()
    tables = DRIVERS[cfg.subcommand](cfg)
    files = [write_csv(cfg.out, name, header, rows, cfg.seed) for name, header, rows in tables]
    files.append(write_meta(cfg.out, cfg, time.perf_counter() - t0, files))
    return files


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        cfg, verbose = parse_config(argv)
        logging.basicConfig(level=logging.INFO if verbose else logging.WARNING, format="%(message)s")
        for f in run(cfg):
            print(f)
        return 0
    except SslabError as e:
        print(f"error {e.category} {e.name}: {e}", file=sys.stderr)
        return EXIT[e.category]
    except OSError as e:
        print(f"error io {type(e).__name__}: {e}", file=sys.stderr)
        return 4
    except (TypeError, ValueError) as e:
        print(f"error config {type(e).__name__}: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
