"""Write the shipped table of integer Phi_ell coefficients for small prime levels.

    python scripts/make_modpoly_db.py [--max-level 13] [--out src/sslab/data/modpoly_small.txt]
"""

import argparse
from pathlib import Path

import sympy

from sslab.modpoly import format_records, modular_poly_coeffs, write_atomic

DEFAULT_OUT = Path(__file__).resolve().parents[1] / "src" / "sslab" / "data" / "modpoly_small.txt"


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-level", type=int, default=13)
    ap.add_argument("--out", type=Path, default=DEFAULT_OUT)
    args = ap.parse_args(argv)
    tables = [(ell, modular_poly_coeffs(ell)) for ell in sympy.primerange(2, args.max_level + 1)]
    write_atomic(args.out, format_records(tables, 0, "database", ["source q-expansion of j over Z"]))
    print(f"wrote {args.out} ({args.out.stat().st_size} bytes)")


if __name__ == "__main__":
    main()
