"""Grid and prime-sweep drivers for f_{n,m,p} statistics."""

from __future__ import annotations

import math
from dataclasses import dataclass

import sympy

from ..algebra.field import field_make
from ..errors import ResultantIdenticallyZero
from ..rng import rng as make_rng
from .algo import ConjGcdResult, fnmp_roots, kronecker, verify_root

GRID_HEADER = "p,n,m,num_roots,num_ss,ratio_ss,sqrt_nm,gcd_nm,kronecker,flag"
SWEEP_HEADER = "p,n,m,num_roots,kronecker,class,verified"


def _fmt(x) -> str:
    return "" if x is None else f"{x:.10g}"


def default_pairs(n_max: int = 12, m_factor: int = 3):
    """2 <= n <= n_max, n < m <= m_factor * n."""
    return [(n, m) for n in range(2, n_max + 1) for m in range(n + 1, m_factor * n + 1)]


def extended_pairs():
    """2 <= n <= 45, n + 1 <= m < 8n."""
    return [(n, m) for n in range(2, 46) for m in range(n + 1, 8 * n)]


@dataclass(frozen=True)
class GridRecord:
    n: int
    m: int
    p: int
    result: ConjGcdResult | None
    flag: str = ""

    @property
    def num_roots(self):
        return None if self.result is None else len(self.result.roots)

    @property
    def num_ss(self):
        return None if self.result is None else self.result.num_ss

    @property
    def ratio_ss(self):
        if self.result is None or not self.result.roots or self.num_ss is None:
            return None
        return self.num_ss / len(self.result.roots)

    def csv_row(self) -> str:
        n, m, p = self.n, self.m, self.p
        vals = [p, n, m, self.num_roots, self.num_ss, _fmt(self.ratio_ss), _fmt(math.sqrt(n * m)), math.gcd(n, m),
                kronecker(n, m, p), self.flag]
        return ",".join("" if v is None else str(v) for v in vals)


def grid_experiment(p: int, pairs, store=None, classify: bool = True, progress=None) -> list[GridRecord]:
    ctx = field_make(p)
    if store is None:
        from ..modpoly.store import ModPolyStore

        store = ModPolyStore(p, ctx=ctx)
    out = []
    for n, m in sorted(pairs):
        try:
            res = fnmp_roots(n, m, p, store, ctx, classify=classify)
            out.append(GridRecord(n, m, p, res))
        except ResultantIdenticallyZero:
            out.append(GridRecord(n, m, p, None, "resultant_zero"))
        if progress:
            progress(out[-1])
    return out


@dataclass(frozen=True)
class SubsetStats:
    name: str
    points: int
    avg_ratio_ss: float | None
    avg_roots_over_sqrt: float | None


def aggregate(records) -> list[SubsetStats]:
    """Averages over subsets: all, coprime, not coprime, inert, split.

    Points are computed pairs; the supersingular ratio is averaged over pairs with at least one root.
    """
    done = [r for r in records if r.result is not None]
    subsets = {
        "all": done,
        "coprime": [r for r in done if math.gcd(r.n, r.m) == 1],
        "not coprime": [r for r in done if math.gcd(r.n, r.m) != 1],
        "inert": [r for r in done if r.result.kron == -1],
        "split": [r for r in done if r.result.kron == 1],
    }
    out = []
    for name, rs in subsets.items():
        ratios = [r.ratio_ss for r in rs if r.ratio_ss is not None]
        degs = [r.num_roots / math.sqrt(r.n * r.m) for r in rs]
        out.append(SubsetStats(name, len(rs), sum(ratios) / len(ratios) if ratios else None,
                               sum(degs) / len(degs) if degs else None))
    return out


# ---------------------------------------------------------------- prime sweeps


@dataclass(frozen=True)
class SweepRecord:
    p: int
    n: int
    m: int
    num_roots: int
    kron: int
    verified: bool

    @property
    def cls(self) -> str:
        return {-1: "inert", 1: "split"}.get(self.kron, "ramified")

    def csv_row(self) -> str:
        return f"{self.p},{self.n},{self.m},{self.num_roots},{self.kron},{self.cls},{int(self.verified)}"


def sample_primes(lo: int, hi: int, count: int, seed: int, residue: int = 3, modulus: int = 4) -> list[int]:
    """``count`` primes = residue mod modulus from [lo, hi], drawn without replacement, sorted."""
    pool = [q for q in sympy.primerange(lo, hi + 1) if q % modulus == residue]
    if count >= len(pool):
        return pool
    gen = make_rng(seed, f"conjgcd/primes/{lo}/{hi}")
    return sorted(int(q) for q in gen.choice(pool, size=count, replace=False))


def prime_sweep(n: int, m: int, primes, classify: bool = False, cache_dir=None, progress=None) -> list[SweepRecord]:
    from ..modpoly.store import ModPolyStore

    out = []
    for p in primes:
        ctx = field_make(p)
        store = ModPolyStore(p, ctx=ctx, cache_dir=cache_dir)
        res = fnmp_roots(n, m, p, store, ctx, classify=classify)
        rn, rm = store.get(n), store.get(m)
        ok = all(verify_root(j, rn, ctx) and verify_root(j, rm, ctx) for j in res.roots)
        out.append(SweepRecord(p, n, m, len(res.roots), res.kron, ok))
        if progress:
            progress(out[-1])
    return out
