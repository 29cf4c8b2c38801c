"""Random mappings with m fixed points: exact counts from EGFs, a brute-force oracle, Monte Carlo."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from ..rng import rng as make_rng
from .series import SeriesQ

BRUTE_MAX_N = 8


@lru_cache(maxsize=16)
def tree_series(N: int) -> SeriesQ:
    """T(z) = z exp(T(z)) by Newton iteration, doubling the precision each round."""
    if N < 1:
        raise ValueError("N >= 1")
    T = SeriesQ.z(1)
    n = 1
    while n < N:
        n = min(2 * n, N)
        T = T.truncate(n)
        z = SeriesQ.z(n)
        ze = z * T.exp()
        T = T - (T - ze) / (1 - ze)
    return T.truncate(N)


def cfpf_series(N: int) -> SeriesQ:
    """Fixed-point-free components: -log(1 - T) - T."""
    T = tree_series(N)
    return -((1 - T).log()) - T


def fm_series(m: int, N: int) -> SeriesQ:
    """EGF of functions with exactly m fixed points: T^m / m! * exp(C_fpf)."""
    T = tree_series(N)
    if m == 0:
        return cfpf_series(N).exp()
    # exp(C_fpf) = e^{-T} / (1 - T) = z / ((1 - T) T)
    rest = (-T).exp() / (1 - T)
    return T ** m * rest * Fraction(1, math.factorial(m))


def fm_counts(m: int, N: int) -> list[int]:
    """[F_{m,1}, ..., F_{m,N}]"""
    if m < 0:
        raise ValueError("m >= 0")
    return fm_series(m, N).egf_counts()[1:]


def reach_series(m: int, k: int, N: int) -> SeriesQ:
    """d/du F_{m,k}(z, u) at u = 1: m T^{m-1} (T + ... + T^{k+1}) z / ((1 - T) T), over m!."""
    if m < 1 or k < 0:
        raise ValueError("m >= 1 and k >= 0")
    T = tree_series(N)
    geo = SeriesQ.const(0, N)
    Tp = T
    for _ in range(k + 1):
        geo = geo + Tp
        Tp = Tp * T
    return T ** (m - 1) * geo * (-T).exp() / (1 - T) * Fraction(m, math.factorial(m))


def reach_counts(m: int, k: int, N: int) -> list[int]:
    """For n = 1..N, the total over m-fixed-point functions of #elements within k steps of a fixed point."""
    return reach_series(m, k, N).egf_counts()[1:]


def asymptotic_ratio(m: int, n: int) -> float:
    """F_{m,n} sqrt(2 pi n) / (n! e^{n-1})."""
    c = fm_series(m, n)[n]  # F_{m,n} / n!
    if c == 0:
        return 0.0
    return math.exp(math.log(c.numerator) - math.log(c.denominator) + 0.5 * math.log(2 * math.pi * n) - (n - 1))


# ------------------------------------------------------------------ brute force


def _reach_within(f: np.ndarray, k: int) -> np.ndarray:
    """Boolean mask of elements within k steps of a fixed point, for a batch of functions (rows)."""
    n = f.shape[-1]
    hit = f == np.arange(n)
    for _ in range(k):
        hit = hit | np.take_along_axis(hit, f, axis=-1)
    return hit


def brute_counts(n: int, kmax: int = 3):
    """(fm, reach): fm[m] = #functions with m fixed points; reach[(m, k)] = summed reach counts."""
    if n > BRUTE_MAX_N:
        raise ValueError(f"brute force limited to n <= {BRUTE_MAX_N}")
    total = n ** n
    digits = np.arange(total, dtype=np.int64)[:, None] // n ** np.arange(n, dtype=np.int64) % n
    fixed = (digits == np.arange(n)).sum(axis=1)
    fm = np.bincount(fixed, minlength=n + 1)
    reach = {}
    for k in range(kmax + 1):
        r = _reach_within(digits, k).sum(axis=1)
        sums = np.bincount(fixed, weights=r, minlength=n + 1)
        for m in range(n + 1):
            reach[(m, k)] = int(sums[m])
    return [int(v) for v in fm], reach


# ------------------------------------------------------------------ Monte Carlo


@dataclass(frozen=True)
class MCResult:
    mean: float
    stderr: float
    trials: int


def sample_function(n: int, m: int, gen: np.random.Generator) -> np.ndarray:
    """Uniform among functions on [n] with exactly m fixed points.

    Pick the fixed set uniformly; every other x then maps uniformly into [n] minus {x}.
    Those choices are independent and each yields exactly the chosen fixed set, so the
    result is exactly uniform without rejection.
    """
    fixed = gen.choice(n, size=m, replace=False)
    f = gen.integers(0, n - 1, size=n)
    idx = np.arange(n)
    f = f + (f >= idx)  # skip x itself
    f[fixed] = fixed
    return f


def monte_carlo_reach(n: int, m: int, k: int, trials: int, seed: int) -> MCResult:
    if n < m or trials < 1:
        raise ValueError("need n >= m and trials >= 1")
    vals = np.empty(trials)
    for t in range(trials):
        gen = make_rng(seed, f"mappings/mc/{n}/{m}/{k}/{t}")
        f = sample_function(n, m, gen)
        vals[t] = _reach_within(f[None, :], k).sum()
    se = vals.std(ddof=1) / math.sqrt(trials) if trials > 1 else 0.0
    return MCResult(float(vals.mean()), float(se), trials)
