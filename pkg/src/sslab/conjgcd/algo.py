"""Roots in F_{p^2} of f_{n,m,p}(x) = gcd(Phi_n(x, x^p), Phi_m(x, x^p))."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ..algebra.batch import matmul_mod, powers_matrix, resultant_batch
from ..algebra.bipoly import interpolate_consecutive_fp
from ..algebra.field import FieldCtx, field_make
from ..algebra.poly import pgcd, resultant_formal, roots_list, trim
from ..curves.models import is_supersingular
from ..errors import EqualLevels, LevelDividesP, ResultantIdenticallyZero, TooLarge
from ..modpoly.records import psi
from .split import split_array

BRUTE_BUDGET = 4 * 10**9
ZERO_PROBES = 8


@dataclass(frozen=True)
class ConjGcdResult:
    n: int
    m: int
    p: int
    roots: tuple
    supersingular: tuple | None  # None when classification was skipped
    ordinary: tuple | None
    kron: int
    coprime: bool
    strategy: str = ""

    @property
    def deg_estimate(self) -> int:
        return len(self.roots)

    @property
    def num_ss(self) -> int | None:
        return None if self.supersingular is None else len(self.supersingular)


def kronecker(n: int, m: int, p: int) -> int:
    """(-nm | p) for an odd prime p; -1 means p is inert in Q(sqrt(-nm))."""
    a = (-n * m) % p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


def _check_levels(n, m, p):
    if n == m:
        raise EqualLevels("n and m must differ")
    if n % p == 0 or m % p == 0:
        raise LevelDividesP("levels must be prime to p")
    if min(n, m) < 2:
        raise ValueError("levels must be >= 2")


def _split_of(rec, ctx) -> np.ndarray:
    c = np.asarray(rec.poly.coeffs, dtype=object) % ctx.p
    return split_array(c.astype(np.int64), ctx.p, ctx.delta)


def _specialize_rows(C: np.ndarray, xs: np.ndarray, p: int) -> np.ndarray:
    """rows[b] = coefficients in X0 of C(X0, xs[b])."""
    V = powers_matrix(np.asarray(xs, dtype=np.int64), C.shape[1], p)
    return matmul_mod(V, C.T.copy(), p)


def _probe_zero(Cm, Cn, ctx, count=ZERO_PROBES) -> bool:
    """True when R vanishes at a few points of F_{p^2} outside F_p as well."""
    F = ctx.fp2
    p = ctx.p
    dm, dn = Cm.shape[0] - 1, Cn.shape[0] - 1
    for t in range(count):
        x1 = p * (t + 1) + t  # t + (t+1) sqrt(delta), not in F_p
        fm = [_horner_quad(F, Cm[i], x1) for i in range(Cm.shape[0])]
        fn = [_horner_quad(F, Cn[i], x1) for i in range(Cn.shape[0])]
        if resultant_formal(F, fm, fn, dm, dn):
            return False
    return True


def _horner_quad(F, row, x):
    acc = 0
    for c in reversed(row.tolist()):
        acc = F.add(F.mul(acc, x), int(c))
    return acc


def resultant_x1_roots(Cm: np.ndarray, Cn: np.ndarray, ctx: FieldCtx, strategy: str = "auto"):
    """Roots in F_p of R(X1) = Res_{X0}(F_m, F_n); returns (roots, strategy used)."""
    p = ctx.p
    tm = max(i + k for i, k in zip(*np.nonzero(Cm)))
    tn = max(i + k for i, k in zip(*np.nonzero(Cn)))
    bound = min(tm * tn, (Cm.shape[0] - 1) * (Cn.shape[1] - 1) + (Cm.shape[1] - 1) * (Cn.shape[0] - 1))
    if strategy == "auto":
        strategy = "pointwise" if bound + 1 > p else "interpolate"
    if strategy == "interpolate" and bound + 1 > p:
        raise TooLarge(f"resultant degree bound {bound} needs more than p nodes")
    if strategy == "pointwise":
        xs = np.arange(p, dtype=np.int64)
        vals = np.zeros(p, dtype=np.int64)
        chunk = max(1, (1 << 22) // max(1, Cm.shape[0] + Cn.shape[0]))
        for lo in range(0, p, chunk):
            sl = xs[lo : lo + chunk]
            vals[lo : lo + chunk] = resultant_batch(_specialize_rows(Cm, sl, p), _specialize_rows(Cn, sl, p), p)
        zero = vals == 0
        if zero.all() and (bound < p or _probe_zero(Cm, Cn, ctx)):
            raise ResultantIdenticallyZero("Res_X0(F_m, F_n) vanishes identically")
        return [int(x) for x in np.flatnonzero(zero)], strategy
    xs = np.arange(bound + 1, dtype=np.int64)
    vals = resultant_batch(_specialize_rows(Cm, xs, p), _specialize_rows(Cn, xs, p), p)
    R = interpolate_consecutive_fp([int(v) for v in vals], p)
    if not trim(R):
        raise ResultantIdenticallyZero("Res_X0(F_m, F_n) vanishes identically")
    return sorted(r for r, _ in roots_list(ctx.fp, R)), strategy


def _classify(roots, ctx, classify):
    if not classify:
        return None, None
    try:
        ss = tuple(j for j in roots if is_supersingular(j, ctx))
    except TooLarge:
        return None, None
    ords = tuple(j for j in roots if j not in set(ss))
    return ss, ords


def fnmp_roots(n: int, m: int, p: int, store=None, ctx: FieldCtx | None = None, classify: bool = True,
               strategy: str = "auto") -> ConjGcdResult:
    """Roots of f_{n,m,p} in F_{p^2} via the conjugate-split resultant, as an ordered set."""
    _check_levels(n, m, p)
    ctx = ctx or field_make(p)
    if store is None:
        from ..modpoly.store import ModPolyStore

        store = ModPolyStore(p, ctx=ctx)
    Cm = _split_of(store.get(m), ctx)
    Cn = _split_of(store.get(n), ctx)
    J1, used = resultant_x1_roots(Cm, Cn, ctx, strategy)
    Fp = ctx.fp
    out = set()
    if J1:
        Am = _specialize_rows(Cm, np.array(J1), p)
        An = _specialize_rows(Cn, np.array(J1), p)
        for j1, am, an in zip(J1, Am, An):
            fm, fn = trim(am.tolist()), trim(an.tolist())
            if not fm and not fn:
                J0 = range(p)
            else:
                G = pgcd(Fp, fm, fn) if fm and fn else (fm or fn)
                J0 = [r for r, _ in roots_list(Fp, G)] if len(G) > 1 else []
            out.update(int(j0) + j1 * p for j0 in J0)
    roots = tuple(sorted(out))
    ss, ords = _classify(roots, ctx, classify)
    return ConjGcdResult(n, m, p, roots, ss, ords, kronecker(n, m, p), math.gcd(n, m) == 1, used)


# ---------------------------------------------------------------- brute force


def eval_conj_vec(c: np.ndarray, t: np.ndarray, ctx: FieldCtx):
    """Phi(t, t^p) for an array of F_{p^2} encodings t; returns (real, imag) parts."""
    p, d = ctx.p, ctx.delta
    c = np.asarray(c, dtype=object) % p
    c = c.astype(np.int64)
    xa, xb = t % p, t // p
    ya, yb = xa, (p - xb) % p
    ra = np.zeros_like(xa)
    rb = np.zeros_like(xa)
    for i in range(c.shape[0] - 1, -1, -1):
        # row_i(Y) by Horner
        sa = np.zeros_like(xa)
        sb = np.zeros_like(xa)
        for k in range(c.shape[1] - 1, -1, -1):
            sa, sb = (sa * ya + d * (sb * yb % p) + c[i, k]) % p, (sa * yb + sb * ya) % p
        ra, rb = (ra * xa + d * (rb * xb % p) + sa) % p, (ra * xb + rb * xa + sb) % p
    return ra, rb


def fnmp_brute(n: int, m: int, p: int, store=None, ctx: FieldCtx | None = None,
               budget: int = BRUTE_BUDGET) -> set:
    """{ j in F_{p^2} : Phi_n(j, j^p) = 0 = Phi_m(j, j^p) } by exhaustive evaluation."""
    _check_levels(n, m, p)
    ctx = ctx or field_make(p)
    if store is None:
        from ..modpoly.store import ModPolyStore

        store = ModPolyStore(p, ctx=ctx)
    small, big = sorted((n, m), key=psi)
    cost = p * p * (psi(small) + 1) ** 2
    if cost > budget:
        raise TooLarge(f"brute scan cost {cost} exceeds budget {budget}")
    t = np.arange(p * p, dtype=np.int64)
    a, b = eval_conj_vec(store.get(small).poly.coeffs, t, ctx)
    t = t[(a == 0) & (b == 0)]
    a, b = eval_conj_vec(store.get(big).poly.coeffs, t, ctx)
    return {int(j) for j in t[(a == 0) & (b == 0)]}


def verify_root(j: int, rec, ctx: FieldCtx) -> bool:
    F = ctx.fp2
    return rec.poly(j, F.frob(j), F) == 0
