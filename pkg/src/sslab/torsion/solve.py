"""Elimination of x from the torsion systems, and the candidate/verified parameter sets."""

from __future__ import annotations

import time
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from ..algebra.field import FieldCtx, field_make
from ..algebra.poly import UniPoly
from ..curves.division import legendre_family
from ..curves.models import CurveModel, is_supersingular, j_invariant
from ..errors import TooLarge
from ..rng import rng as make_rng
from .system import TorsionSystem, Variant, build_system, prime_power

TINY_P_BOUND = 100
CSV_HEADER = "p,variant,ells,num_candidates,num_verified,runtime_ms"
_CELLS = 1 << 22  # grid cells per evaluation block


@lru_cache(maxsize=32)
def _psi_array(p: int, n: int) -> np.ndarray:
    """Coefficients c[i, k] of x^i a^k in the Legendre n-division polynomial (n odd)."""
    fam, _ = legendre_family(p, n)
    return np.asarray(fam[n].coeffs, dtype=np.int64) % p


def _powers(xa, xb, n, ctx):
    """Real and imaginary parts of x^k, k < n, as float matrices (exact for p < 2^20)."""
    F = ctx.fp2
    Pa = np.zeros((len(xa), n), dtype=np.int64)
    Pb = np.zeros_like(Pa)
    Pa[:, 0] = 1
    for k in range(1, n):
        Pa[:, k], Pb[:, k] = F.vmul_parts(Pa[:, k - 1], Pb[:, k - 1], xa, xb)
    return Pa, Pb


def _fmm(A, B, p):
    return np.rint(A.astype(np.float64) @ B.astype(np.float64)).astype(np.int64) % p


def _grid_zero(c, avals, betas, ctx) -> np.ndarray:
    """Z[s, t] = (Psi(betas[t], avals[s]) == 0)."""
    p, d = ctx.p, ctx.delta
    Aa, Ab = _powers(avals % p, avals // p, c.shape[1], ctx)
    Ca, Cb = _fmm(Aa, c.T, p), _fmm(Ab, c.T, p)  # x-coefficients for each a
    Va, Vb = _powers(betas % p, betas // p, c.shape[0], ctx)
    re = (_fmm(Ca, Va.T, p) + d * _fmm(Cb, Vb.T, p)) % p
    im = (_fmm(Ca, Vb.T, p) + _fmm(Cb, Va.T, p)) % p
    return (re == 0) & (im == 0)


def field_elements(ctx: FieldCtx) -> np.ndarray:
    return np.arange(ctx.p * ctx.p, dtype=np.int64)


def coset_elements(ctx: FieldCtx, r: int, mu: int) -> np.ndarray:
    """{ x in F_{p^2} : (mu x)^r = 1 }, sorted by encoding."""
    F = ctx.fp2
    xs = field_elements(ctx)[1:]
    xa, xb = F.vmul_parts(xs % ctx.p, xs // ctx.p, np.int64(mu % ctx.p), np.int64(mu // ctx.p))
    ra, rb = np.ones_like(xa), np.zeros_like(xb)
    e = r
    while e:
        if e & 1:
            ra, rb = F.vmul_parts(ra, rb, xa, xb)
        xa, xb = F.vmul_parts(xa, xb, xa, xb)
        e >>= 1
    return xs[(ra == 1) & (rb == 0)]


def draw_mu(ctx: FieldCtx, r: int, seed: int) -> int:
    q = ctx.p * ctx.p
    return int(make_rng(seed, f"torsion/coset/{ctx.p}/{r}").integers(1, q))


def level_mask(p: int, q: int, betas: np.ndarray, ctx: FieldCtx | None = None) -> np.ndarray:
    """mask[a] over all a in F_{p^2}: some beta in ``betas`` is the x-coordinate of a point of exact order q on E_a."""
    ctx = ctx or field_make(p)
    ell, e = prime_power(q)
    top = _psi_array(p, q)
    low = _psi_array(p, q // ell) if e > 1 else None
    avals = field_elements(ctx)
    out = np.zeros(len(avals), dtype=bool)
    step = max(1, _CELLS // max(1, len(betas)))
    for lo in range(0, len(avals), step):
        blk = avals[lo : lo + step]
        Z = _grid_zero(top, blk, betas, ctx)
        if low is not None:
            Z &= ~_grid_zero(low, blk, betas, ctx)
        out[lo : lo + step] = Z.any(axis=1)
    return out


# ---------------------------------------------------------------- eliminants


def _conv(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    if min(len(a), len(b)) <= 64:
        return np.convolve(a, b) % p
    n = len(a) + len(b) - 1
    size = 1 << (n - 1).bit_length()
    # exact: every product sum stays far below 2^52
    c = np.fft.irfft(np.fft.rfft(a, size) * np.fft.rfft(b, size), size)[:n]
    return np.rint(c).astype(np.int64) % p


def _mul2(x, y, p, d):
    (xa, xb), (ya, yb) = x, y
    aa, bb = _conv(xa, ya, p), _conv(xb, yb, p)
    ab = (_conv(xa, yb, p) + _conv(xb, ya, p)) % p
    return (aa + d * bb) % p, ab


def _product_tree(factors, p, d):
    while len(factors) > 1:
        nxt = [_mul2(factors[i], factors[i + 1], p, d) for i in range(0, len(factors) - 1, 2)]
        if len(factors) & 1:
            nxt.append(factors[-1])
        factors = nxt
    return factors[0]


def _check_tiny(p, bound):
    if p > bound:
        raise TooLarge(f"p = {p} exceeds the elimination bound {bound}")


def beta_product(p: int, ell: int, betas: np.ndarray, ctx: FieldCtx | None = None) -> UniPoly:
    """prod over beta of Psi_ell(beta, a), as a polynomial in a.

    Coefficients are returned over F_p when they all lie there, else over F_{p^2}.
    """
    ctx = ctx or field_make(p)
    c = _psi_array(p, ell)
    Va, Vb = _powers(betas % p, betas // p, c.shape[0], ctx)
    Ga, Gb = _fmm(Va, c, p), _fmm(Vb, c, p)  # row t: Psi(betas[t], a) in a
    ra, rb = _product_tree([(Ga[t], Gb[t]) for t in range(len(betas))], p, ctx.delta)
    if not rb.any():
        return UniPoly.make(ctx.fp, ra.tolist())
    return UniPoly.make(ctx.fp2, (ra + p * rb).tolist())


def eliminate(p: int, ell: int, variant: Variant | str = "basic", ctx: FieldCtx | None = None,
              bound: int = TINY_P_BOUND) -> UniPoly:
    """R_ell(a) = prod_{beta in F_{p^2}} Psi_ell(beta, a); the coset variant ranges over its coset instead."""
    _check_tiny(p, bound)
    variant = Variant(variant) if isinstance(variant, str) else variant
    ctx = ctx or field_make(p)
    if variant.kind == "coset":
        mu = variant.mu if variant.mu is not None else draw_mu(ctx, variant.r, variant.mu_seed)
        return coset_restrict(p, ell, variant.r, variant.mu_seed, mu=mu, ctx=ctx, bound=bound)
    build_system(p, [ell], Variant("hybrid") if variant.kind == "hybrid" else variant)
    return beta_product(p, ell, field_elements(ctx), ctx)


def coset_restrict(p: int, ell: int, r: int, mu_seed: int = 0, mu: int | None = None,
                   ctx: FieldCtx | None = None, bound: int = TINY_P_BOUND) -> UniPoly:
    _check_tiny(p, bound)
    ctx = ctx or field_make(p)
    build_system(p, [ell], Variant("coset", r=r))
    if mu is None:
        mu = draw_mu(ctx, r, mu_seed)
    return beta_product(p, ell, coset_elements(ctx, r, mu), ctx)


# ---------------------------------------------------------------- solving


@dataclass(frozen=True)
class TorsionResult:
    system: TorsionSystem
    candidates: tuple
    verified: tuple
    runtime_ms: int = 0

    def csv_row(self, timing: bool = False) -> str:
        s = self.system
        ells = ";".join(map(str, s.ells))
        rt = str(self.runtime_ms) if timing else ""
        return f"{s.p},{s.variant.label},{ells},{len(self.candidates)},{len(self.verified)},{rt}"


def legendre_is_supersingular(a: int, ctx: FieldCtx) -> bool:
    return is_supersingular(j_invariant(CurveModel.legendre(ctx, a)), ctx)


def solve(p: int, ells, variant: Variant | str = "basic", ctx: FieldCtx | None = None,
          bound: int = TINY_P_BOUND) -> TorsionResult:
    """Parameters a satisfying every retained equation, then the supersingular ones among them.

    The common roots of the eliminants R_ell are found by evaluating the system on the full
    (beta, a) grid, which gives the same set as rooting gcd_ell R_ell over F_{p^2}.
    """
    t0 = time.perf_counter()
    system = build_system(p, ells, variant)
    _check_tiny(p, bound)
    ctx = ctx or field_make(p)
    v = system.variant
    if v.kind == "coset":
        mu = v.mu if v.mu is not None else draw_mu(ctx, v.r, v.mu_seed)
        betas = coset_elements(ctx, v.r, mu)
    else:
        betas = field_elements(ctx)
    mask = np.ones(p * p, dtype=bool)
    for q in system.active:
        mask &= level_mask(p, q, betas, ctx)
    mask[[0, 1]] = False
    cands = tuple(int(a) for a in np.flatnonzero(mask))
    ver = tuple(a for a in cands if legendre_is_supersingular(a, ctx))
    return TorsionResult(system, cands, ver, int(round((time.perf_counter() - t0) * 1000)))
