"""The Hasse (supersingular) polynomial H_p(t) = sum_j binom((p-1)/2, j)^2 t^j and its evaluation."""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from ..algebra.field import FieldCtx, field_make
from ..algebra.poly import UniPoly
from ..errors import DegenerateLambda, TwoNotSupported


@lru_cache(maxsize=64)
def _coeffs(p: int) -> tuple:
    m = (p - 1) // 2
    out = [1]
    b = 1
    for j in range(1, m + 1):
        # binom(m, j) = binom(m, j-1) (m - j + 1) / j; j < p so the division is fine mod p
        b = b * (m - j + 1) % p * pow(j, -1, p) % p
        out.append(b * b % p)
    return tuple(out)


def hasse_coeffs(p: int, ctx: FieldCtx | None = None) -> UniPoly:
    """H_p over F_{p^2} (all coefficients lie in F_p)."""
    if p == 2:
        raise TwoNotSupported("H_p needs an odd prime")
    ctx = ctx or field_make(p)
    return UniPoly(ctx.fp2, _coeffs(p))


def hasse_eval(lam: int, ctx: FieldCtx) -> int:
    lam = ctx.fp2.coerce(lam)
    if lam in (0, 1):
        raise DegenerateLambda("lambda must avoid 0 and 1")
    return hasse_coeffs(ctx.p, ctx)(lam)


def hasse_eval_vec(ctx: FieldCtx, t: np.ndarray, deriv: bool = False):
    """H_p (and H_p') at an array of F_{p^2} encodings; returns (real, imag) parts."""
    p, d = ctx.p, ctx.delta
    c = _coeffs(p)
    ta, tb = np.asarray(t, dtype=np.int64) % p, np.asarray(t, dtype=np.int64) // p
    real = not tb.any()
    ha = np.full(ta.shape, c[-1], dtype=np.int64)
    hb = np.zeros_like(ha)
    da = np.zeros_like(ha)
    db = np.zeros_like(ha)
    for k in range(len(c) - 2, -1, -1):
        if deriv:
            # D <- D t + H, computed before H is updated
            if real:
                da = (da * ta + ha) % p
            else:
                da, db = (da * ta + d * (db * tb % p) + ha) % p, (da * tb + db * ta + hb) % p
        if real:
            ha = (ha * ta + c[k]) % p
        else:
            ha, hb = (ha * ta + d * (hb * tb % p) + c[k]) % p, (ha * tb + hb * ta) % p
    if deriv:
        return (ha, hb), (da, db)
    return ha, hb


def vec_inv_fp(a: np.ndarray, p: int) -> np.ndarray:
    """a^(p-2) mod p elementwise (0 maps to 0)."""
    out = np.ones_like(a)
    base = a % p
    e = p - 2
    while e:
        if e & 1:
            out = out * base % p
        base = base * base % p
        e >>= 1
    return out
