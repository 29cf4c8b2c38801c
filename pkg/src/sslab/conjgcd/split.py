"""Rewrite a symmetric Phi(X, Y) in coordinates j = j0 + j1 sqrt(delta), j^p = j0 - j1 sqrt(delta)."""

from __future__ import annotations

from math import comb

import numpy as np

from ..algebra.bipoly import BiPoly
from ..algebra.field import FieldCtx
from ..errors import NotSymmetric


def shear(c: np.ndarray, a: int, axis: int, p: int) -> np.ndarray:
    """Substitute v -> v + a*u in c[i, j] = coefficient of X^i Y^j, where v is the ``axis`` variable."""
    if axis == 0:
        return shear(c.T, a, 1, p).T
    nx, ny = c.shape
    out = np.zeros((nx + ny - 1, ny), dtype=np.int64)
    a %= p
    for j in range(ny):
        col = c[:, j]
        if not col.any():
            continue
        at = 1
        for t in range(j + 1):
            f = comb(j, t) % p * at % p
            if f:
                out[t : t + nx, j - t] = (out[t : t + nx, j - t] + col * f) % p
            at = at * a % p
    return out


def split_array(c: np.ndarray, p: int, delta: int) -> np.ndarray:
    """c[i, k] of F(X0, X1) = Phi(X0 + s X1, X0 - s X1), s^2 = delta."""
    c = np.asarray(c, dtype=np.int64) % p
    if not np.array_equal(c, c.T):
        raise NotSymmetric("Phi must be symmetric")
    signs = np.where(np.arange(c.shape[1]) % 2 == 1, p - 1, 1)
    b = c * signs[None, :] % p  # Phi(X, -W)
    b = shear(b, -1, 1, p)  # Phi(X, X - W)
    g = shear(b, pow(2, -1, p), 0, p)  # Phi(X0 + W/2, X0 - W/2), even in W
    if g[:, 1::2].any():
        raise NotSymmetric("odd powers of sqrt(delta) survived the substitution")
    # W = 2 s X1, so W^k = (4 delta)^(k/2) X1^k for even k
    scale = np.zeros(g.shape[1], dtype=np.int64)
    scale[::2] = [pow(4 * delta, k, p) for k in range((g.shape[1] + 1) // 2)]
    out = g * scale[None, :] % p
    nz_r = np.flatnonzero(out.any(axis=1))
    nz_c = np.flatnonzero(out.any(axis=0))
    if nz_r.size == 0:
        return np.zeros((1, 1), dtype=np.int64)
    return out[: nz_r[-1] + 1, : nz_c[-1] + 1]


def split_substitute(phi, ctx: FieldCtx) -> BiPoly:
    """F(X0, X1) = Phi(X0 + sqrt(delta) X1, X0 - sqrt(delta) X1) in F_p[X0, X1].

    ``phi`` is a ModPolyRecord or a BiPoly.
    """
    poly = getattr(phi, "poly", phi)
    if not poly.is_symmetric():
        raise NotSymmetric("Phi must be symmetric")
    p = ctx.p
    c = np.asarray(poly.coeffs, dtype=object) % p
    D = max(c.shape)
    sq = np.zeros((D, D), dtype=np.int64)
    sq[: c.shape[0], : c.shape[1]] = c.astype(np.int64)
    return BiPoly.make(p, split_array(sq, p, ctx.delta))
