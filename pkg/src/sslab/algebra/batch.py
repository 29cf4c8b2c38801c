"""Vectorized F_p arithmetic over a batch of polynomials (one per row)."""

from __future__ import annotations

import numpy as np

from .field import PrimeField
from .poly import resultant_formal

BATCH_P_LIMIT = 1 << 31


def vec_pow(a: np.ndarray, e: int, p: int) -> np.ndarray:
    out = np.ones_like(a)
    base = a % p
    while e:
        if e & 1:
            out = out * base % p
        base = base * base % p
        e >>= 1
    return out


def vec_inv(a: np.ndarray, p: int) -> np.ndarray:
    """Elementwise inverse mod p (0 maps to 0)."""
    return vec_pow(a, p - 2, p)


def powers_matrix(xs: np.ndarray, n: int, p: int) -> np.ndarray:
    """V[b, k] = xs[b]^k mod p, k < n."""
    V = np.ones((len(xs), n), dtype=np.int64)
    for k in range(1, n):
        V[:, k] = V[:, k - 1] * xs % p
    return V


def matmul_mod(A: np.ndarray, B: np.ndarray, p: int) -> np.ndarray:
    """A @ B mod p without int64 overflow."""
    inner = A.shape[1]
    if inner * (p - 1) ** 2 < (1 << 62):
        return (A @ B) % p
    # split B into 16-bit halves
    lo, hi = B & 0xFFFF, B >> 16
    return ((A @ hi) % p * (1 << 16) + (A @ lo)) % p


def resultant_batch(f: np.ndarray, g: np.ndarray, p: int) -> np.ndarray:
    """Formal resultants Res(f_b, g_b) over F_p, with formal degrees given by the column counts.

    Rows follow a normal remainder sequence in lockstep; any row whose leading coefficient
    vanishes along the way is redone by the scalar routine.
    """
    if p >= BATCH_P_LIMIT:
        raise ValueError("batched resultant needs p < 2^31")
    f = np.asarray(f, dtype=np.int64) % p
    g = np.asarray(g, dtype=np.int64) % p
    B = f.shape[0]
    a, b = f.shape[1] - 1, g.shape[1] - 1
    F, G = f, g
    res = np.ones(B, dtype=np.int64)
    if a < b:
        F, G, a, b = G, F, b, a
        if (a * b) & 1:
            res = (p - res) % p
    bad = (F[:, a] == 0) | (G[:, b] == 0)
    while b > 0:
        inv = vec_inv(G[:, b], p)
        R = F.copy()
        for i in range(a, b - 1, -1):
            q = R[:, i] * inv % p
            R[:, i - b : i + 1] = (R[:, i - b : i + 1] - q[:, None] * G) % p
        R = R[:, :b]
        if (a * b) & 1:
            res = (p - res) % p
        res = res * vec_pow(G[:, b], a - (b - 1), p) % p
        bad |= R[:, b - 1] == 0
        F, G, a, b = G, R, b, b - 1
    res = res * vec_pow(G[:, 0], a, p) % p
    if bad.any():
        Fp = PrimeField(p)
        df, dg = f.shape[1] - 1, g.shape[1] - 1
        for r in np.flatnonzero(bad):
            res[r] = resultant_formal(Fp, f[r].tolist(), g[r].tolist(), df, dg)
    return res
