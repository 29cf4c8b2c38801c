from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import sympy

from ..algebra.bipoly import BiPoly


def psi(n: int) -> int:
    """Dedekind psi: n * prod_{ell | n} (1 + 1/ell)."""
    out = n
    for ell in sympy.primefactors(n):
        out = out // ell * (ell + 1)
    return out


@dataclass(frozen=True, eq=False)
class ModPolyRecord:
    level: int
    p: int
    poly: BiPoly
    provenance: str  # database | interpolated | composite-built | qexp

    def __eq__(self, other):
        return isinstance(other, ModPolyRecord) and (self.level, self.p) == (other.level, other.p) and self.poly == other.poly

    def __hash__(self):
        return hash((self.level, self.p))

    def check(self) -> bool:
        d = psi(self.level)
        return self.poly.is_symmetric() and self.poly.deg_x == d


def identity_record(p: int) -> ModPolyRecord:
    """Phi_1 = X - Y."""
    return ModPolyRecord(1, p, BiPoly.from_terms(p, {(1, 0): 1, (0, 1): p - 1}), "composite-built")


def interp_matrix_fp(xs, p: int) -> np.ndarray:
    """W with coeffs = W @ values (mod p) for interpolation through distinct F_p nodes xs."""
    xs = np.asarray(xs, dtype=np.int64) % p
    n = xs.size
    if len(set(xs.tolist())) != n:
        from ..errors import DuplicateNode

        raise DuplicateNode("interpolation nodes must be distinct")
    # master polynomial M(x) = prod (x - x_k), low degree first
    M = np.zeros(n + 1, dtype=np.int64)
    M[0] = 1
    for k, x in enumerate(xs.tolist()):
        M[1 : k + 2], M[0] = (M[0 : k + 1] - x * M[1 : k + 2]) % p, (-x * M[0]) % p
    # M / (x - x_i) for all i at once by synthetic division from the top
    Q = np.zeros((n, n), dtype=np.int64)  # Q[k, i] = coeff of x^k in M/(x - x_i)
    carry = np.zeros(n, dtype=np.int64)
    for k in range(n - 1, -1, -1):
        carry = (M[k + 1] + carry * xs) % p
        Q[k] = carry
    # weights 1 / prod_{k != i} (x_i - x_k) = 1 / (M/(x-x_i))(x_i)
    den = np.zeros(n, dtype=np.int64)
    for k in range(n - 1, -1, -1):
        den = (den * xs + Q[k]) % p
    inv = np.array([pow(int(d), -1, p) for d in den], dtype=np.int64)
    return Q * inv[None, :] % p


def apply_interp(W: np.ndarray, values: np.ndarray, p: int) -> np.ndarray:
    """W @ values mod p, safe for int64 when n*(p-1)^2 fits; else object arithmetic."""
    n = W.shape[0]
    if n * (p - 1) ** 2 < (1 << 62):
        return (W @ (np.asarray(values, dtype=np.int64) % p)) % p
    return (W.astype(object) @ np.asarray(values, dtype=object)) % p
