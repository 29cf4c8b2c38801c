"""Curve models, j-invariants and exact point counting."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from ..algebra.field import FieldCtx, field_make
from ..errors import InvalidModel, TooLarge

COUNT_BOUND = 1 << 24


@dataclass(frozen=True)
class CurveModel:
    """y^2 = x(x-1)(x-lam) (form 'legendre') or y^2 = x^3 + A x + B ('weierstrass').

    Parameters are F_{p^2} encodings; F_p values are just ints below p.
    """

    ctx: FieldCtx
    form: str
    params: tuple

    @classmethod
    def legendre(cls, ctx: FieldCtx, lam: int) -> "CurveModel":
        lam = ctx.fp2.coerce(lam)
        if lam in (0, 1):
            raise InvalidModel("Legendre parameter must avoid 0 and 1")
        return cls(ctx, "legendre", (lam,))

    @classmethod
    def weierstrass(cls, ctx: FieldCtx, A: int, B: int) -> "CurveModel":
        F = ctx.fp2
        A, B = F.coerce(A), F.coerce(B)
        disc = F.add(F.mul(F.int(4), F.pow(A, 3)), F.mul(F.int(27), F.mul(B, B)))
        if disc == 0:
            raise InvalidModel("singular Weierstrass model")
        return cls(ctx, "weierstrass", (A, B))

    @property
    def p(self) -> int:
        return self.ctx.p

    def a_invariants(self) -> tuple[int, int, int]:
        """(a2, a4, a6) of y^2 = x^3 + a2 x^2 + a4 x + a6."""
        F = self.ctx.fp2
        if self.form == "legendre":
            lam = self.params[0]
            return F.neg(F.add(lam, 1)), lam, 0
        A, B = self.params
        return 0, A, B

    def short_weierstrass(self) -> tuple[int, int]:
        if self.form == "weierstrass":
            return self.params
        F = self.ctx.fp2
        a2, a4, a6 = self.a_invariants()
        i3 = F.inv(F.int(3))
        A = F.sub(a4, F.mul(F.mul(a2, a2), i3))
        B = F.add(
            F.sub(F.mul(F.mul(F.int(2), F.pow(a2, 3)), F.inv(F.int(27))), F.mul(F.mul(a2, a4), i3)),
            a6,
        )
        return A, B

    def base_degree(self) -> int:
        """1 if all coefficients lie in F_p, else 2."""
        return 1 if all(c < self.p for c in self.a_invariants()) else 2


def j_invariant(c: CurveModel) -> int:
    F = c.ctx.fp2
    if c.form == "legendre":
        lam = c.params[0]
        num = F.mul(F.int(256), F.pow(F.add(F.sub(F.mul(lam, lam), lam), 1), 3))
        den = F.mul(F.mul(lam, lam), F.pow(F.sub(lam, 1), 2))
        return F.div(num, den)
    return j_from_ab(F, *c.params)


def j_from_ab(F, A, B):
    a3 = F.mul(F.int(4), F.pow(A, 3))
    den = F.add(a3, F.mul(F.int(27), F.mul(B, B)))
    if den == 0:
        raise InvalidModel("singular model")
    return F.div(F.mul(F.int(1728), a3), den)


def curve_from_j(ctx: FieldCtx, j: int) -> CurveModel:
    """A short Weierstrass model with the given j-invariant."""
    F = ctx.fp2
    j = F.coerce(j)
    if j == 0:
        return CurveModel.weierstrass(ctx, 0, 1)
    if j == F.int(1728):
        return CurveModel.weierstrass(ctx, 1, 0)
    c = F.sub(F.int(1728), j)
    return CurveModel.weierstrass(ctx, F.mul(F.int(3), F.mul(j, c)), F.mul(F.int(2), F.mul(j, F.mul(c, c))))


@lru_cache(maxsize=32)
def _square_table(p: int) -> np.ndarray:
    chi = -np.ones(p, dtype=np.int64)
    chi[(np.arange(p, dtype=np.int64) ** 2) % p] = 1
    chi[0] = 0
    return chi


def _fx_values(ctx: FieldCtx, coeffs, k: int, lo: int, hi: int):
    """Values of x^3 + a2 x^2 + a4 x + a6 on encodings lo..hi-1, as (re, im) arrays."""
    p = ctx.p
    F = ctx.fp2
    x = np.arange(lo, hi, dtype=np.int64)
    xa, xb = x % p, x // p
    a2, a4, a6 = coeffs
    # Horner: ((x + a2) x + a4) x + a6
    ra, rb = (xa + a2 % p) % p, (xb + a2 // p) % p
    ra, rb = F.vmul_parts(ra, rb, xa, xb)
    ra, rb = (ra + a4 % p) % p, (rb + a4 // p) % p
    ra, rb = F.vmul_parts(ra, rb, xa, xb)
    ra, rb = (ra + a6 % p) % p, (rb + a6 // p) % p
    return ra, rb


def count_points(c: CurveModel, k: int = 1, bound: int = COUNT_BOUND) -> int:
    """#E(F_{p^k}) by a character sum over every x."""
    p = c.p
    if k not in (1, 2):
        raise ValueError("k must be 1 or 2")
    q = p**k
    if q > bound:
        raise TooLarge(f"p^{k} = {q} exceeds the enumeration bound {bound}")
    if k == 1 and c.base_degree() != 1:
        raise InvalidModel("curve is not defined over F_p")
    ctx = c.ctx
    chi = _square_table(p)
    total = 0
    step = 1 << 20
    coeffs = c.a_invariants()
    for lo in range(0, q, step):
        hi = min(q, lo + step)
        ra, rb = _fx_values(ctx, coeffs, k, lo, hi)
        if k == 1:
            total += int(chi[ra].sum())
        else:
            norm = (ra * ra - ctx.delta * (rb * rb % p)) % p
            total += int(chi[norm].sum())
    return q + 1 + total


def trace(c: CurveModel, k: int = 1) -> int:
    return c.p**k + 1 - count_points(c, k)


@lru_cache(maxsize=1 << 16)
def _is_ss(p: int, j: int) -> bool:
    ctx = field_make(p)
    E = curve_from_j(ctx, j)
    k = E.base_degree()
    return trace(E, k) % p == 0


def is_supersingular(j: int, ctx: FieldCtx) -> bool:
    """Trace of Frobenius divisible by p, from an exact count over the field of definition.

    For j outside {0, 1728} this is the same as #E(F_{p^2}) = (p+1)^2 for one of the two
    twists; j in F_p is counted over F_p and lifted.
    """
    return _is_ss(ctx.p, ctx.fp2.coerce(j))
