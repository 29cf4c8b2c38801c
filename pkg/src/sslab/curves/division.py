"""Division polynomials for y^2 = x^3 + a2 x^2 + a4 x + a6.

We carry f_n = psi_n for odd n and f_n = psi_n / (2y) for even n, which keeps every
term a polynomial in x; F = (2y)^2 = 4(x^3 + a2 x^2 + a4 x + a6).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..algebra.bipoly import BiPoly
from ..algebra.poly import UniPoly, padd, pmul, psub, trim
from ..errors import EllEqualsP
from .models import CurveModel


class _UniRing:
    def __init__(self, F):
        self.F = F

    def add(self, a, b):
        return padd(self.F, a, b)

    def sub(self, a, b):
        return psub(self.F, a, b)

    def mul(self, a, b):
        return pmul(self.F, a, b)

    def poly(self, coeffs):
        # coeffs: list of ring constants (field elements), low degree first
        return trim(list(coeffs))

    def c(self, v):
        return self.F.int(v)

    def cadd(self, a, b):
        return self.F.add(a, b)

    def cmul(self, a, b):
        return self.F.mul(a, b)

    def csub(self, a, b):
        return self.F.sub(a, b)


class _LegendreRing:
    """Polynomials in x over F_p[a] as BiPoly(X = x, Y = a); constants are F_p[a] lists."""

    def __init__(self, p):
        self.p = p

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def poly(self, coeffs):
        terms = {}
        for i, c in enumerate(coeffs):
            for k, v in enumerate(c):
                if v % self.p:
                    terms[(i, k)] = v % self.p
        return BiPoly.from_terms(self.p, terms)

    def c(self, v):
        return [v % self.p] if isinstance(v, int) else list(v)

    def cadd(self, a, b):
        n = max(len(a), len(b))
        return [((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % self.p for i in range(n)]

    def csub(self, a, b):
        return self.cadd(a, [(-v) % self.p for v in b])

    def cmul(self, a, b):
        if not a or not b:
            return [0]
        return (np.convolve(np.array(a, dtype=object), np.array(b, dtype=object)) % self.p).tolist()


def _family(R, a2, a4, a6, n):
    c, cadd, csub, cmul = R.c, R.cadd, R.csub, R.cmul
    b2 = cmul(c(4), a2)
    b4 = cmul(c(2), a4)
    b6 = cmul(c(4), a6)
    b8 = csub(cmul(cmul(c(4), a2), a6), cmul(a4, a4))
    Fp = R.poly([cmul(c(4), a6), cmul(c(4), a4), cmul(c(4), a2), c(4)])
    f = [R.poly([]), R.poly([c(1)]), R.poly([c(1)])]
    f3 = R.poly([b8, cmul(c(3), b6), cmul(c(3), b4), b2, c(3)])
    f4 = R.poly([
        csub(cmul(b4, b8), cmul(b6, b6)),
        csub(cmul(b2, b8), cmul(b4, b6)),
        cmul(c(10), b8),
        cmul(c(10), b6),
        cmul(c(5), b4),
        b2,
        c(2),
    ])
    f += [f3, f4]
    mul, sub = R.mul, R.sub
    for k in range(5, n + 2):
        m = k // 2
        if k & 1:
            t1 = mul(f[m + 2], mul(f[m], mul(f[m], f[m])))
            t2 = mul(f[m - 1], mul(f[m + 1], mul(f[m + 1], f[m + 1])))
            FF = mul(Fp, Fp)
            if m & 1:
                f.append(sub(t1, mul(FF, t2)))
            else:
                f.append(sub(mul(FF, t1), t2))
        else:
            t1 = mul(f[m + 2], mul(f[m - 1], f[m - 1]))
            t2 = mul(f[m - 2], mul(f[m + 1], f[m + 1]))
            f.append(mul(f[m], sub(t1, t2)))
    return f, Fp


@dataclass(frozen=True)
class TorsionPoly:
    ell: int
    poly: object  # UniPoly in x, or BiPoly in (x, a) for the symbolic Legendre family
    symbolic: bool = False


def division_family(c: CurveModel, n: int):
    """(f_0..f_{n+1}, F) as coefficient lists over F_{p^2} for a concrete curve."""
    F = c.ctx.fp2
    return _family(_UniRing(F), *c.a_invariants(), n)


def legendre_family(p: int, n: int):
    """(f_0..f_{n+1}, F) as BiPoly in (x, a) for y^2 = x(x-1)(x-a) over F_p[a]."""
    R = _LegendreRing(p)
    return _family(R, [p - 1, p - 1], [0, 1], [0], n)


def division_poly(ell: int, curve: CurveModel | int) -> TorsionPoly:
    """psi_ell in x. Pass a CurveModel, or a prime p for the symbolic Legendre family."""
    p = curve.p if isinstance(curve, CurveModel) else int(curve)
    if ell % p == 0:
        raise EllEqualsP(f"level {ell} is divisible by the characteristic")
    if isinstance(curve, CurveModel):
        fam, Fx = division_family(curve, ell)
        F = curve.ctx.fp2 if curve.base_degree() == 2 else curve.ctx.fp
        # for even ell this is psi_ell / (2y)
        return TorsionPoly(ell, UniPoly(F, tuple(fam[ell])))
    fam, Fx = legendre_family(p, ell)
    return TorsionPoly(ell, fam[ell], symbolic=True)


def mult_map(fam, Fx, n):
    """Numerator and denominator of x([n]P) for odd n, as ring elements."""
    if n % 2 == 0:
        raise ValueError("odd n only")
    fn = fam[n]
    if isinstance(fn, BiPoly):
        x = BiPoly.from_terms(fn.p, {(1, 0): 1})
        num = x * fn * fn - Fx * fam[n + 1] * fam[n - 1]
        return num, fn * fn
    raise TypeError("mult_map supports the symbolic family")
