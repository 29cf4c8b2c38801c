"""Arithmetic in F_q[X]/(h) for an irreducible h, with a cached Frobenius matrix."""

from __future__ import annotations

from ..algebra.poly import (
    apply_frob,
    frobenius_matrix,
    padd,
    pdivmod,
    pmod,
    pmul,
    pscale,
    psub,
    trim,
)


class ExtField:
    def __init__(self, F, h):
        self.F = F
        self.h = list(h)
        self.d = len(h) - 1
        self._M = None

    @property
    def gen(self):
        return pmod(self.F, [0, 1], self.h)

    def const(self, c):
        return trim([c])

    def add(self, a, b):
        return padd(self.F, a, b)

    def sub(self, a, b):
        return psub(self.F, a, b)

    def mul(self, a, b):
        return pmod(self.F, pmul(self.F, a, b), self.h)

    def scale(self, a, c):
        return pscale(self.F, a, c)

    def inv(self, a):
        F = self.F
        # extended Euclid on (a, h)
        r0, r1 = list(self.h), trim(list(a))
        s0, s1 = [], [1]
        if not r1:
            raise ZeroDivisionError("inverse of zero in extension")
        while len(r1) > 1:
            q, r = pdivmod(F, r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, psub(F, s0, pmul(F, q, s1))
        if not r1:
            raise ZeroDivisionError("non-invertible element: modulus is reducible")
        return pmod(F, pscale(F, s1, F.inv(r1[0])), self.h)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def frob(self, a):
        if self.d == 1:
            return list(a)
        if self._M is None:
            self._M = frobenius_matrix(self.F, self.h)
        return apply_frob(self.F, self._M, a)

    def vector(self, a):
        return list(a) + [0] * (self.d - len(a))
