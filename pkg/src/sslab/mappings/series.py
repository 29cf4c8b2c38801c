"""Truncated power series with exact rational coefficients."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


def _fr(v) -> Fraction:
    return v if isinstance(v, Fraction) else Fraction(v)


@dataclass(frozen=True)
class SeriesQ:
    """c_0 + c_1 z + ... + c_N z^N, exact through order N."""

    coeffs: tuple
    N: int

    @classmethod
    def make(cls, coeffs, N: int) -> "SeriesQ":
        c = [_fr(v) for v in list(coeffs)[: N + 1]]
        c += [Fraction(0)] * (N + 1 - len(c))
        return cls(tuple(c), N)

    @classmethod
    def const(cls, v, N: int) -> "SeriesQ":
        return cls.make([v], N)

    @classmethod
    def z(cls, N: int) -> "SeriesQ":
        return cls.make([0, 1], N)

    def __getitem__(self, n: int) -> Fraction:
        return self.coeffs[n]

    def _lift(self, other):
        if isinstance(other, SeriesQ):
            if other.N != self.N:
                raise ValueError("truncation orders differ")
            return other
        return SeriesQ.const(other, self.N)

    def __add__(self, other):
        o = self._lift(other)
        return SeriesQ(tuple(a + b for a, b in zip(self.coeffs, o.coeffs)), self.N)

    __radd__ = __add__

    def __neg__(self):
        return SeriesQ(tuple(-a for a in self.coeffs), self.N)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, SeriesQ):
            v = _fr(other)
            return SeriesQ(tuple(a * v for a in self.coeffs), self.N)
        o = self._lift(other)
        N = self.N
        a = self.coeffs
        b = o.coeffs
        nz = [i for i in range(N + 1) if a[i]]
        out = [Fraction(0)] * (N + 1)
        for i in nz:
            ai = a[i]
            for k in range(N + 1 - i):
                if b[k]:
                    out[i + k] += ai * b[k]
        return SeriesQ(tuple(out), N)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        out = SeriesQ.const(1, self.N)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __truediv__(self, other):
        if not isinstance(other, SeriesQ):
            return self * (1 / _fr(other))
        return self * other.inverse()

    def inverse(self) -> "SeriesQ":
        a = self.coeffs
        if a[0] == 0:
            raise ZeroDivisionError("series has zero constant term")
        inv0 = 1 / a[0]
        out = [inv0]
        for n in range(1, self.N + 1):
            s = sum((a[k] * out[n - k] for k in range(1, n + 1)), Fraction(0))
            out.append(-s * inv0)
        return SeriesQ(tuple(out), self.N)

    def deriv(self) -> "SeriesQ":
        return SeriesQ.make([n * c for n, c in enumerate(self.coeffs)][1:], self.N)

    def integ(self) -> "SeriesQ":
        return SeriesQ.make([0] + [c / (n + 1) for n, c in enumerate(self.coeffs)], self.N)

    def exp(self) -> "SeriesQ":
        # E' = S' E, so n e_n = sum_k k s_k e_{n-k}
        s = self.coeffs
        if s[0] != 0:
            raise ValueError("exp needs a zero constant term")
        e = [Fraction(1)]
        ks = [k * s[k] for k in range(self.N + 1)]
        for n in range(1, self.N + 1):
            e.append(sum((ks[k] * e[n - k] for k in range(1, n + 1) if ks[k]), Fraction(0)) / n)
        return SeriesQ(tuple(e), self.N)

    def log(self) -> "SeriesQ":
        if self.coeffs[0] != 1:
            raise ValueError("log needs constant term 1")
        return (self.deriv() * self.inverse()).integ()

    def compose(self, inner: "SeriesQ") -> "SeriesQ":
        """self(inner(z)); inner must have zero constant term."""
        if inner[0] != 0:
            raise ValueError("inner series must vanish at 0")
        out = SeriesQ.const(0, self.N)
        for c in reversed(self.coeffs):
            out = out * inner + c
        return out

    def truncate(self, N: int) -> "SeriesQ":
        return SeriesQ.make(self.coeffs, N)

    def egf_counts(self) -> list[int]:
        """n! c_n, asserted integral."""
        out = []
        f = 1
        for n, c in enumerate(self.coeffs):
            if n:
                f *= n
            v = c * f
            if v.denominator != 1:
                raise ValueError(f"coefficient {n} is not an integer count")
            out.append(int(v))
        return out
