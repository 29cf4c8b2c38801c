"""Prime fields and their quadratic extensions.

Elements are plain Python ints. F_p elements are 0..p-1; an element a + b*sqrt(delta)
of F_{p^2} is encoded as a + b*p, so F_p sits inside F_{p^2} as the ints below p and
sorting encodings gives the canonical order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np
import sympy

from ..errors import CompositeModulus, TwoNotSupported

# numpy fast paths need (p-1)^3 to fit in int64
NUMPY_P_LIMIT = 1 << 20


class PrimeField:
    degree = 1

    def __init__(self, p: int):
        self.p = p
        self.q = p

    def __repr__(self):
        return f"F_{self.p}"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))

    def add(self, a, b):
        r = a + b
        return r - self.p if r >= self.p else r

    def sub(self, a, b):
        r = a - b
        return r + self.p if r < 0 else r

    def neg(self, a):
        return self.p - a if a else 0

    def mul(self, a, b):
        return a * b % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p)

    def div(self, a, b):
        return a * self.inv(b) % self.p

    def pow(self, a, e):
        if e < 0:
            return pow(self.inv(a), -e, self.p)
        return pow(a, e, self.p)

    def frob(self, a):
        return a

    def coerce(self, a):
        return a % self.p

    def int(self, n):
        return n % self.p

    def contains(self, a) -> bool:
        return 0 <= a < self.p

    def elements(self):
        return range(self.p)

    def random(self, rng: np.random.Generator):
        return int(rng.integers(0, self.p))

    def is_square(self, a) -> bool:
        a %= self.p
        return a == 0 or pow(a, (self.p - 1) // 2, self.p) == 1


class QuadField:
    """F_p(sqrt(delta)) with the a + b*p encoding."""

    degree = 2

    def __init__(self, p: int, delta: int):
        self.p = p
        self.q = p * p
        self.delta = delta
        self.sqrt_delta = p  # encoding of 0 + 1*sqrt(delta)

    def __repr__(self):
        return f"F_{self.p}^2"

    def __eq__(self, other):
        return isinstance(other, QuadField) and other.p == self.p and other.delta == self.delta

    def __hash__(self):
        return hash(("Fp2", self.p, self.delta))

    def encode(self, a, b=0):
        p = self.p
        return a % p + (b % p) * p

    def decode(self, x):
        b, a = divmod(x, self.p)
        return a, b

    def add(self, x, y):
        p = self.p
        xb, xa = divmod(x, p)
        yb, ya = divmod(y, p)
        a = xa + ya
        b = xb + yb
        if a >= p:
            a -= p
        if b >= p:
            b -= p
        return a + b * p

    def sub(self, x, y):
        p = self.p
        xb, xa = divmod(x, p)
        yb, ya = divmod(y, p)
        a = xa - ya
        b = xb - yb
        if a < 0:
            a += p
        if b < 0:
            b += p
        return a + b * p

    def neg(self, x):
        p = self.p
        xb, xa = divmod(x, p)
        return (-xa) % p + ((-xb) % p) * p

    def mul(self, x, y):
        p = self.p
        if x < p and y < p:
            return x * y % p
        xb, xa = divmod(x, p)
        yb, ya = divmod(y, p)
        return (xa * ya + self.delta * xb * yb) % p + ((xa * yb + xb * ya) % p) * p

    def norm(self, x) -> int:
        p = self.p
        xb, xa = divmod(x, p)
        return (xa * xa - self.delta * xb * xb) % p

    def inv(self, x):
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        p = self.p
        xb, xa = divmod(x, p)
        n = pow((xa * xa - self.delta * xb * xb) % p, -1, p)
        return xa * n % p + ((-xb * n) % p) * p

    def div(self, x, y):
        return self.mul(x, self.inv(y))

    def pow(self, x, e):
        if e < 0:
            x, e = self.inv(x), -e
        r = 1
        while e:
            if e & 1:
                r = self.mul(r, x)
            e >>= 1
            if e:
                x = self.mul(x, x)
        return r

    def frob(self, x):
        p = self.p
        xb, xa = divmod(x, p)
        return xa + ((-xb) % p) * p

    def coerce(self, x):
        # encodings pass through; any other integer is read in the prime subfield
        return x if 0 <= x < self.q else x % self.p

    def int(self, n):
        """The image of the integer n (not an encoding)."""
        return n % self.p

    def contains(self, x) -> bool:
        return 0 <= x < self.q

    def elements(self):
        return range(self.q)

    def random(self, rng: np.random.Generator):
        return int(rng.integers(0, self.q))

    def is_square(self, x) -> bool:
        # x is a square in F_{p^2} iff its norm is a square in F_p
        n = self.norm(x)
        return n == 0 or pow(n, (self.p - 1) // 2, self.p) == 1

    # vectorized helpers on encoded int64 arrays (p < NUMPY_P_LIMIT)
    def vsplit(self, x):
        x = np.asarray(x, dtype=np.int64)
        return x % self.p, x // self.p

    def vjoin(self, a, b):
        return a + b * self.p

    def vmul_parts(self, xa, xb, ya, yb):
        p = self.p
        return (xa * ya + self.delta * (xb * yb % p)) % p, (xa * yb + xb * ya) % p


@dataclass(frozen=True)
class FieldCtx:
    p: int
    delta: int
    fp: PrimeField = field(init=False, repr=False, compare=False)
    fp2: QuadField = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "fp", PrimeField(self.p))
        object.__setattr__(self, "fp2", QuadField(self.p, self.delta))

    @cached_property
    def sqrt_delta(self) -> int:
        return self.p

    def encode(self, a: int, b: int = 0) -> int:
        return self.fp2.encode(a, b)

    def decode(self, x: int) -> tuple[int, int]:
        return self.fp2.decode(x)


def _smallest_nonsquare(p: int) -> int:
    d = 2
    while pow(d, (p - 1) // 2, p) != p - 1:
        d += 1
    return d


def field_make(p: int) -> FieldCtx:
    if p == 2:
        raise TwoNotSupported("characteristic 2 is not supported")
    if p < 2 or not sympy.isprime(p):
        raise CompositeModulus(f"{p} is not prime")
    delta = p - 1 if p % 4 == 3 else _smallest_nonsquare(p)
    return FieldCtx(p, delta)
