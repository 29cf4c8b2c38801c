"""Dense bivariate polynomials over F_p stored as 2-D integer arrays.

Entry ``c[i, j]`` is the coefficient of X^i Y^j. Arrays use int64 while p is small
enough for exact numpy products, and Python-int object arrays beyond that.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import DegenerateInput
from .field import NUMPY_P_LIMIT, PrimeField, QuadField
from .poly import (
    UniPoly,
    interpolate_lists,
    resultant_formal,
    trim,
)


def _dtype(p):
    return np.int64 if p < NUMPY_P_LIMIT else object


def _trim2(c: np.ndarray) -> np.ndarray:
    rows = np.nonzero(np.any(c != 0, axis=1))[0]
    cols = np.nonzero(np.any(c != 0, axis=0))[0]
    if rows.size == 0:
        return np.zeros((0, 0), dtype=c.dtype)
    return c[: rows[-1] + 1, : cols[-1] + 1]


@dataclass(frozen=True, eq=False)
class BiPoly:
    p: int
    coeffs: np.ndarray

    @classmethod
    def make(cls, p: int, coeffs) -> "BiPoly":
        arr = np.array(coeffs, dtype=object)
        if arr.ndim != 2:
            arr = arr.reshape(len(arr), -1)
        arr = np.array([[int(v) % p for v in row] for row in arr], dtype=_dtype(p)).reshape(arr.shape)
        return cls(p, _trim2(arr))

    @classmethod
    def from_terms(cls, p: int, terms: dict) -> "BiPoly":
        if not terms:
            return cls(p, np.zeros((0, 0), dtype=_dtype(p)))
        dx = max(i for i, _ in terms) + 1
        dy = max(j for _, j in terms) + 1
        arr = np.zeros((dx, dy), dtype=_dtype(p))
        for (i, j), c in terms.items():
            arr[i, j] = int(c) % p
        return cls(p, _trim2(arr))

    def __eq__(self, other):
        return (
            isinstance(other, BiPoly)
            and other.p == self.p
            and other.coeffs.shape == self.coeffs.shape
            and bool(np.all(other.coeffs == self.coeffs))
        )

    def __hash__(self):
        return hash((self.p, self.coeffs.shape, tuple(int(v) for v in self.coeffs.ravel())))

    @property
    def deg_x(self) -> int:
        return self.coeffs.shape[0] - 1

    @property
    def deg_y(self) -> int:
        return self.coeffs.shape[1] - 1

    def degree(self, var: int) -> int:
        return self.coeffs.shape[var] - 1

    def total_degree(self) -> int:
        i, j = np.nonzero(self.coeffs)
        return int((i + j).max()) if i.size else -1

    def is_zero(self) -> bool:
        return self.coeffs.size == 0

    def is_symmetric(self) -> bool:
        c = self.coeffs
        return c.shape[0] == c.shape[1] and bool(np.all(c == c.T))

    def swap(self) -> "BiPoly":
        return BiPoly(self.p, self.coeffs.T.copy())

    def terms(self):
        for i, j in zip(*np.nonzero(self.coeffs)):
            yield int(i), int(j), int(self.coeffs[i, j])

    def __call__(self, x, y, field=None):
        """Evaluate at a point of F_p or F_{p^2} (encoded ints)."""
        F = field or (QuadField(self.p, _delta_for(self.p)) if max(x, y) >= self.p else PrimeField(self.p))
        return self.specialize(0, x, F)(y)

    def specialize(self, var: int, value: int, field) -> UniPoly:
        """Substitute ``value`` for variable ``var`` (0 = X, 1 = Y); polynomial in the other."""
        c = self.coeffs if var == 0 else self.coeffs.T
        if c.size == 0:
            return UniPoly(field, ())
        p = self.p
        n = c.shape[0]
        if value < p:
            pw = np.empty(n, dtype=object)
            acc = 1
            for i in range(n):
                pw[i] = acc
                acc = acc * value % p
            if c.dtype == np.int64:
                vals = (c.T @ pw.astype(np.int64)) % p if n * (p - 1) ** 2 < (1 << 62) else (c.T.astype(object) @ pw) % p
            else:
                vals = (c.T @ pw) % p
            return UniPoly(field, tuple(trim([int(v) for v in vals])))
        # F_{p^2} value: split powers into base-field parts
        pa = np.empty(n, dtype=object)
        pb = np.empty(n, dtype=object)
        acc = 1
        for i in range(n):
            pb[i], pa[i] = divmod(acc, p)
            acc = field.mul(acc, value)
        if c.dtype == np.int64 and n * (p - 1) ** 2 < (1 << 62):
            ra = (c.T @ pa.astype(np.int64)) % p
            rb = (c.T @ pb.astype(np.int64)) % p
        else:
            co = c.T.astype(object)
            ra = (co @ pa) % p
            rb = (co @ pb) % p
        return UniPoly(field, tuple(trim([int(a) + int(b) * p for a, b in zip(ra, rb)])))

    def __add__(self, o):
        return _binop(self, o, 1)

    def __sub__(self, o):
        return _binop(self, o, -1)

    def __mul__(self, o):
        return BiPoly(self.p, _trim2(mul2(self.coeffs, o.coeffs, self.p)))


def _delta_for(p):
    from .field import field_make

    return field_make(p).delta


def _binop(a: BiPoly, b: BiPoly, sign: int) -> BiPoly:
    sx = max(a.coeffs.shape[0], b.coeffs.shape[0])
    sy = max(a.coeffs.shape[1], b.coeffs.shape[1])
    out = np.zeros((sx, sy), dtype=_dtype(a.p))
    out[: a.coeffs.shape[0], : a.coeffs.shape[1]] += a.coeffs
    out[: b.coeffs.shape[0], : b.coeffs.shape[1]] += sign * b.coeffs
    return BiPoly(a.p, _trim2(out % a.p))


def mul2(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """2-D convolution mod p by shifted accumulation over the smaller operand."""
    if a.size == 0 or b.size == 0:
        return np.zeros((0, 0), dtype=_dtype(p))
    if a.size > b.size:
        a, b = b, a
    out = np.zeros((a.shape[0] + b.shape[0] - 1, a.shape[1] + b.shape[1] - 1), dtype=_dtype(p))
    for i, j in zip(*np.nonzero(a)):
        out[i : i + b.shape[0], j : j + b.shape[1]] += a[i, j] * b
        out[i : i + b.shape[0], j : j + b.shape[1]] %= p
    return out


def interpolate_consecutive_fp(ys, p: int) -> list:
    """Interpolate through (0, ys[0]), ..., (n-1, ys[n-1]) over F_p, n <= p."""
    n = len(ys)
    if n == 0:
        return []
    if p >= NUMPY_P_LIMIT:
        return interpolate_lists(PrimeField(p), list(range(n)), list(ys))
    c = np.array(ys, dtype=np.int64) % p
    for k in range(1, n):
        ik = pow(k, -1, p)
        c[k:] = ((c[k:] - c[k - 1 : -1]) % p) * ik % p
    out = np.array([c[-1]], dtype=np.int64)
    for i in range(n - 2, -1, -1):
        nxt = np.zeros(out.size + 1, dtype=np.int64)
        nxt[1:] = out
        nxt[:-1] = (nxt[:-1] - i * out) % p
        nxt[0] = (nxt[0] + c[i]) % p
        out = nxt
    return trim(out.tolist())


def resultant_degree_bound(a: BiPoly, b: BiPoly, eliminate: int) -> int:
    keep = 1 - eliminate
    bound = a.degree(eliminate) * b.degree(keep) + a.degree(keep) * b.degree(eliminate)
    return min(bound, a.total_degree() * b.total_degree())


def resultant_at(a: BiPoly, b: BiPoly, eliminate: int, value: int, field) -> int:
    keep = 1 - eliminate
    fa = a.specialize(keep, value, field)
    fb = b.specialize(keep, value, field)
    return resultant_formal(field, fa.coeffs, fb.coeffs, a.degree(eliminate), b.degree(eliminate))


def resultant(a: BiPoly, b: BiPoly, eliminate: int, ctx=None) -> UniPoly:
    """Res over variable ``eliminate`` as a polynomial in the other variable, over F_p.

    Evaluation at bound+1 nodes, a univariate remainder-sequence resultant at each,
    then interpolation.
    """
    if a.p != b.p:
        raise ValueError("operands over different fields")
    if a.is_zero() or b.is_zero() or a.degree(eliminate) < 1 or b.degree(eliminate) < 1:
        raise DegenerateInput("both operands need positive degree in the eliminated variable")
    p = a.p
    D = resultant_degree_bound(a, b, eliminate)
    n = D + 1
    Fp = PrimeField(p)
    if n <= p:
        ys = [resultant_at(a, b, eliminate, x, Fp) for x in range(n)]
        return UniPoly(Fp, tuple(interpolate_consecutive_fp(ys, p)))
    if ctx is None:
        from .field import field_make

        ctx = field_make(p)
    F2 = ctx.fp2
    if n > F2.q:
        raise DegenerateInput("degree bound exceeds the size of F_{p^2}")
    xs = list(range(n))
    ys = [resultant_at(a, b, eliminate, x, F2) for x in xs]
    c = interpolate_lists(F2, xs, ys)
    if any(v >= p for v in c):
        raise ArithmeticError("resultant of F_p polynomials left F_p")
    return UniPoly(Fp, tuple(c))
