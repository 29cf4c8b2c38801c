"""Dense univariate polynomials over PrimeField / QuadField.

Coefficient lists run lowest degree first and are kept trimmed; the zero polynomial
is the empty list. The list-level functions do the work, ``UniPoly`` wraps them.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import BothZero, DuplicateNode, ZeroPolynomial
from .field import NUMPY_P_LIMIT, PrimeField, QuadField

Field = PrimeField | QuadField

SCAN_LIMIT = 1 << 16
# prime-field scans are vectorized, so allow them up to this many element-steps
SCAN_WORK = 5 * 10**7


def trim(c: list) -> list:
    while c and c[-1] == 0:
        c.pop()
    return c


def deg(c) -> int:
    return len(c) - 1


def padd(F, a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    add = F.add
    for i, x in enumerate(b):
        out[i] = add(out[i], x)
    return trim(out)


def psub(F, a, b):
    out = list(a) + [0] * max(0, len(b) - len(a))
    sub = F.sub
    for i, x in enumerate(b):
        out[i] = sub(out[i], x)
    return trim(out)


def pneg(F, a):
    return [F.neg(x) for x in a]


def pscale(F, a, s):
    if s == 0:
        return []
    mul = F.mul
    return trim([mul(x, s) for x in a])


def _np_ok(F, n):
    return F.p < NUMPY_P_LIMIT and n * (F.p - 1) ** 2 < (1 << 62)


def _conv_fp(p, a, b):
    r = np.convolve(np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64)) % p
    return r


def pmul(F, a, b):
    if not a or not b:
        return []
    na, nb = len(a), len(b)
    if na * nb > 256 and _np_ok(F, min(na, nb)):
        p = F.p
        if F.degree == 1:
            return trim(_conv_fp(p, a, b).tolist())
        A = np.asarray(a, dtype=np.int64)
        B = np.asarray(b, dtype=np.int64)
        aa, ab = A % p, A // p
        ba, bb = B % p, B // p
        re = (_conv_fp(p, aa, ba) + F.delta * _conv_fp(p, ab, bb)) % p
        im = (_conv_fp(p, aa, bb) + _conv_fp(p, ab, ba)) % p
        return trim((re + im * p).tolist())
    out = [0] * (na + nb - 1)
    mul, add = F.mul, F.add
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] = add(out[i + j], mul(x, y))
    return trim(out)


def pdivmod(F, a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if len(a) < len(b):
        return [], list(a)
    r = list(a)
    db = len(b) - 1
    inv_lc = F.inv(b[-1])
    q = [0] * (len(a) - db)
    mul, sub = F.mul, F.sub
    for k in range(len(a) - 1, db - 1, -1):
        c = r[k]
        if c == 0:
            continue
        c = mul(c, inv_lc)
        q[k - db] = c
        off = k - db
        for i in range(db):
            if b[i]:
                r[off + i] = sub(r[off + i], mul(c, b[i]))
        r[k] = 0
    return trim(q), trim(r[:db])


def pmod(F, a, b):
    return pdivmod(F, a, b)[1]


def pmonic(F, a):
    if not a or a[-1] == 1:
        return list(a)
    return pscale(F, a, F.inv(a[-1]))


def pgcd(F, a, b):
    a, b = trim(list(a)), trim(list(b))
    while b:
        a, b = b, pmod(F, a, b)
    return pmonic(F, a)


def pderiv(F, a):
    p = F.p
    return trim([F.mul(x, i % p) for i, x in enumerate(a)][1:])


def peval(F, a, x):
    mul, add = F.mul, F.add
    r = 0
    for c in reversed(a):
        r = add(mul(r, x), c)
    return r


def ppowmod(F, a, e, m):
    r = [1]
    a = pmod(F, a, m)
    while e:
        if e & 1:
            r = pmod(F, pmul(F, r, a), m)
        e >>= 1
        if e:
            a = pmod(F, pmul(F, a, a), m)
    return r


def resultant_uni(F, f, g):
    """Res(f, g) = lc(f)^deg g * prod g(roots of f), via the Euclidean remainder sequence."""
    f, g = trim(list(f)), trim(list(g))
    if not f or not g:
        return 0
    res = 1
    while True:
        m, n = len(f) - 1, len(g) - 1
        if n == 0:
            return F.mul(res, F.pow(g[0], m))
        if m == 0:
            return F.mul(res, F.pow(f[0], n))
        r = pmod(F, f, g)
        if not r:
            return 0
        if (m * n) & 1:
            res = F.neg(res)
        res = F.mul(res, F.pow(g[-1], m - (len(r) - 1)))
        f, g = g, r


def resultant_formal(F, f, g, df, dg):
    """Resultant with f, g read as having formal degrees df, dg (leading zeros allowed)."""
    f, g = trim(list(f)), trim(list(g))
    af, ag = len(f) - 1, len(g) - 1
    if not f or not g:
        return 0
    if af == df and ag == dg:
        return resultant_uni(F, f, g)
    if af < df and ag < dg:
        return 0
    if af == df:
        # Res_{df,dg}(f, g) = lc(f)^(dg-ag) Res(f, g)
        return F.mul(F.pow(f[-1], dg - ag), resultant_uni(F, f, g))
    # g has full degree: swap with sign (-1)^(df*dg)
    r = F.mul(F.pow(g[-1], df - af), resultant_uni(F, g, f))
    if (df * dg) & 1:
        r = F.neg(r)
    return r


def interpolate_lists(F, xs, ys):
    """Newton divided differences; returns the coefficient list."""
    n = len(xs)
    if len(set(xs)) != n:
        raise DuplicateNode("interpolation nodes must be distinct")
    if n == 0:
        return []
    sub, mul, inv = F.sub, F.mul, F.inv
    coef = list(ys)
    for k in range(1, n):
        for i in range(n - 1, k - 1, -1):
            coef[i] = mul(sub(coef[i], coef[i - 1]), inv(sub(xs[i], xs[i - k])))
    # expand Newton form
    out = [coef[-1]]
    for i in range(n - 2, -1, -1):
        # out = out * (x - xs[i]) + coef[i]
        nxt = [0] * (len(out) + 1)
        for j, c in enumerate(out):
            nxt[j + 1] = F.add(nxt[j + 1], c)
            nxt[j] = F.sub(nxt[j], mul(c, xs[i]))
        nxt[0] = F.add(nxt[0], coef[i])
        out = nxt
    return trim(out)


# ---------------------------------------------------------------- factoring

def frobenius_matrix(F, f):
    """Rows: x^(q*k) mod f for k < deg f, as lists padded to deg f."""
    d = len(f) - 1
    xq = ppowmod(F, [0, 1], F.q, f)
    rows = [[1] + [0] * (d - 1)]
    cur = [1]
    for _ in range(1, d):
        cur = pmod(F, pmul(F, cur, xq), f)
        rows.append(cur + [0] * (d - len(cur)))
    return rows


def apply_frob(F, M, a):
    """a(x)^q mod f given the Frobenius matrix M (c^q = c for c in F)."""
    d = len(M)
    out = [0] * d
    mul, add = F.mul, F.add
    for k, c in enumerate(a):
        if c == 0:
            continue
        row = M[k]
        for i in range(d):
            if row[i]:
                out[i] = add(out[i], mul(c, row[i]))
    return trim(out)


def _pth_root(F, a):
    # a has only exponents divisible by p
    p = F.p
    return [F.pow(c, F.q // p) for c in a[::p]]


def squarefree(F, f):
    """Yun-style decomposition: list of (g, i) with f = lc * prod g^i, g squarefree monic."""
    f = pmonic(F, f)
    out = []
    if len(f) <= 1:
        return out
    d = pderiv(F, f)
    if not d:
        for g, i in squarefree(F, _pth_root(F, f)):
            out.append((g, i * F.p))
        return out
    c = pgcd(F, f, d)
    w = pdivmod(F, f, c)[0]
    i = 1
    while len(w) > 1:
        y = pgcd(F, w, c)
        z = pdivmod(F, w, y)[0]
        if len(z) > 1:
            out.append((z, i))
        i += 1
        w = y
        c = pdivmod(F, c, y)[0]
    if len(c) > 1:
        for g, j in squarefree(F, _pth_root(F, c)):
            out.append((g, j * F.p))
    return out


def distinct_degree(F, f):
    """f squarefree monic -> list of (g, d): g is the product of the degree-d factors."""
    out = []
    if len(f) <= 1:
        return out
    M = frobenius_matrix(F, f)
    h = [0, 1]
    d = 0
    rest = f
    while len(rest) - 1 >= 2 * (d + 1):
        d += 1
        h = apply_frob(F, M, h)
        g = pgcd(F, rest, psub(F, h, [0, 1]))
        if len(g) > 1:
            out.append((g, d))
            rest = pdivmod(F, rest, g)[0]
            h = pmod(F, h, rest)
            # refreshing M for the smaller modulus keeps apply_frob valid
            if len(rest) > 1:
                M = frobenius_matrix(F, rest)
    if len(rest) > 1:
        out.append((rest, len(rest) - 1))
    return out


def equal_degree(F, f, d, rng: np.random.Generator):
    """Split squarefree monic f whose irreducible factors all have degree d."""
    n = len(f) - 1
    if n == d:
        return [f]
    M = frobenius_matrix(F, f)
    half = (F.q - 1) // 2
    while True:
        h = trim([F.random(rng) for _ in range(n)])
        if len(h) <= 1:
            continue
        # trace map to F_q, then the quadratic character
        t, cur = list(h), list(h)
        for _ in range(d - 1):
            cur = apply_frob(F, M, cur)
            t = padd(F, t, cur)
        s = psub(F, ppowmod(F, t, half, f), [1])
        g = pgcd(F, f, s)
        if 1 < len(g) < len(f):
            return equal_degree(F, g, d, rng) + equal_degree(F, pdivmod(F, f, g)[0], d, rng)


def factor(F, f, rng=None):
    """Irreducible factorization: sorted list of (monic factor, multiplicity)."""
    if not trim(list(f)):
        raise ZeroPolynomial("cannot factor the zero polynomial")
    rng = rng if rng is not None else np.random.default_rng(0)
    out = []
    for g, i in squarefree(F, f):
        for h, d in distinct_degree(F, g):
            for e in equal_degree(F, h, d, rng):
                out.append((tuple(e), i))
    out.sort(key=lambda t: (len(t[0]), t[0][::-1]))
    return [(list(e), i) for e, i in out]


def _scan_roots(F, f):
    """All roots of f in F by vectorized evaluation."""
    p = F.p
    if F.degree == 1:
        xs = np.arange(p, dtype=np.int64)
        acc = np.zeros(p, dtype=np.int64)
        for c in reversed(f):
            acc = (acc * xs + c) % p
        return np.nonzero(acc == 0)[0].tolist()
    xs = np.arange(F.q, dtype=np.int64)
    xa, xb = xs % p, xs // p
    ra = np.zeros(F.q, dtype=np.int64)
    rb = np.zeros(F.q, dtype=np.int64)
    for c in reversed(f):
        ca, cb = c % p, c // p
        ra, rb = F.vmul_parts(ra, rb, xa, xb)
        ra = (ra + ca) % p
        rb = (rb + cb) % p
    return np.nonzero((ra == 0) & (rb == 0))[0].tolist()


def _split_linear(F, f, rng):
    """f squarefree monic, product of distinct linear factors -> sorted roots."""
    if len(f) == 1:
        return []
    if F.q < SCAN_LIMIT and len(f) > 2:
        return _scan_roots(F, f)
    out = []
    stack = [f]
    half = (F.q - 1) // 2
    while stack:
        g = stack.pop()
        if len(g) == 2:
            out.append(F.neg(g[0]))
            continue
        while True:
            a = F.random(rng)
            s = psub(F, ppowmod(F, [a, 1], half, g), [1])
            h = pgcd(F, g, s)
            if 1 < len(h) < len(g):
                stack.append(h)
                stack.append(pdivmod(F, g, h)[0])
                break
    return sorted(out)


def roots_list(F, f, rng=None):
    """Roots of f (coefficients in F) lying in F, with multiplicities, sorted."""
    f = trim(list(f))
    if not f:
        raise ZeroPolynomial("zero polynomial has every element as a root")
    rng = rng if rng is not None else np.random.default_rng(0)
    if F.degree == 1 and len(f) > 2 and F.q * len(f) <= SCAN_WORK and F.p < NUMPY_P_LIMIT:
        return [(r, _multiplicity(F, f, r)) for r in _scan_roots(F, f)]
    out = []
    for g, i in squarefree(F, f):
        if len(g) == 2:
            lin = g
        else:
            xq = ppowmod(F, [0, 1], F.q, g)
            lin = pgcd(F, g, psub(F, xq, [0, 1]))
        for r in _split_linear(F, lin, rng):
            out.append((r, i))
    out.sort()
    return out


# ---------------------------------------------------------------- wrapper

@dataclass(frozen=True)
class UniPoly:
    field: Field
    coeffs: tuple

    @classmethod
    def make(cls, field: Field, coeffs) -> "UniPoly":
        return cls(field, tuple(trim([field.coerce(int(c)) for c in coeffs])))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, x):
        return peval(self.field, self.coeffs, x)

    def _wrap(self, c):
        return UniPoly(self.field, tuple(c))

    def __add__(self, o):
        return self._wrap(padd(self.field, self.coeffs, o.coeffs))

    def __sub__(self, o):
        return self._wrap(psub(self.field, self.coeffs, o.coeffs))

    def __mul__(self, o):
        if isinstance(o, UniPoly):
            return self._wrap(pmul(self.field, self.coeffs, o.coeffs))
        return self._wrap(pscale(self.field, self.coeffs, self.field.coerce(o)))

    def __divmod__(self, o):
        q, r = pdivmod(self.field, self.coeffs, o.coeffs)
        return self._wrap(q), self._wrap(r)

    def __mod__(self, o):
        return self._wrap(pmod(self.field, self.coeffs, o.coeffs))

    def __floordiv__(self, o):
        return self._wrap(pdivmod(self.field, self.coeffs, o.coeffs)[0])

    def monic(self):
        return self._wrap(pmonic(self.field, self.coeffs))

    def deriv(self):
        return self._wrap(pderiv(self.field, self.coeffs))

    def over(self, field: Field) -> "UniPoly":
        """Same coefficients viewed in a larger field (F_p ints are valid F_{p^2} codes)."""
        return UniPoly(field, self.coeffs)

    def in_base_field(self) -> bool:
        return all(c < self.field.p for c in self.coeffs)


def poly_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    if a.is_zero() and b.is_zero():
        raise BothZero("gcd(0, 0) is undefined")
    return UniPoly(a.field, tuple(pgcd(a.field, a.coeffs, b.coeffs)))


def roots(f: UniPoly, field: Field | None = None, rng=None) -> list[tuple[int, int]]:
    """Roots in ``field`` (default f's own field), ordered by encoding, with multiplicity."""
    F = f.field if field is None else field
    if f.is_zero():
        raise ZeroPolynomial("zero polynomial")
    c = list(f.coeffs)
    if F.degree == 1 and f.field.degree == 2 and not f.in_base_field():
        # F_p-roots of f0 + s*f1 are the common roots of f0 and f1
        p = F.p
        f0 = trim([x % p for x in c])
        f1 = trim([x // p for x in c])
        g = pgcd(F, f0, f1) if f0 or f1 else []
        if len(g) <= 1:
            return []
        rts = roots_list(F, g, rng)
        return [(r, _multiplicity(f.field, c, r)) for r, _ in rts]
    return roots_list(F, c, rng)


def _multiplicity(F, c, r):
    m = 0
    lin = [F.neg(r), 1]
    while True:
        q, rem = pdivmod(F, c, lin)
        if rem:
            return m
        m += 1
        c = q


def interpolate(points, field: Field) -> UniPoly:
    xs = [field.coerce(x) for x, _ in points]
    ys = [field.coerce(y) for _, y in points]
    return UniPoly(field, tuple(interpolate_lists(field, xs, ys)))
