"""Phi_ell for prime ell from q-expansions of j.

The roots of Phi_ell(X, j(tau)) are j(ell*tau) and j((tau+b)/ell). Their power sums are
Laurent series in q that we rewrite as polynomials in j, and Newton's identities turn
those into the coefficients in X. Works over Z (modulus None) or mod a prime p > ell+1.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np
import sympy

# int64 products stay exact while len * (p-1)^2 < 2^63; beyond that use Python ints
_INT64_P = 1 << 24


class _Ring:
    def __init__(self, modulus):
        self.m = modulus
        self.dtype = np.int64 if modulus and modulus < _INT64_P else object

    def arr(self, values):
        a = np.array(values, dtype=self.dtype)
        return a % self.m if self.m else a

    def red(self, a):
        return a % self.m if self.m else a

    def conv(self, a, b, n=None):
        if self.dtype is np.int64 and len(a) * len(b) > 0:
            # split to keep the accumulation below 2^63 for long inputs
            out = _conv_mod(a, b, self.m)
        else:
            out = self.red(np.convolve(a, b))
        return out if n is None else out[:n]


def _conv_mod(a, b, p):
    if min(len(a), len(b)) * (p - 1) ** 2 < (1 << 62):
        return np.convolve(a, b) % p
    s = 1 << 12
    a0, a1 = a % s, a // s
    return (np.convolve(a1, b) % p * s + np.convolve(a0, b)) % p


@lru_cache(maxsize=8)
def j_coefficients(N: int, modulus: int | None = None) -> tuple:
    """(c_{-1}, c_0, ..., c_{N}) of j = 1/q + 744 + 196884 q + ..."""
    R = _Ring(modulus)
    L = N + 2  # coefficients of q*j up to q^{N+1}
    e4 = R.arr([1] + [240 * int(sympy.divisor_sigma(n, 3)) for n in range(1, L)])
    e4_3 = R.conv(R.conv(e4, e4, L), e4, L)
    eta = R.arr([1] + [0] * (L - 1))
    for n in range(1, L):
        for _ in range(24):
            eta[n:] = eta[n:] - eta[:-n]
        eta = R.red(eta)
    # q*j = e4^3 / eta, eta has constant term 1
    out = R.arr([0] * L)
    for i in range(L):
        v = e4_3[i] - (eta[1 : i + 1] * out[i - 1 :: -1][:i]).sum() if i else e4_3[0]
        out[i] = R.red(v)
    return tuple(int(v) for v in out)


def modular_poly_coeffs(ell: int, modulus: int | None = None) -> dict:
    """Coefficients {(i, k): c} of Phi_ell(X, Y) = sum c X^i Y^k (symmetric, monic)."""
    if not sympy.isprime(ell):
        raise ValueError("prime level expected")
    if modulus is not None and modulus <= ell + 1:
        raise ValueError("modulus must exceed ell + 1")
    R = _Ring(modulus)
    top = ell * (ell + 1)
    qj = R.arr(j_coefficients(top, modulus))
    # P[d][i] = coefficient of q^(i-d) in j^d, i = 0..d
    P = [R.arr([1])]
    cur = P[0]
    for d in range(1, top + 1):
        cur = R.conv(cur, qj, top + 1)
        P.append(cur[: d + 1].copy())

    sums = []
    for k in range(1, ell + 2):
        n = k * ell
        S = R.arr([0] * (n + 1))  # S[e] = coefficient of q^(-e)
        jk = P[k]
        S[ell * np.arange(k, -1, -1)] += jk
        if k >= ell:
            S[1] += ell * jk[k - ell]
        S[0] += ell * jk[k]
        S = R.red(S)
        poly = R.arr([0] * (n + 1))
        for d in range(n, 0, -1):
            a = R.red(S[d])
            if a:
                poly[d] = a
                S[: d + 1] = R.red(S[: d + 1] - a * P[d][::-1])
        poly[0] = R.red(S[0])
        sums.append(poly)

    # Newton: k e_k = sum_{i=1..k} (-1)^(i-1) e_{k-i} s_i
    es = [R.arr([1])]
    for k in range(1, ell + 2):
        acc = R.arr([0] * (k * ell + 1))
        for i in range(1, k + 1):
            term = R.conv(es[k - i], sums[i - 1])
            acc[: len(term)] = acc[: len(term)] + (term if i % 2 else -term)
        if modulus:
            ek = R.red(acc * pow(k, -1, modulus))
        else:
            assert all(v % k == 0 for v in acc)
            ek = acc // k
        es.append(ek)
    coeffs = {}
    for k, ek in enumerate(es):
        sign = -1 if k % 2 else 1
        for i, v in enumerate(ek):
            v = int(sign * v)
            if modulus:
                v %= modulus
            if v:
                coeffs[(ell + 1 - k, i)] = v
    return coeffs
