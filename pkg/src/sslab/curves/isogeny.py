"""ell-isogenous neighbours by explicit kernel enumeration and Velu's formulas.

Kernels are found from the irreducible factors of the ell-division polynomial
(x^3 + Ax + B for ell = 2) over F_{p^2}. For a factor h we work in L = F_{p^2}[X]/h,
walk the multiples of the point with x-coordinate X, and read off the codomain
j-invariant alpha in L. The Frobenius orbit of that subgroup contributes
prod_i (Y - sigma^i(alpha)) to the neighbour polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..algebra.field import FieldCtx
from ..algebra.poly import UniPoly, factor, pmonic, pmul, roots_list, trim
from ..errors import EllEqualsP, ExtensionTooLarge
from .division import division_family
from .ext import ExtField
from .models import curve_from_j

DEGREE_BOUND = 60


@dataclass(frozen=True)
class NeighborMultiset:
    """The ell+1 codomain j-invariants, as a monic polynomial and its F_{p^2} roots."""

    ell: int
    j: int
    poly: UniPoly
    rational: tuple  # ((root, multiplicity), ...) in canonical order

    def __len__(self) -> int:
        return self.poly.degree

    def values(self) -> list[int]:
        """Rational neighbours expanded by multiplicity."""
        return [r for r, m in self.rational for _ in range(m)]


def _x_multiples(L: ExtField, A, B, r: int):
    X = L.gen
    xs = [X]
    if r == 1:
        return xs
    F = L.F
    # doubling
    x2 = L.mul(X, X)
    num = L.sub(L.mul(L.sub(x2, L.const(A)), L.sub(x2, L.const(A))), L.scale(X, F.mul(F.int(8), B)))
    den = L.scale(L.add(L.add(L.mul(x2, X), L.scale(X, A)), L.const(B)), F.int(4))
    xs.append(L.div(num, den))
    for _ in range(2, r):
        xk, xprev = xs[-1], xs[-2]
        s = L.add(L.mul(L.add(xk, X), L.add(L.mul(xk, X), L.const(A))), L.const(F.mul(F.int(2), B)))
        diff = L.sub(xk, X)
        xs.append(L.sub(L.div(L.scale(s, F.int(2)), L.mul(diff, diff)), xprev))
    return xs


def _codomain_j(L: ExtField, A, B, xs, two_torsion: bool):
    F = L.F
    t, w = [], []
    for x in xs:
        x2 = L.mul(x, x)
        if two_torsion:
            tq = L.add(L.scale(x2, F.int(3)), L.const(A))
            t = L.add(t, tq)
            w = L.add(w, L.mul(x, tq))
        else:
            t = L.add(t, L.add(L.scale(x2, F.int(6)), L.const(F.mul(F.int(2), A))))
            x3 = L.mul(x2, x)
            w = L.add(w, L.add(L.add(L.scale(x3, F.int(10)), L.scale(x, F.mul(F.int(6), A))), L.const(F.mul(F.int(4), B))))
    A1 = L.sub(L.const(A), L.scale(t, F.int(5)))
    B1 = L.sub(L.const(B), L.scale(w, F.int(7)))
    a3 = L.scale(L.mul(L.mul(A1, A1), A1), F.int(4))
    den = L.add(a3, L.scale(L.mul(B1, B1), F.int(27)))
    return L.div(L.scale(a3, F.int(1728)), den)


def _solve(F, cols, rhs):
    """Solve sum_i c_i cols[i] = rhs (consistent, full column rank)."""
    k = len(cols)
    d = len(rhs)
    M = [[cols[i][r] for i in range(k)] + [rhs[r]] for r in range(d)]
    piv_rows = []
    row = 0
    for col in range(k):
        pr = next((r for r in range(row, d) if M[r][col]), None)
        if pr is None:
            raise ArithmeticError("rank-deficient minimal polynomial system")
        M[row], M[pr] = M[pr], M[row]
        inv = F.inv(M[row][col])
        M[row] = [F.mul(v, inv) for v in M[row]]
        for r in range(d):
            if r != row and M[r][col]:
                f = M[r][col]
                M[r] = [F.sub(a, F.mul(f, b)) for a, b in zip(M[r], M[row])]
        piv_rows.append(row)
        row += 1
    return [M[r][k] for r in piv_rows]


def _orbit_poly(L: ExtField, alpha, e: int):
    """prod_{i<e} (Y - sigma^i(alpha)) over the base field."""
    F = L.F
    cur, k = L.frob(alpha), 1
    while cur != alpha:
        cur = L.frob(cur)
        k += 1
    if k == 1:
        mp = [F.neg(alpha[0]) if alpha else 0, 1]
    else:
        powers = [L.vector([1])]
        acc = [1]
        for _ in range(k):
            acc = L.mul(acc, alpha)
            powers.append(L.vector(acc))
        c = _solve(F, powers[:k], [F.neg(v) for v in powers[k]])
        mp = c + [1]
    out = [1]
    for _ in range(e // k):
        out = pmul(F, out, mp)
    return out


def _in_orbit(L, X, xs, d):
    cur = X
    for e in range(1, d + 1):
        cur = L.frob(cur)
        if cur in xs:
            return e
    raise ArithmeticError("Frobenius orbit never returned to the kernel")


def _is_root(L, h, x):
    acc = []
    for c in reversed(h):
        acc = L.add(L.mul(acc, x), L.const(c))
    return not acc


def velu_neighbors(j: int, ell: int, ctx: FieldCtx, degree_bound: int = DEGREE_BOUND, rng=None) -> NeighborMultiset:
    """The psi(ell) = ell+1 codomains of ell-isogenies from a curve with invariant j."""
    p = ctx.p
    if ell % p == 0:
        raise EllEqualsP("isogeny degree equals the characteristic")
    F = ctx.fp2
    E = curve_from_j(ctx, j)
    A, B = E.params
    if ell == 2:
        kpoly, r = trim([B, A, 0, 1]), 1
    else:
        fam, _ = division_family(E, ell)
        kpoly, r = fam[ell], (ell - 1) // 2
    remaining = [h for h, _ in factor(F, kpoly, rng)]
    polys = []
    while remaining:
        h = remaining.pop(0)
        d = len(h) - 1
        if d > degree_bound:
            raise ExtensionTooLarge(f"{ell}-torsion needs an extension of degree {d} > {degree_bound}")
        L = ExtField(F, h)
        xs = _x_multiples(L, A, B, r)
        alpha = _codomain_j(L, A, B, xs, ell == 2)
        e = _in_orbit(L, L.gen, xs, d) if d > 1 else 1
        polys.append(_orbit_poly(L, alpha, e))
        remaining = [g for g in remaining if not any(_is_root(L, g, x) for x in xs)]
    out = [1]
    for q in polys:
        out = pmul(F, out, q)
    out = pmonic(F, out)
    if len(out) - 1 != ell + 1:
        raise ArithmeticError(f"found {len(out) - 1} neighbours, expected {ell + 1}")
    rational = tuple(roots_list(F, out, rng))
    return NeighborMultiset(ell, F.coerce(j), UniPoly(F, tuple(out)), rational)
