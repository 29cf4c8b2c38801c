"""Building Phi_n mod p in process.

Prime levels: interpolate Phi_ell(X, Y) through Velu neighbour polynomials at ell+2
ordinary nodes, or read the q-expansion result. Composite levels: interpolate the
cyclic n-neighbour polynomials, which come from non-backtracking composition of prime
steps.
"""

from __future__ import annotations

import numpy as np
import sympy

from ..algebra.bipoly import BiPoly, interpolate_consecutive_fp
from ..algebra.field import FieldCtx, field_make
from ..algebra.poly import UniPoly, interpolate_lists, pdivmod, pmul, resultant_uni, trim
from ..curves.isogeny import velu_neighbors
from ..curves.models import is_supersingular
from ..errors import (
    CoefficientNotInBaseField,
    ExtensionTooLarge,
    MissingPrimeLevel,
    NotEnoughNodes,
)
from .qexp import modular_poly_coeffs
from .records import ModPolyRecord, apply_interp, identity_record, interp_matrix_fp, psi

SMALL_LEVEL_BOUND = 13


def interpolation_nodes(ctx: FieldCtx, count: int, reject=None):
    """Successive canonical encodings, skipping 0, 1728 and supersingular j (and ``reject``)."""
    F = ctx.fp2
    special = {0, F.int(1728)}
    out = []
    for j in range(F.q):
        if len(out) == count:
            break
        if j in special or is_supersingular(j, ctx):
            continue
        if reject is not None and reject(j):
            continue
        out.append(j)
    if len(out) < count:
        raise NotEnoughNodes(f"only {len(out)} usable nodes, need {count}")
    return out


def _interpolate_columns(ctx: FieldCtx, nodes, rows, level, provenance) -> ModPolyRecord:
    """rows[t] = Y-coefficients of Phi(nodes[t], Y); interpolate each column in X."""
    p = ctx.p
    D = psi(level)
    width = D + 1
    vals = [list(r) + [0] * (width - len(r)) for r in rows]
    if all(j < p for j in nodes) and all(v < p for r in vals for v in r):
        W = interp_matrix_fp(nodes, p)
        C = apply_interp(W, np.array(vals, dtype=np.int64), p)
        coeffs = np.asarray(C, dtype=np.int64)
    else:
        F = ctx.fp2
        cols = [interpolate_lists(F, list(nodes), [v[k] for v in vals]) for k in range(width)]
        if any(c >= p for col in cols for c in col):
            raise CoefficientNotInBaseField(f"Phi_{level} interpolation left F_p")
        coeffs = np.zeros((width, width), dtype=np.int64)
        for k, col in enumerate(cols):
            coeffs[: len(col), k] = col
    poly = BiPoly.make(p, coeffs)
    rec = ModPolyRecord(level, p, poly, provenance)
    if not poly.is_symmetric() or poly.deg_x != D:
        raise CoefficientNotInBaseField(f"Phi_{level} interpolation is inconsistent")
    return rec


def modular_poly_prime(ell: int, p: int, ctx: FieldCtx | None = None, bound: int = SMALL_LEVEL_BOUND) -> ModPolyRecord:
    """Phi_ell mod p by interpolation through Velu neighbour polynomials."""
    if not sympy.isprime(ell) or ell > bound:
        raise ValueError(f"prime level <= {bound} expected")
    ctx = ctx or field_make(p)
    need = ell + 2
    rows, nodes = [], []
    for j in interpolation_nodes(ctx, 4 * need + 16):
        if len(nodes) == need:
            break
        try:
            nb = velu_neighbors(j, ell, ctx)
        except ExtensionTooLarge:
            continue
        nodes.append(j)
        rows.append(list(nb.poly.coeffs))
    if len(nodes) < need:
        raise NotEnoughNodes(f"only {len(nodes)} usable nodes for level {ell}")
    return _interpolate_columns(ctx, nodes, rows, ell, "interpolated")


def modular_poly_qexp(ell: int, p: int) -> ModPolyRecord:
    """Phi_ell mod p from the q-expansion of j."""
    terms = modular_poly_coeffs(ell, p)
    return ModPolyRecord(ell, p, BiPoly.from_terms(p, terms), "qexp")


# ---------------------------------------------------------------- cyclic neighbours

def _step(ctx: FieldCtx, A, phi: BiPoly, ell: int):
    """prod over roots z of A of Phi_ell(z, Y), i.e. Res_Z(A(Z), Phi_ell(Z, Y)) for monic A."""
    p = ctx.p
    F = ctx.fp2
    D = (len(A) - 1) * (ell + 1)
    n = D + 1
    if n <= p:
        ys = range(n)
        Fp = ctx.fp
        vals = [resultant_uni(F, A, list(phi.specialize(1, y, Fp).coeffs)) for y in ys]
        re = interpolate_consecutive_fp([v % p for v in vals], p)
        im = interpolate_consecutive_fp([v // p for v in vals], p)
        m = max(len(re), len(im))
        re += [0] * (m - len(re))
        im += [0] * (m - len(im))
        return trim([a + b * p for a, b in zip(re, im)])
    ys = list(range(n))
    vals = [resultant_uni(F, A, list(phi.specialize(1, y, F).coeffs)) for y in ys]
    return interpolate_lists(F, ys, vals)


def _exact_div(F, a, b):
    q, r = pdivmod(F, a, b)
    if r:
        raise ArithmeticError("non-exact division in neighbour ladder")
    return q


def _pow(F, a, e):
    out = [1]
    for _ in range(e):
        out = pmul(F, out, a)
    return out


def cyclic_neighbors_poly(j: int, n: int, prime_records: dict, ctx: FieldCtx) -> UniPoly:
    """prod (Y - j') over the psi(n) cyclic n-isogenous j', as a monic polynomial."""
    F = ctx.fp2
    j = F.coerce(j)
    cur = [F.neg(j), 1]
    for ell, e in sorted(sympy.factorint(n).items()):
        if ell not in prime_records:
            raise MissingPrimeLevel(f"Phi_{ell} needed for level {n}")
        phi = prime_records[ell].poly
        prev, here = None, cur
        for k in range(1, e + 1):
            nxt = _step(ctx, here, phi, ell)
            if k == 2:
                nxt = _exact_div(F, nxt, _pow(F, prev, ell + 1))
            elif k > 2:
                nxt = _exact_div(F, nxt, _pow(F, prev, ell))
            prev, here = here, nxt
        cur = here
    return UniPoly(F, tuple(cur))


def cyclic_neighbors(j: int, n: int, prime_records: dict, ctx: FieldCtx):
    """The cyclic n-neighbour multiset: its polynomial and its F_{p^2} roots."""
    from ..algebra.poly import roots_list
    from ..curves.isogeny import NeighborMultiset

    poly = cyclic_neighbors_poly(j, n, prime_records, ctx)
    return NeighborMultiset(n, ctx.fp2.coerce(j), poly, tuple(roots_list(ctx.fp2, list(poly.coeffs))))


def modular_poly_composite(n: int, p: int, prime_records: dict, ctx: FieldCtx | None = None) -> ModPolyRecord:
    ctx = ctx or field_make(p)
    if n == 1:
        return identity_record(p)
    D = psi(n)
    nodes = interpolation_nodes(ctx, D + 1)
    rows = [list(cyclic_neighbors_poly(j, n, prime_records, ctx).coeffs) for j in nodes]
    return _interpolate_columns(ctx, nodes, rows, n, "composite-built")


def resultant_compose(a: ModPolyRecord, b: ModPolyRecord) -> BiPoly:
    """Res_Z(Phi_a(X, Z), Phi_b(Z, Y)); equals Phi_{ab} when gcd(a, b) = 1."""
    from ..algebra.bipoly import resultant

    p = a.p
    # variables: stack (X, Y) as rows of a trivariate evaluation at X = x
    D = psi(a.level) * psi(b.level)
    cols = []
    Fp = field_make(p).fp
    xs = list(range(D + 1))
    if D + 1 > p:
        raise NotEnoughNodes("prime too small for this cross-check")
    for x in xs:
        ax = a.poly.specialize(0, x, Fp)  # polynomial in Z
        A = BiPoly.from_terms(p, {(k, 0): c for k, c in enumerate(ax.coeffs)})
        r = resultant(A, b.poly, 0)  # eliminate Z (X-slot of Phi_b), keep Y
        cols.append(list(r.coeffs) + [0] * (D + 1 - len(r.coeffs)))
    W = interp_matrix_fp(xs, p)
    C = apply_interp(W, np.array(cols, dtype=np.int64), p)
    return BiPoly.make(p, C)
