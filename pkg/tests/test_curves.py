import numpy as np
import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from sslab.algebra import field_make
from sslab.curves import (
    CurveModel,
    WalkState,
    cgl_walk,
    cgl_walk_state,
    count_points,
    curve_from_j,
    division_poly,
    find_base_supersingular,
    is_supersingular,
    j_invariant,
    phi2_roots,
    velu_neighbors,
)
from sslab.errors import EllEqualsP, InvalidModel, NotSupersingularStart


def brute_count(p, A, B):
    return 1 + sum(1 for x in range(p) for y in range(p) if (y * y - x**3 - A * x - B) % p == 0)


@given(st.sampled_from([5, 7, 11, 13, 17, 19]), st.integers(0, 100), st.integers(0, 100))
def test_point_count_matches_brute(p, A, B):
    A, B = A % p, B % p
    if (4 * A**3 + 27 * B * B) % p == 0:
        return
    ctx = field_make(p)
    assert count_points(CurveModel.weierstrass(ctx, A, B)) == brute_count(p, A, B)


def test_invalid_models():
    ctx = field_make(7)
    with pytest.raises(InvalidModel):
        CurveModel.legendre(ctx, 1)
    with pytest.raises(InvalidModel):
        CurveModel.weierstrass(ctx, 0, 0)


def test_j_invariants_of_special_curves():
    ctx = field_make(101)
    assert j_invariant(CurveModel.weierstrass(ctx, 1, 0)) == 1728 % 101
    assert j_invariant(CurveModel.weierstrass(ctx, 0, 1)) == 0
    for j in (0, 1728 % 101, 5, 2 + 3 * 101):
        assert j_invariant(curve_from_j(ctx, j)) == j


def test_division_poly_ell3_formula():
    ctx = field_make(31)
    A, B = 3, 7
    f = division_poly(3, CurveModel.weierstrass(ctx, A, B)).poly.coeffs
    want = [(-A * A) % 31, 12 * B % 31, 6 * A % 31, 0, 3]
    assert list(f) == want


def test_division_poly_roots_are_3_torsion_x():
    # brute 3-torsion over F_p: x-coordinates of points with 3P = O among rational points
    p = 13
    ctx = field_make(p)
    E = CurveModel.weierstrass(ctx, 2, 3)
    f = division_poly(3, E).poly
    with pytest.raises(EllEqualsP):
        division_poly(13, E)
    pts = [(x, y) for x in range(p) for y in range(p) if (y * y - x**3 - 2 * x - 3) % p == 0]

    def add(P, Q):
        if P is None:
            return Q
        if Q is None:
            return P
        (x1, y1), (x2, y2) = P, Q
        if x1 == x2 and (y1 + y2) % p == 0:
            return None
        if P == Q:
            l = (3 * x1 * x1 + 2) * pow(2 * y1, -1, p) % p
        else:
            l = (y2 - y1) * pow(x2 - x1, -1, p) % p
        x3 = (l * l - x1 - x2) % p
        return x3, (l * (x1 - x3) - y1) % p

    tors = {P[0] for P in pts if add(add(P, P), P) is None}
    assert tors == {x for x in range(p) if f(x) == 0}


@pytest.mark.parametrize("p", [11, 13, 37, 101])
def test_supersingular_count_matches_class_number_formula(p):
    ctx = field_make(p)
    ss = [j for j in range(p * p) if is_supersingular(j, ctx)]
    want = p // 12 + {1: 0, 5: 1, 7: 1, 11: 2}[p % 12]
    assert len(ss) == want


def test_velu_neighbors_have_ell_plus_one_values():
    ctx = field_make(83)
    j = find_base_supersingular(ctx)
    for ell in (2, 3, 5):
        nb = velu_neighbors(j, ell, ctx)
        assert len(nb.values()) == ell + 1
        assert all(is_supersingular(k, ctx) for k in nb.values())


@pytest.mark.parametrize("p", [5, 7, 13, 37, 1009, 10009])
def test_base_supersingular(p):
    ctx = field_make(p)
    assert is_supersingular(find_base_supersingular(ctx), ctx)


def test_phi2_roots_match_velu():
    ctx = field_make(101)
    for j in (3, 50, 7 + 9 * 101):
        assert phi2_roots(ctx, j) == velu_neighbors(j, 2, ctx).values()


@given(st.text(alphabet="01", min_size=0, max_size=12), st.text(alphabet="01", min_size=0, max_size=12))
def test_cgl_walk_composes(a, b):
    ctx = field_make(1009)
    j0 = find_base_supersingular(ctx)
    s = cgl_walk_state(j0, a, ctx)
    assert cgl_walk_state(j0, a + b, ctx) == cgl_walk_state(j0, b, ctx, s)
    assert is_supersingular(cgl_walk(j0, a + b, ctx), ctx)


def test_cgl_walk_rejects_ordinary_start():
    ctx = field_make(1009)
    j = next(j for j in range(2, 1009) if not is_supersingular(j, ctx))
    with pytest.raises(NotSupersingularStart):
        cgl_walk(j, "01", ctx)


def test_cgl_walk_does_not_backtrack():
    ctx = field_make(1009)
    j0 = find_base_supersingular(ctx)
    s = WalkState(j0)
    for b in "0110100111":
        nxt = cgl_walk_state(j0, b, ctx, s)
        assert nxt.previous == s.current
        if s.previous is not None and phi2_roots(ctx, s.current).count(s.previous) == 1:
            assert nxt.current != s.previous
        s = nxt
