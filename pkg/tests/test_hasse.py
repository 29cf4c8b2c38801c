import numpy as np
import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from sslab.algebra import field_make
from sslab.curves import CurveModel, count_points, is_supersingular, j_invariant
from sslab.errors import DegenerateLambda, DomainMismatch, TooLarge, TwoNotSupported
from sslab.hasse import (
    Aborted,
    FixedPoint,
    functional_graph,
    hasse_coeffs,
    hasse_eval,
    hasse_eval_vec,
    iterate,
    next_map,
    orbit_statistics,
)


def test_small_hasse_polynomials():
    assert hasse_coeffs(3).coeffs == (1, 1)  # 1 + t
    assert hasse_coeffs(5).coeffs == (1, 4, 1)  # 1 + 4t + t^2
    with pytest.raises(TwoNotSupported):
        hasse_coeffs(2)
    with pytest.raises(DegenerateLambda):
        hasse_eval(1, field_make(7))


@pytest.mark.parametrize("p", [5, 7, 11, 13, 17, 19, 23])
def test_signed_trace_identity(p):
    # a_p = (-1)^((p-1)/2) H_p(lambda) mod p
    ctx = field_make(p)
    eps = (-1) ** ((p - 1) // 2)
    for lam in range(2, p):
        a = p + 1 - count_points(CurveModel.legendre(ctx, lam))
        assert (a - eps * hasse_eval(lam, ctx)) % p == 0


@pytest.mark.parametrize("p", [5, 7, 11])
def test_quadratic_identity_over_fp2(p):
    ctx = field_make(p)
    F = ctx.fp2
    for lam in range(2, p * p):
        n = count_points(CurveModel.legendre(ctx, lam), 2)
        assert (p * p + 1 - n - F.pow(hasse_eval(lam, ctx), p + 1)) % p == 0


@pytest.mark.parametrize("p", [13, 29, 101])
def test_roots_are_supersingular_lambdas(p):
    ctx = field_make(p)
    t = np.arange(2, p * p)
    a, b = hasse_eval_vec(ctx, t)
    roots = t[(a == 0) & (b == 0)]
    assert len(roots) == (p - 1) // 2
    assert all(is_supersingular(j_invariant(CurveModel.legendre(ctx, int(l))), ctx) for l in roots)


@given(st.sampled_from([7, 13, 31]), st.integers(0, 10**6))
def test_vector_and_scalar_evaluation_agree(p, x):
    ctx = field_make(p)
    t = x % (p * p)
    (a, b), (da, db) = hasse_eval_vec(ctx, np.array([t]), deriv=True)
    H = hasse_coeffs(p, ctx)
    assert int(a[0]) + p * int(b[0]) == H(t)
    assert int(da[0]) + p * int(db[0]) == H.deriv()(t)


@given(st.lists(st.integers(0, 19), min_size=20, max_size=20))
def test_functional_graph_against_scalar_walk(f):
    nxt = np.array(f)
    dist, term, aborted = functional_graph(nxt)
    for x in range(20):
        seen, y, d = set(), x, 0
        while nxt[y] != y and y not in seen:
            seen.add(y)
            y, d = nxt[y], d + 1
        if nxt[y] == y:
            assert dist[x] == d and term[x] == y
        else:
            assert dist[x] == -1


@pytest.mark.parametrize("kind", ["newton", "plain_p2", "norm"])
def test_sweep_matches_scalar_iteration(kind):
    p = 31
    ctx = field_make(p)
    s = orbit_statistics(p, kind, ctx)
    reach = 0
    tail = 0
    for t in range(p * p):
        r = iterate(kind, t, ctx)
        if r.reaches_fixed_point:
            reach += 1
            tail = max(tail, r.tail_length)
    assert s.num_reaching == reach and s.max_tail == tail
    assert s.reach_histogram[-1] <= s.num_reaching


def test_newton_aborts_and_fixed_points():
    p = 101
    ctx = field_make(p)
    nxt = next_map("newton", ctx)
    ab = int(np.flatnonzero(nxt < 0)[0])
    assert isinstance(iterate("newton", ab, ctx).terminal, Aborted)
    fixed = np.flatnonzero(nxt == np.arange(p * p))
    assert len(fixed) == 50  # Newton's fixed points are exactly the roots of H_p
    assert iterate("newton", int(fixed[0]), ctx).terminal == FixedPoint(int(fixed[0]))
    skip = orbit_statistics(p, "newton", ctx, newton_abort="skip")
    keep = orbit_statistics(p, "newton", ctx)
    assert skip.num_reaching == keep.num_reaching and skip.frac_reaching > keep.frac_reaching


def test_domain_errors():
    ctx = field_make(7)
    with pytest.raises(DomainMismatch):
        iterate("plain_p", 30, ctx)
    with pytest.raises(TooLarge):
        orbit_statistics(1009, "plain_p2", bound=1000)


def test_plain_iteration_p1019_basin():
    s = orbit_statistics(1019, "plain_p")
    assert s.num_fixed_points == len(s.basin_sizes)
    assert sum(s.basin_sizes) + s.num_fixed_points == s.num_reaching
    # some fixed points attract nothing, the largest basin has 50 other elements
    assert 0 in s.basin_sizes and max(s.basin_sizes) == 50
