import numpy as np
import pytest

from sslab.algebra import field_make
from sslab.curves import CurveModel, count_points, is_supersingular, j_invariant
from sslab.errors import BadEll, ConfigError, CosetOrderInvalid, EmptyEllSet, TooLarge
from sslab.torsion import (
    Variant,
    build_system,
    coset_elements,
    coset_restrict,
    eliminate,
    field_elements,
    level_mask,
    solve,
)


def test_build_system_shapes():
    s = build_system(29, [3, 5])
    assert s.variables == ("x_3", "x_5", "a") and len(s.equations) == 4
    pp = build_system(53, [27], "prime_power")
    assert pp.variables == ("x_27_1", "x_27_2", "x_27_3", "a") and len(pp.equations) == 4
    c = build_system(29, [3], Variant("coset", r=105))
    assert "^105" in c.equations[1]
    h = build_system(29, [3, 5], Variant("hybrid", dropped=(5,)))
    assert h.active == (3,)
    # [784, 900] holds both 840 and 900; [100, 144] holds only 120
    assert not build_system(29, [3, 5]).pinning
    assert build_system(11, [3], Variant("hybrid")).pinning is False
    from sslab.torsion.system import _pins

    assert _pins(11, [3, 5])


@pytest.mark.parametrize(
    "args,err",
    [
        ((29, []), EmptyEllSet),
        ((29, [7]), BadEll),
        ((29, [2]), BadEll),
        ((29, [9]), BadEll),
        ((29, [3], Variant("coset", r=11)), CosetOrderInvalid),
        ((29, [3], "bogus"), ConfigError),
        ((29, [3], Variant("hybrid", dropped=(5,))), BadEll),
    ],
)
def test_build_system_errors(args, err):
    with pytest.raises(err):
        build_system(*args)


def test_tiny_bound():
    with pytest.raises(TooLarge):
        solve(1019, [3])


@pytest.mark.parametrize("p", [11, 17, 23])
def test_eliminant_roots_match_grid_mask(p):
    ctx = field_make(p)
    R = eliminate(p, 3, ctx=ctx).over(ctx.fp2)
    zeros = {a for a in range(p * p) if R(a) == 0}
    mask = level_mask(p, 3, field_elements(ctx), ctx)
    assert zeros == set(np.flatnonzero(mask).tolist())


def test_mask_agrees_with_point_counts():
    # an order-3 point with x in F_{p^2} is rational on E_a or on its quadratic twist
    p = 17
    ctx = field_make(p)
    mask = level_mask(p, 3, field_elements(ctx), ctx)
    for a in range(2, p * p):
        n = count_points(CurveModel.legendre(ctx, a), 2)
        twist = 2 * (p * p + 1) - n
        assert mask[a] == (n % 3 == 0 or twist % 3 == 0)


def test_coset_with_full_group_recovers_eliminant():
    p = 11
    ctx = field_make(p)
    R = eliminate(p, 3, ctx=ctx).over(ctx.fp2)
    C = coset_restrict(p, 3, p * p - 1, mu=1, ctx=ctx).over(ctx.fp2)
    # beta = 0 is the only element missing from the unit group
    from sslab.torsion.solve import beta_product

    R0 = beta_product(p, 3, np.array([0]), ctx).over(ctx.fp2)
    assert (C * R0).coeffs == R.coeffs


def test_variant_inclusions():
    p = 29
    basic = set(solve(p, [3, 5]).candidates)
    hybrid = set(solve(p, [3, 5], Variant("hybrid", dropped=(5,))).candidates)
    coset = set(solve(p, [3, 5], Variant("coset", r=105)).candidates)
    assert basic <= hybrid and coset <= hybrid
    assert hybrid == set(solve(p, [3]).candidates)


def test_verified_are_supersingular():
    p = 29
    ctx = field_make(p)
    res = solve(p, [3, 5])
    assert (len(res.candidates), len(res.verified)) == (242, 14)
    for a in res.verified:
        assert is_supersingular(j_invariant(CurveModel.legendre(ctx, a)), ctx)
    # supersingular Legendre parameters all carry full (p+1)-torsion over F_{p^2}
    ss = [a for a in range(2, p * p) if is_supersingular(j_invariant(CurveModel.legendre(ctx, a)), ctx)]
    assert set(ss) == set(res.verified)


def test_prime_power_exact_order():
    res = solve(53, [3, 27], "prime_power")
    assert (len(res.candidates), len(res.verified)) == (98, 26)
    assert set(res.candidates) <= set(solve(53, [27], "prime_power").candidates)


def test_coset_elements():
    ctx = field_make(11)
    el = coset_elements(ctx, 5, 1)
    assert len(el) == 5
    F = ctx.fp2
    assert all(F.pow(int(x), 5) == 1 for x in el)


def test_csv_row_timing_blank_by_default():
    r = solve(29, [3])
    assert r.csv_row().endswith(",")
    assert r.csv_row(timing=True).split(",")[-1].isdigit()
