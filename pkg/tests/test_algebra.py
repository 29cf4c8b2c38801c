import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from sslab.algebra import BiPoly, PrimeField, UniPoly, field_make, interpolate, poly_gcd, resultant, roots
from sslab.algebra.batch import matmul_mod, resultant_batch
from sslab.algebra.poly import pdivmod, pmul, resultant_formal, resultant_uni, roots_list, trim
from sslab.errors import BothZero, CompositeModulus, DuplicateNode, ZeroPolynomial

PRIMES = [3, 5, 7, 11, 13, 101, 983]


@st.composite
def quad_elems(draw, n=2):
    p = draw(st.sampled_from(PRIMES))
    ctx = field_make(p)
    return ctx, [draw(st.integers(0, p * p - 1)) for _ in range(n)]


@given(quad_elems(3))
def test_quad_field_ring_axioms(data):
    ctx, (a, b, c) = data
    F = ctx.fp2
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
    assert F.add(a, F.neg(a)) == 0
    if a:
        assert F.mul(a, F.inv(a)) == 1


@given(quad_elems(1))
def test_frobenius_is_pth_power(data):
    ctx, (a,) = data
    F = ctx.fp2
    assert F.frob(a) == F.pow(a, ctx.p)
    assert F.pow(a, ctx.p * ctx.p) == a


def test_delta_choice():
    assert field_make(7).delta == 6  # p = 3 mod 4 uses -1
    assert field_make(13).delta == 2  # smallest non-square
    with pytest.raises(CompositeModulus):
        field_make(15)


def test_int_constants_reduce_mod_p():
    ctx = field_make(7)
    assert ctx.fp2.int(1728) == 1728 % 7
    assert ctx.fp2.coerce(30) == 30  # an encoding, not an integer
    assert ctx.fp2.coerce(-1) == 6


def test_resultant_sylvester_convention():
    F = PrimeField(7)
    # (x - 2), (x - 5): lc^deg * prod g(roots f) = 2 - 5 = -3 = 4
    assert resultant_uni(F, [5, 1], [2, 1]) == 4
    assert resultant_uni(F, [2, 1], [5, 1]) == 3


@given(st.sampled_from([5, 7, 13, 101]), st.lists(st.integers(0, 100), min_size=1, max_size=6),
       st.lists(st.integers(0, 100), min_size=1, max_size=6))
def test_divmod_identity(p, a, b):
    F = PrimeField(p)
    a, b = trim([x % p for x in a]), trim([x % p for x in b])
    if not b:
        return
    q, r = pdivmod(F, a, b)
    assert len(r) < len(b)
    lhs = trim([(x + y) % p for x, y in zip(pmul(F, q, b) + [0] * len(a), r + [0] * (len(a) + len(b)))])
    assert lhs == a


@given(st.sampled_from([7, 13, 101]), st.lists(st.integers(0, 1000), min_size=1, max_size=5, unique=True))
def test_roots_of_product_of_linears(p, rs):
    F = PrimeField(p)
    rs = sorted({r % p for r in rs})
    f = [1]
    for r in rs:
        f = pmul(F, f, [(-r) % p, 1])
    assert [r for r, _ in roots_list(F, f)] == rs


def test_roots_multiplicity_and_quadratic_extension():
    ctx = field_make(7)
    F = ctx.fp2
    f = UniPoly.make(F, [1, 0, 1])  # x^2 + 1 is irreducible over F_7
    rts = roots(f)
    assert len(rts) == 2 and all(F.add(F.mul(r, r), 1) == 0 for r, _ in rts)
    g = UniPoly.make(PrimeField(7), [4, 3, 1])  # (x - 2)^2 = x^2 - 4x + 4 -> coefficients 4, 3, 1
    assert roots(g) == [(2, 2)]
    with pytest.raises(ZeroPolynomial):
        roots(UniPoly.make(PrimeField(7), []))


def test_interpolation_and_errors():
    F = PrimeField(11)
    f = interpolate([(0, 1), (1, 3), (2, 7)], F)  # x^2 + x + 1
    assert f.coeffs == (1, 1, 1)
    with pytest.raises(DuplicateNode):
        interpolate([(1, 1), (1, 2)], F)
    with pytest.raises(BothZero):
        poly_gcd(UniPoly.make(F, []), UniPoly.make(F, []))


@given(st.integers(0, 2**32), st.sampled_from([101, 983, 65537]))
def test_batch_resultant_matches_scalar(seed, p):
    gen = np.random.default_rng(seed)
    f = gen.integers(0, p, size=(6, 5))
    g = gen.integers(0, p, size=(6, 4))
    f[0, -1] = 0  # force a degenerate leading coefficient through the fallback path
    got = resultant_batch(f, g, p)
    F = PrimeField(p)
    want = [resultant_formal(F, f[i].tolist(), g[i].tolist(), 4, 3) for i in range(6)]
    assert got.tolist() == want


@given(st.integers(0, 2**32))
def test_matmul_mod_large_p(seed):
    p = (1 << 31) - 1
    gen = np.random.default_rng(seed)
    A = gen.integers(0, p, size=(3, 40))
    B = gen.integers(0, p, size=(40, 2))
    want = (A.astype(object) @ B.astype(object)) % p
    assert (matmul_mod(A, B, p) == want.astype(np.int64)).all()


def test_bipoly_resultant_eliminates_common_root():
    p = 101
    # a = x - y, b = x^2 - 2: Res_x = y^2 - 2
    a = BiPoly.from_terms(p, {(1, 0): 1, (0, 1): p - 1})
    b = BiPoly.from_terms(p, {(2, 0): 1, (0, 0): p - 2})
    r = resultant(a, b, 0)
    assert r.coeffs == (p - 2, 0, 1)
    assert a.is_symmetric() is False and (a * a).deg_x == 2
