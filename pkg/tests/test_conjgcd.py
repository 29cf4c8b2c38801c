import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from sslab.algebra import BiPoly, field_make
from sslab.conjgcd import (
    GRID_HEADER,
    aggregate,
    fnmp_brute,
    fnmp_roots,
    grid_experiment,
    kronecker,
    prime_sweep,
    sample_primes,
    shear,
    split_substitute,
    verify_root,
)
from sslab.curves import is_supersingular
from sslab.errors import EqualLevels, LevelDividesP, NotSymmetric
from sslab.modpoly import ModPolyStore, psi


def test_split_examples():
    ctx = field_make(7)
    d = ctx.delta
    xy = BiPoly.from_terms(7, {(1, 0): 1, (0, 1): 1})
    assert split_substitute(xy, ctx) == BiPoly.from_terms(7, {(1, 0): 2})
    prod = BiPoly.from_terms(7, {(1, 1): 1})
    assert split_substitute(prod, ctx) == BiPoly.from_terms(7, {(2, 0): 1, (0, 2): (-d) % 7})
    with pytest.raises(NotSymmetric):
        split_substitute(BiPoly.from_terms(7, {(1, 0): 1}), ctx)


@given(st.integers(0, 2**32), st.sampled_from([7, 13, 101]))
def test_split_evaluates_like_conjugate_pair(seed, p):
    ctx = field_make(p)
    F = ctx.fp2
    gen = np.random.default_rng(seed)
    c = gen.integers(0, p, size=(4, 4))
    c = (c + c.T) % p
    phi = BiPoly.make(p, c)
    G = split_substitute(phi, ctx)
    j0, j1 = (int(v) for v in gen.integers(0, p, size=2))
    j = j0 + p * j1
    assert phi(j, F.frob(j), F) == G(j0, j1, ctx.fp)


@given(st.integers(0, 2**32))
def test_shear_is_a_substitution(seed):
    p = 31
    gen = np.random.default_rng(seed)
    c = gen.integers(0, p, size=(3, 4))
    a = int(gen.integers(0, p))
    s = shear(c, a, 1, p)
    u, v = (int(t) for t in gen.integers(0, p, size=2))
    lhs = sum(int(c[i, j]) * u**i * (v + a * u) ** j for i in range(3) for j in range(4)) % p
    rhs = sum(int(s[i, j]) * u**i * v**j for i in range(s.shape[0]) for j in range(s.shape[1])) % p
    assert lhs == rhs


def test_kronecker_symbol():
    assert kronecker(2, 3, 83) == 1 and kronecker(2, 5, 83) == -1
    assert kronecker(2, 3, 3) == 0


def test_level_checks():
    with pytest.raises(EqualLevels):
        fnmp_roots(3, 3, 83)
    with pytest.raises(LevelDividesP):
        fnmp_roots(2, 83, 83)
    with pytest.raises(EqualLevels):
        fnmp_brute(5, 5, 83)


@pytest.mark.parametrize("n,m,p", [(2, 3, 83), (3, 5, 101), (2, 7, 59), (4, 6, 71)])
def test_against_brute_force(n, m, p):
    store = ModPolyStore(p)
    res = fnmp_roots(n, m, p, store)
    assert set(res.roots) == fnmp_brute(n, m, p, store)
    ctx = field_make(p)
    F = ctx.fp2
    # conjugation closure and classification consistency
    assert {F.frob(j) for j in res.roots} == set(res.roots)
    assert set(res.supersingular) == {j for j in res.roots if is_supersingular(j, ctx)}
    assert len(res.roots) <= 4 * psi(n) * psi(m)


def test_strategies_agree():
    for n, m, p in [(2, 3, 83), (3, 4, 1009)]:
        a = fnmp_roots(n, m, p, classify=False, strategy="pointwise")
        b = fnmp_roots(n, m, p, classify=False, strategy="interpolate")
        assert a.roots == b.roots


def test_grid_records_and_aggregates():
    p = 83
    recs = grid_experiment(p, [(2, 3), (2, 4), (3, 5)])
    assert GRID_HEADER.count(",") == recs[0].csv_row().count(",")
    agg = {s.name: s for s in aggregate(recs)}
    assert agg["all"].points == 3 and agg["coprime"].points == 2
    assert agg["inert"].points + agg["split"].points == 3
    assert recs[0].csv_row().startswith("83,2,3,9,")


def test_sweep_verifies_roots():
    primes = sample_primes(1000, 5000, 3, seed=0)
    assert all(q % 4 == 3 for q in primes) and primes == sorted(primes)
    recs = prime_sweep(8, 13, primes)
    assert all(r.verified for r in recs)
    ctx = field_make(103)
    store = ModPolyStore(103)
    for j in fnmp_roots(8, 13, 103, store).roots:
        assert verify_root(j, store.get(8), ctx) and verify_root(j, store.get(13), ctx)
