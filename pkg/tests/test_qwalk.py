import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from sslab.errors import NonpositiveT, NotADistribution, SymmetryUnavailable, VertexUnknown
from sslab.qwalk import (
    build_graph,
    cross_term_bound,
    eig_sym,
    finite_time_dist,
    limiting_dist,
    sample_limiting,
    tv,
    tv_to_uniform,
    walk_summary,
)


@pytest.fixture(scope="module")
def g1009():
    return build_graph(1009, 2)


@pytest.fixture(scope="module")
def spec1009(g1009):
    return eig_sym(g1009.brandt)


def test_one_by_one():
    s = eig_sym([[3.0]])
    assert s.eigenvalues.tolist() == [3.0] and s.vectors.tolist() == [[1.0]]


@given(st.integers(0, 2**32), st.integers(1, 12))
def test_eig_sym_random(seed, n):
    A = np.random.default_rng(seed).normal(size=(n, n))
    A = A + A.T
    s = eig_sym(A)
    assert np.all(np.diff(s.eigenvalues) <= 1e-12)
    assert np.allclose((s.vectors * s.eigenvalues) @ s.vectors.T, A)


def test_graph_shape(g1009, spec1009):
    assert g1009.N == 84 == (1009 - 1) // 12
    assert (g1009.brandt.sum(axis=1) == 3).all()
    assert abs(spec1009.eigenvalues[0] - 3) < 1e-9
    assert np.abs(spec1009.eigenvalues[1:]).max() <= 2 * np.sqrt(2) + 1e-9


def test_distances(g1009, spec1009):
    n = g1009.N
    assert tv_to_uniform(np.full(n, 1 / n)) == pytest.approx(0, abs=1e-15)
    point = np.zeros(n)
    point[0] = 1
    assert tv_to_uniform(point) == pytest.approx(1 - 1 / n)
    with pytest.raises(NotADistribution):
        tv_to_uniform(np.full(n, 0.5))


def test_limiting_and_finite(spec1009):
    lim = limiting_dist(spec1009, 0)
    assert lim.sum() == pytest.approx(1)
    assert np.array_equal(finite_time_dist(spec1009, 0, 10.0, cross_terms=False), lim)
    for T in (1.0, 10.0, 1e3):
        fin = finite_time_dist(spec1009, 0, T)
        assert fin.sum() == pytest.approx(1)
        assert tv(fin, lim) <= 0.5 * cross_term_bound(spec1009, 0, T) + 1e-12
    with pytest.raises(NonpositiveT):
        finite_time_dist(spec1009, 0, 0.0)


def test_frozen_summary():
    s = walk_summary(1009, 2, T=10.0)
    assert s.N == 84 and s.ramanujan
    assert s.tv_limiting == pytest.approx(0.1202808786, abs=1e-9)
    assert s.tv_finite == pytest.approx(0.2017977034, abs=1e-9)


def test_sampler(spec1009):
    a = sample_limiting(spec1009, 0, seed=3, size=2000)
    assert np.array_equal(a, sample_limiting(spec1009, 0, seed=3, size=2000))
    assert a.min() >= 0 and a.max() < 84


def test_errors(g1009):
    with pytest.raises(SymmetryUnavailable):
        build_graph(1019, 2)
    with pytest.raises(VertexUnknown):
        g1009.index(-5)
