"""Spectral data of Brandt matrices and the classical shadow of the quantum walk."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import NonpositiveT, NoConvergence, NotADistribution
from ..rng import rng as make_rng

RESIDUAL_TOL = 1e-8
SUM_TOL = 1e-9


@dataclass(frozen=True)
class SpectralData:
    eigenvalues: np.ndarray  # descending
    vectors: np.ndarray  # column k is phi_k
    residual: float
    orthogonality: float


def eig_sym(T) -> SpectralData:
    """Symmetric eigendecomposition, eigenvalues descending, each vector's first nonzero entry positive."""
    A = np.asarray(T, dtype=np.float64)
    if not np.array_equal(A, A.T):
        raise ValueError("matrix is not symmetric")
    try:
        w, Q = np.linalg.eigh(A)
    except np.linalg.LinAlgError as e:
        raise NoConvergence(str(e)) from e
    order = np.argsort(-w, kind="stable")
    w, Q = w[order], Q[:, order]
    for k in range(Q.shape[1]):
        nz = np.flatnonzero(np.abs(Q[:, k]) > 1e-12)
        if nz.size and Q[nz[0], k] < 0:
            Q[:, k] = -Q[:, k]
    scale = max(1.0, float(np.abs(A).sum(axis=1).max()))
    res = float(np.abs(A - (Q * w) @ Q.T).max())
    orth = float(np.abs(Q.T @ Q - np.eye(len(w))).max())
    if res > RESIDUAL_TOL * scale or orth > RESIDUAL_TOL:
        raise NoConvergence(f"residual {res:.3g}, orthogonality {orth:.3g}")
    return SpectralData(w, Q, res, orth)


def _weights(lam: np.ndarray, T: float) -> np.ndarray:
    """Real part of the time-averaged phase (e^{i d T} - 1) / (i d T), d = lam_j - lam_k."""
    x = (lam[:, None] - lam[None, :]) * T
    with np.errstate(invalid="ignore", divide="ignore"):
        w = np.where(x == 0, 1.0, np.sin(x) / np.where(x == 0, 1.0, x))
    return w


def finite_time_dist(spec: SpectralData, e0: int, T: float, cross_terms: bool = True) -> np.ndarray:
    """Probability of each vertex after a walk time-averaged over [0, T], starting at index e0."""
    if T <= 0:
        raise NonpositiveT("T must be positive")
    A = spec.vectors
    c = A[e0]
    if not cross_terms:
        return ((A * c) ** 2).sum(axis=1)
    M = np.outer(c, c) * _weights(spec.eigenvalues, T)
    return ((A @ M) * A).sum(axis=1)


def limiting_dist(spec: SpectralData, e0: int) -> np.ndarray:
    """sum_j |<E0|phi_j><E|phi_j>|^2 for every vertex E."""
    A = spec.vectors
    return ((A * A[e0]) ** 2).sum(axis=1)


def cross_term_bound(spec: SpectralData, e0: int, T: float) -> float:
    """sum_{j != k} |c_j c_k| 2 / (T |lam_j - lam_k|) over pairs with distinct eigenvalues."""
    c = np.abs(spec.vectors[e0])
    d = np.abs(spec.eigenvalues[:, None] - spec.eigenvalues[None, :])
    off = d > 0
    return float((np.outer(c, c)[off] * 2 / (T * d[off])).sum())


def sample_limiting(spec: SpectralData, e0: int, seed: int, size: int = 1) -> np.ndarray:
    """Two-stage draws: eigenvector j with weight <E0|phi_j>^2, then a vertex with weight <E|phi_j>^2."""
    A = spec.vectors
    gen = make_rng(seed, "qwalk/sample")
    pj = A[e0] ** 2
    js = gen.choice(len(pj), size=size, p=pj / pj.sum())
    cdf = np.cumsum(A**2, axis=0)
    cdf /= cdf[-1]
    u = gen.random(size)
    out = np.empty(size, dtype=np.int64)
    step = 1 << 14
    for lo in range(0, size, step):
        cols = cdf[:, js[lo : lo + step]]
        out[lo : lo + step] = np.minimum((cols < u[lo : lo + step]).sum(axis=0), len(pj) - 1)
    return out


def tv_to_uniform(dist) -> float:
    d = np.asarray(dist, dtype=np.float64)
    if abs(d.sum() - 1) > 1e-6 or (d < -1e-12).any():
        raise NotADistribution(f"entries sum to {d.sum()!r}")
    return float(0.5 * np.abs(d - 1 / len(d)).sum())


def tv(a, b) -> float:
    return float(0.5 * np.abs(np.asarray(a) - np.asarray(b)).sum())
