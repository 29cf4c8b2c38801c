"""Root-finding iterations for H_p and exact statistics of their functional graphs."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from ..algebra.field import NUMPY_P_LIMIT, FieldCtx, field_make
from ..errors import DomainMismatch, TooLarge
from .poly import hasse_coeffs, hasse_eval_vec, vec_inv_fp

KINDS = ("newton", "plain_p", "plain_p2", "norm")
SWEEP_BOUND = 1 << 26
HIST_K = 10


@dataclass(frozen=True)
class FixedPoint:
    value: int


@dataclass(frozen=True)
class Cycle:
    length: int


@dataclass(frozen=True)
class Aborted:
    reason: str


@dataclass(frozen=True)
class OrbitRecord:
    seed: int
    path: tuple
    terminal: object
    tail_length: int

    @property
    def reaches_fixed_point(self) -> bool:
        return isinstance(self.terminal, FixedPoint)


def _check_domain(kind, t, ctx):
    if kind not in KINDS:
        raise ValueError(f"unknown iteration kind {kind!r}")
    limit = ctx.p if kind == "plain_p" else ctx.p * ctx.p
    if not 0 <= t < limit:
        raise DomainMismatch(f"{t} is outside the domain of {kind}")


def step(kind: str, t: int, ctx: FieldCtx):
    """One application of the iteration map; None when Newton meets H_p'(t) = 0."""
    F = ctx.fp2
    H = hasse_coeffs(ctx.p, ctx)
    h = H(t)
    if kind == "newton":
        dh = H.deriv()(t)
        if dh == 0:
            return None
        return F.sub(t, F.div(h, dh))
    if kind == "norm":
        return F.sub(t, F.norm(h))
    return F.sub(t, h)


def iterate(kind: str, t0: int, ctx: FieldCtx, max_steps: int = 100_000) -> OrbitRecord:
    _check_domain(kind, t0, ctx)
    path = [t0]
    seen = {t0: 0}
    t = t0
    for _ in range(max_steps):
        nxt = step(kind, t, ctx)
        if nxt is None:
            return OrbitRecord(t0, tuple(path), Aborted("derivative zero"), len(path) - 1)
        if nxt == t:
            return OrbitRecord(t0, tuple(path), FixedPoint(t), len(path) - 1)
        if nxt in seen:
            start = seen[nxt]
            return OrbitRecord(t0, tuple(path), Cycle(len(path) - start), start)
        seen[nxt] = len(path)
        path.append(nxt)
        t = nxt
    return OrbitRecord(t0, tuple(path), Aborted("step budget"), len(path) - 1)


def next_map(kind: str, ctx: FieldCtx) -> np.ndarray:
    """The iteration map on the whole domain as an index array (encoding = index); -1 marks an abort."""
    p = ctx.p
    if p >= NUMPY_P_LIMIT:
        raise TooLarge("vectorized sweep needs p < 2^20")
    if kind not in KINDS:
        raise ValueError(f"unknown iteration kind {kind!r}")
    size = p if kind == "plain_p" else p * p
    t = np.arange(size, dtype=np.int64)
    ta, tb = t % p, t // p
    if kind == "newton":
        (ha, hb), (da, db) = hasse_eval_vec(ctx, t, deriv=True)
        nrm = (da * da - ctx.delta * (db * db % p)) % p
        ninv = vec_inv_fp(nrm, p)
        ia, ib = da * ninv % p, (p - db) * ninv % p  # 1/D = conj(D) / N(D)
        qa, qb = (ha * ia + ctx.delta * (hb * ib % p)) % p, (ha * ib + hb * ia) % p
        out = (ta - qa) % p + ((tb - qb) % p) * p
        out[nrm == 0] = -1
        return out
    ha, hb = hasse_eval_vec(ctx, t)
    if kind == "norm":
        nrm = (ha * ha - ctx.delta * (hb * hb % p)) % p
        return (ta - nrm) % p + tb * p
    return (ta - ha) % p + ((tb - hb) % p) * p


@dataclass(frozen=True)
class IterationStats:
    p: int
    kind: str
    domain_size: int
    num_fixed_points: int
    num_reaching: int
    num_aborted: int
    frac_reaching: float
    max_tail: int
    reach_histogram: tuple  # [k] = elements reaching a fixed point within k steps, k = 0..HIST_K
    basin_sizes: tuple = field(repr=False)  # non-fixed elements draining into each fixed point

    @property
    def F1(self) -> float:
        return self.num_fixed_points / math.sqrt(self.p)

    @property
    def F2(self) -> float:
        return self.frac_reaching

    @property
    def F3(self) -> float:
        return self.max_tail / math.sqrt(self.p)

    CSV_HEADER = "p,kind,domain_size,num_fixed,num_reaching,num_aborted,frac_reaching,max_tail,F1,F2,F3," + ",".join(
        f"reach_k{k}" for k in range(1, HIST_K + 1)
    )

    def csv_row(self) -> str:
        vals = [self.p, self.kind, self.domain_size, self.num_fixed_points, self.num_reaching, self.num_aborted,
                f"{self.frac_reaching:.10g}", self.max_tail,
                f"{self.F1:.10g}", f"{self.F2:.10g}", f"{self.F3:.10g}"]
        vals += list(self.reach_histogram[1 : HIST_K + 1])
        return ",".join(str(v) for v in vals)


def functional_graph(nxt: np.ndarray):
    """Distance to a fixed point (-1 if none) and the fixed point reached, for every node."""
    n = nxt.size
    idx = np.arange(n)
    fixed = nxt == idx
    dist = np.where(fixed, 0, -1)
    term = np.where(fixed, idx, -1)
    safe = np.where(nxt >= 0, nxt, 0)
    live = (~fixed) & (nxt >= 0)
    while True:
        nd = dist[safe]
        upd = live & (dist < 0) & (nd >= 0)
        if not upd.any():
            break
        dist[upd] = nd[upd] + 1
        term[upd] = term[safe[upd]]
    # nodes whose orbit ends in an abort
    aborted = nxt < 0
    while True:
        upd = live & ~aborted & aborted[safe]
        if not upd.any():
            break
        aborted |= upd
    return dist, term, aborted


def orbit_statistics(p: int, kind: str, ctx: FieldCtx | None = None, newton_abort: str = "nonreaching",
                     bound: int = SWEEP_BOUND) -> IterationStats:
    """Exact sweep over the whole domain of ``kind``.

    ``newton_abort`` decides what an orbit that meets H_p' = 0 does to the fraction:
    'nonreaching' keeps such seeds in the denominator, 'skip' drops them.
    """
    ctx = ctx or field_make(p)
    size = p if kind == "plain_p" else p * p
    if size > bound:
        raise TooLarge(f"domain of size {size} exceeds the sweep bound {bound}")
    nxt = next_map(kind, ctx)
    dist, term, aborted = functional_graph(nxt)
    reach = dist >= 0
    fixed_idx = np.flatnonzero(nxt == np.arange(size))
    n_abort = int(aborted.sum())
    denom = size - n_abort if newton_abort == "skip" else size
    hist = tuple(int(np.count_nonzero(reach & (dist <= k))) for k in range(HIST_K + 1))
    basins = np.bincount(term[reach & (dist > 0)], minlength=size)[fixed_idx] if fixed_idx.size else np.zeros(0)
    return IterationStats(
        p=p,
        kind=kind,
        domain_size=size,
        num_fixed_points=int(fixed_idx.size),
        num_reaching=int(reach.sum()),
        num_aborted=n_abort,
        frac_reaching=int(reach.sum()) / denom if denom else 0.0,
        max_tail=int(dist.max()) if reach.any() else 0,
        reach_histogram=hist,
        basin_sizes=tuple(int(b) for b in basins),
    )
