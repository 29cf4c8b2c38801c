"""One-line summaries of a walk experiment."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .graph import build_graph
from .spectral import eig_sym, finite_time_dist, limiting_dist, tv_to_uniform

CSV_HEADER = "p,ell,N,lambda_min,lambda_max_nontrivial,tv_limiting_to_uniform,tv_finite_T"


@dataclass(frozen=True)
class WalkSummary:
    p: int
    ell: int
    N: int
    lambda_min: float
    lambda_max_nontrivial: float
    tv_limiting: float
    tv_finite: float
    T: float

    def csv_row(self) -> str:
        vals = (self.lambda_min, self.lambda_max_nontrivial, self.tv_limiting, self.tv_finite)
        return f"{self.p},{self.ell},{self.N}," + ",".join(f"{v:.10g}" for v in vals)

    @property
    def ramanujan(self) -> bool:
        b = 2 * math.sqrt(self.ell) + 1e-6
        return -b <= self.lambda_min and self.lambda_max_nontrivial <= b


def walk_summary(p: int, ell: int, T: float = 10.0, store=None, seed: int = 0) -> WalkSummary:
    """Spectrum and distances to uniform, starting from the graph's base vertex."""
    from ..algebra.field import field_make
    from ..curves.walk import find_base_supersingular

    ctx = field_make(p)
    G = build_graph(p, ell, store, ctx, seed=seed)
    spec = eig_sym(G.brandt)
    e0 = G.index(find_base_supersingular(ctx, seed=seed))
    lam = spec.eigenvalues
    lim = limiting_dist(spec, e0)
    fin = finite_time_dist(spec, e0, T)
    nontriv = lam[1:] if len(lam) > 1 else lam[:0]
    return WalkSummary(p, ell, G.N, float(lam.min()), float(nontriv.max()) if nontriv.size else float("nan"),
                       tv_to_uniform(lim), tv_to_uniform(fin), T)
