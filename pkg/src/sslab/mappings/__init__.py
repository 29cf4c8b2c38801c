"""Exact and sampled statistics of random mappings with a prescribed number of fixed points."""

from .counts import (
    MCResult,
    asymptotic_ratio,
    brute_counts,
    cfpf_series,
    fm_counts,
    fm_series,
    monte_carlo_reach,
    reach_counts,
    reach_series,
    sample_function,
    tree_series,
)
from .series import SeriesQ

__all__ = [
    "MCResult",
    "SeriesQ",
    "asymptotic_ratio",
    "brute_counts",
    "cfpf_series",
    "fm_counts",
    "fm_series",
    "monte_carlo_reach",
    "reach_counts",
    "reach_series",
    "sample_function",
    "tree_series",
]
