from .experiment import CSV_HEADER, WalkSummary, walk_summary
from .graph import IsogenyGraph, brandt_matrix, build_graph, neighbors
from .spectral import (
    SpectralData,
    cross_term_bound,
    eig_sym,
    finite_time_dist,
    limiting_dist,
    sample_limiting,
    tv,
    tv_to_uniform,
)

__all__ = [
    "CSV_HEADER",
    "IsogenyGraph",
    "SpectralData",
    "WalkSummary",
    "brandt_matrix",
    "build_graph",
    "cross_term_bound",
    "eig_sym",
    "finite_time_dist",
    "limiting_dist",
    "neighbors",
    "sample_limiting",
    "tv",
    "tv_to_uniform",
    "walk_summary",
]
