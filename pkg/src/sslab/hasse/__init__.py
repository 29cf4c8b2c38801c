"""The Hasse polynomial H_p and root-finding iterations on it."""

from .orbits import (
    KINDS,
    Aborted,
    Cycle,
    FixedPoint,
    IterationStats,
    OrbitRecord,
    functional_graph,
    iterate,
    next_map,
    orbit_statistics,
    step,
)
from .poly import hasse_coeffs, hasse_eval, hasse_eval_vec

__all__ = [
    "KINDS",
    "Aborted",
    "Cycle",
    "FixedPoint",
    "IterationStats",
    "OrbitRecord",
    "functional_graph",
    "hasse_coeffs",
    "hasse_eval",
    "hasse_eval_vec",
    "iterate",
    "next_map",
    "orbit_statistics",
    "step",
]
