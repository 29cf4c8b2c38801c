"""Curves with an n- and an m-isogeny to their Frobenius conjugate, via gcds of modular polynomials."""

from .algo import ConjGcdResult, fnmp_brute, fnmp_roots, kronecker, verify_root
from .experiments import (
    GRID_HEADER,
    SWEEP_HEADER,
    GridRecord,
    SubsetStats,
    SweepRecord,
    aggregate,
    default_pairs,
    grid_experiment,
    extended_pairs,
    prime_sweep,
    sample_primes,
)
from .split import shear, split_array, split_substitute

__all__ = [
    "GRID_HEADER",
    "SWEEP_HEADER",
    "GridRecord",
    "SubsetStats",
    "SweepRecord",
    "aggregate",
    "default_pairs",
    "grid_experiment",
    "extended_pairs",
    "prime_sweep",
    "sample_primes",
    "ConjGcdResult",
    "fnmp_brute",
    "fnmp_roots",
    "kronecker",
    "shear",
    "split_array",
    "split_substitute",
    "verify_root",
]
