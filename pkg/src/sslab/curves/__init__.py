from .models import CurveModel, count_points, curve_from_j, is_supersingular, j_invariant, trace
from .division import TorsionPoly, division_poly
from .isogeny import NeighborMultiset, velu_neighbors
from .walk import WalkState, cgl_walk, cgl_walk_state, find_base_supersingular, phi2_roots

__all__ = [
    "CurveModel",
    "NeighborMultiset",
    "TorsionPoly",
    "WalkState",
    "cgl_walk",
    "cgl_walk_state",
    "count_points",
    "curve_from_j",
    "division_poly",
    "find_base_supersingular",
    "is_supersingular",
    "j_invariant",
    "phi2_roots",
    "trace",
    "velu_neighbors",
]
