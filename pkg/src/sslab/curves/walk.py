"""Charles-Goren-Lauter style hashing walks on the supersingular 2-isogeny graph."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from ..algebra.field import FieldCtx
from ..algebra.poly import roots_list
from ..errors import NotSupersingularStart, RepeatedRootAtStep, SearchExhausted
from .models import is_supersingular

SEARCH_BUDGET = 200_000


@lru_cache(maxsize=None)
def _phi2_terms():
    from ..modpoly.qexp import modular_poly_coeffs

    return tuple(sorted(modular_poly_coeffs(2).items()))


def phi2_roots(ctx: FieldCtx, j: int) -> list[int]:
    """Roots of Phi_2(j, Y) in F_{p^2} with multiplicity, sorted by encoding."""
    F = ctx.fp2
    powers = [1]
    for _ in range(3):
        powers.append(F.mul(powers[-1], j))
    coeffs = [0] * 4
    for (i, k), c in _phi2_terms():
        coeffs[k] = F.add(coeffs[k], F.mul(F.int(c), powers[i]))
    return sorted(r for r, m in roots_list(F, coeffs) for _ in range(m))


@dataclass(frozen=True)
class WalkState:
    """Position of a walk: the current vertex and the one it came from (None at the start)."""

    current: int
    previous: int | None = None


def _choices(ctx, state: WalkState) -> list[int]:
    nbrs = phi2_roots(ctx, state.current)
    if len(nbrs) != 3:
        raise RepeatedRootAtStep(f"Phi_2({state.current}, Y) does not split over F_p^2")
    # the start has no previous vertex; treat the largest neighbour as one
    back = nbrs[-1] if state.previous is None else state.previous
    nbrs.remove(back)
    return nbrs


def cgl_walk_state(j0: int, bits: str, ctx: FieldCtx, state: WalkState | None = None) -> WalkState:
    if state is None:
        if not is_supersingular(j0, ctx):
            raise NotSupersingularStart(f"j0 = {j0} is ordinary")
        state = WalkState(ctx.fp2.coerce(j0))
    for b in bits:
        if b not in "01":
            raise ValueError(f"bit string contains {b!r}")
        nxt = _choices(ctx, state)[int(b)]
        state = WalkState(nxt, state.current)
    return state


def cgl_walk(j0: int, bits: str, ctx: FieldCtx, state: WalkState | None = None) -> int:
    """Endpoint of the non-backtracking walk directed by ``bits``; bit 0 takes the smaller encoding."""
    return cgl_walk_state(j0, bits, ctx, state).current


def find_base_supersingular(ctx: FieldCtx, seed: int = 0, budget: int = SEARCH_BUDGET) -> int:
    p = ctx.p
    if p % 4 == 3:
        return ctx.fp2.int(1728)
    if p % 3 == 2:
        return 0
    # every p has a supersingular j in F_p, so draw j from F_p directly
    rng = np.random.default_rng(seed)
    special = {0, ctx.fp.int(1728)}
    for _ in range(budget):
        j = int(rng.integers(0, p))
        if j not in special and is_supersingular(j, ctx):
            return j
    raise SearchExhausted(f"no supersingular j found in {budget} trials for p = {p}")
