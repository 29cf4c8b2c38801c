"""Supersingular l-isogeny graphs as Brandt matrices."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

import numpy as np

from ..algebra.field import FieldCtx, field_make
from ..algebra.poly import roots_list
from ..curves.walk import find_base_supersingular
from ..errors import DisconnectedClosure, EllEqualsP, SymmetryUnavailable


@dataclass(frozen=True)
class IsogenyGraph:
    p: int
    ell: int
    vertices: tuple  # sorted F_{p^2} encodings
    brandt: np.ndarray  # integer matrix, rows indexed like vertices

    @property
    def N(self) -> int:
        return len(self.vertices)

    def index(self, j: int) -> int:
        from ..errors import VertexUnknown

        try:
            return self._pos[j]
        except KeyError:
            raise VertexUnknown(f"{j} is not a vertex") from None

    @property
    def _pos(self):
        return {v: i for i, v in enumerate(self.vertices)}


def neighbors(j: int, rec, ctx: FieldCtx) -> list[int]:
    """Roots of Phi_ell(j, Y) in F_{p^2}, repeated by multiplicity, sorted."""
    f = rec.poly.specialize(0, j, ctx.fp2)
    return [r for r, m in roots_list(ctx.fp2, f.coeffs) for _ in range(m)]


def _check(p, ell):
    if p % 12 != 1:
        raise SymmetryUnavailable(f"p = {p} is not 1 mod 12, so T_ell need not be symmetric")
    if ell == p:
        raise EllEqualsP("ell must differ from p")


def brandt_matrix(p: int, ell: int, vertices, store=None, ctx: FieldCtx | None = None) -> np.ndarray:
    _check(p, ell)
    ctx = ctx or field_make(p)
    if store is None:
        from ..modpoly.store import ModPolyStore

        store = ModPolyStore(p, ctx=ctx)
    rec = store.get(ell)
    pos = {v: i for i, v in enumerate(vertices)}
    T = np.zeros((len(vertices), len(vertices)), dtype=np.int64)
    for i, j in enumerate(vertices):
        for k in neighbors(j, rec, ctx):
            if k not in pos:
                raise DisconnectedClosure(f"neighbour {k} of {j} is outside the vertex set")
            T[i, pos[k]] += 1
    return T


def build_graph(p: int, ell: int, store=None, ctx: FieldCtx | None = None, seed: int = 0) -> IsogenyGraph:
    """Closure of a base supersingular j under ell-isogenies, with its Brandt matrix."""
    _check(p, ell)
    ctx = ctx or field_make(p)
    if store is None:
        from ..modpoly.store import ModPolyStore

        store = ModPolyStore(p, ctx=ctx)
    rec = store.get(ell)
    start = find_base_supersingular(ctx, seed=seed)
    seen = {start}
    todo = deque([start])
    while todo:
        j = todo.popleft()
        nb = neighbors(j, rec, ctx)
        if len(nb) != ell + 1:
            raise DisconnectedClosure(f"{j} has {len(nb)} neighbours over F_p^2, expected {ell + 1}")
        for k in nb:
            if k not in seen:
                seen.add(k)
                todo.append(k)
    verts = tuple(sorted(seen))
    if len(verts) != (p - 1) // 12:
        raise DisconnectedClosure(f"closure has {len(verts)} vertices, expected {(p - 1) // 12}")
    T = brandt_matrix(p, ell, verts, store, ctx)
    return IsogenyGraph(p, ell, verts, T)
