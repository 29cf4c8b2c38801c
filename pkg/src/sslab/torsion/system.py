"""Division-polynomial systems on the Legendre family y^2 = x(x-1)(x-a)."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import prod

import sympy

from ..errors import BadEll, ConfigError, CosetOrderInvalid, EmptyEllSet

KINDS = ("basic", "prime_power", "coset", "hybrid")


@dataclass(frozen=True)
class Variant:
    kind: str = "basic"
    r: int | None = None  # coset order, r | p^2 - 1
    mu: int | None = None  # coset shift as an F_{p^2} encoding; drawn from mu_seed when None
    mu_seed: int = 0
    dropped: tuple = ()  # hybrid: levels whose equations are left out

    @property
    def label(self) -> str:
        if self.kind == "coset":
            return f"coset(r={self.r})"
        if self.kind == "hybrid":
            return "hybrid(drop=" + ";".join(map(str, self.dropped)) + ")"
        return self.kind


def prime_power(q: int):
    """(ell, e) with q = ell^e, or None."""
    f = sympy.factorint(q)
    if len(f) != 1:
        return None
    (ell, e), = f.items()
    return int(ell), int(e)


@dataclass(frozen=True)
class TorsionSystem:
    p: int
    ells: tuple
    variant: Variant
    equations: tuple
    variables: tuple
    pinning: bool = field(default=False)

    @property
    def active(self) -> tuple:
        return tuple(l for l in self.ells if l not in self.variant.dropped)


def _pins(p: int, ells) -> bool:
    """At most one multiple of 4 * prod(ells) in the F_{p^2} Hasse interval [(p-1)^2, (p+1)^2]."""
    L = 4 * prod(ells)
    lo, hi = (p - 1) ** 2, (p + 1) ** 2
    return hi // L - (lo - 1) // L <= 1


def _check_ell(p, q, kind):
    pp = prime_power(q) if q > 1 else None
    if pp is None or pp[0] == 2 or pp[0] == p:
        raise BadEll(f"{q}: levels must be powers of an odd prime other than p")
    if kind != "prime_power" and pp[1] != 1:
        raise BadEll(f"{q}: prime powers need the prime_power variant")
    if kind == "basic" and (p + 1) % q:
        raise BadEll(f"{q} does not divide p + 1 = {p + 1}")
    return pp


def build_system(p: int, ells, variant: Variant | str = "basic") -> TorsionSystem:
    if isinstance(variant, str):
        variant = Variant(variant)
    if variant.kind not in KINDS:
        raise ConfigError(f"unknown torsion variant {variant.kind!r}")
    ells = tuple(sorted(set(int(l) for l in ells)))
    if not ells:
        raise EmptyEllSet("no torsion levels given")
    if variant.kind == "coset":
        r = variant.r
        if r is None or r < 1 or (p * p - 1) % r:
            raise CosetOrderInvalid(f"coset order {r} must divide p^2 - 1 = {p * p - 1}")
    if variant.kind == "hybrid" and not set(variant.dropped) <= set(ells):
        raise BadEll("dropped levels must be among the system's levels")
    eqs, vars_ = [], []
    for q in ells:
        ell, e = _check_ell(p, q, variant.kind)
        if q in variant.dropped:
            continue
        if variant.kind == "prime_power" and e > 1:
            xs = [f"x_{q}_{i}" for i in range(1, e + 1)]
            vars_ += xs
            eqs.append(f"{xs[0]}^(p^2) - {xs[0]} = 0")
            for i in range(e - 1):
                # x-only multiplication-by-ell map N_ell / D_ell
                eqs.append(f"{xs[i + 1]} * D_{ell}({xs[i]}, a) - N_{ell}({xs[i]}, a) = 0")
            eqs.append(f"psi_{ell}({xs[-1]}, a) = 0")
            continue
        x = f"x_{q}"
        vars_.append(x)
        eqs.append(f"psi_{q}({x}, a) = 0")
        if variant.kind == "coset":
            eqs.append(f"(mu * {x})^{variant.r} - 1 = 0")
        else:
            eqs.append(f"{x}^(p^2) - {x} = 0")
    return TorsionSystem(p, ells, variant, tuple(eqs), tuple(vars_) + ("a",), _pins(p, ells))
