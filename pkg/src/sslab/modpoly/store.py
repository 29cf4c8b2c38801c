from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

import sympy

from ..algebra.field import FieldCtx, field_make
from ..errors import MissingLevel
from .build import SMALL_LEVEL_BOUND, modular_poly_composite, modular_poly_prime, modular_poly_qexp
from .dbfile import cache_load, cache_path, cache_store, parse_db
from .records import ModPolyRecord, identity_record

QEXP_BOUND = 61


@dataclass
class ModPolyStore:
    """Where Phi_n mod p comes from, in order: memory, database file, disk cache, in-process.

    In-process prime levels use the q-expansion up to ``qexp_bound`` (or Velu interpolation
    up to the small-level bound when ``method='velu'``); composite levels are interpolated
    from cyclic neighbours. Anything beyond those bounds needs a database.
    """

    p: int
    db_path: str | Path | None = None
    cache_dir: str | Path | None = None
    method: str = "qexp"
    qexp_bound: int = QEXP_BOUND
    ctx: FieldCtx | None = None
    _mem: dict = field(default_factory=dict, repr=False)
    _db: dict | None = field(default=None, repr=False)

    def __post_init__(self):
        if self.ctx is None:
            self.ctx = field_make(self.p)

    def _from_db(self, n):
        if self.db_path is None:
            return None
        if self._db is None:
            self._db = parse_db(self.db_path, None, self.p)
        return self._db.get(n)

    def in_process_bound(self, ell: int) -> bool:
        if self.method == "velu":
            return ell <= SMALL_LEVEL_BOUND and ell != self.p
        return ell <= self.qexp_bound and self.p > ell + 1

    def _build_prime(self, ell):
        if not self.in_process_bound(ell):
            raise MissingLevel(f"Phi_{ell} is beyond the in-process bound; supply a database")
        if self.method == "velu":
            return modular_poly_prime(ell, self.p, self.ctx)
        return modular_poly_qexp(ell, self.p)

    def get(self, n: int) -> ModPolyRecord:
        if n in self._mem:
            return self._mem[n]
        rec = self._from_db(n)
        if rec is None and self.cache_dir is not None:
            rec = cache_load(self.cache_dir, n, self.p)
        if rec is None:
            if n == 1:
                rec = identity_record(self.p)
            elif sympy.isprime(n):
                rec = self._build_prime(n)
            else:
                primes = {ell: self.get(ell) for ell in sympy.primefactors(n)}
                rec = modular_poly_composite(n, self.p, primes, self.ctx)
            if self.cache_dir is not None:
                cache_store(self.cache_dir, rec)
        self._mem[n] = rec
        return rec

    def available(self, n: int) -> bool:
        """Whether get(n) can succeed without building anything beyond the configured sources."""
        if n in self._mem or self._from_db(n) is not None:
            return True
        if self.cache_dir is not None and cache_path(self.cache_dir, n, self.p).exists():
            return True
        if n == 1:
            return True
        if sympy.isprime(n):
            return self.in_process_bound(n)
        return all(self.available(ell) for ell in sympy.primefactors(n))

    def require(self, levels) -> None:
        missing = sorted(n for n in set(levels) if not self.available(n))
        if missing:
            raise MissingLevel(f"Phi_n unavailable for n in {missing[:5]}{'...' if len(missing) > 5 else ''}; "
                               "supply a database")

    def primes_for(self, n: int) -> dict:
        return {ell: self.get(ell) for ell in sympy.primefactors(n)}
