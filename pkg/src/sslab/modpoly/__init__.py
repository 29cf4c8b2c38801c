"""Classical modular polynomials mod p: file ingestion, in-process construction, disk cache."""

from .build import (
    cyclic_neighbors,
    cyclic_neighbors_poly,
    interpolation_nodes,
    modular_poly_composite,
    modular_poly_prime,
    modular_poly_qexp,
    resultant_compose,
)
from .dbfile import cache_load, cache_store, format_records, parse_db, shipped_db, write_atomic
from .qexp import modular_poly_coeffs
from .records import ModPolyRecord, identity_record, psi
from .store import ModPolyStore

__all__ = [
    "ModPolyRecord",
    "ModPolyStore",
    "cache_load",
    "cache_store",
    "cyclic_neighbors",
    "cyclic_neighbors_poly",
    "format_records",
    "identity_record",
    "interpolation_nodes",
    "modular_poly_coeffs",
    "modular_poly_composite",
    "modular_poly_prime",
    "modular_poly_qexp",
    "parse_db",
    "psi",
    "resultant_compose",
    "shipped_db",
    "write_atomic",
]
