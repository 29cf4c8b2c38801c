from .solve import (
    CSV_HEADER,
    TorsionResult,
    beta_product,
    coset_elements,
    coset_restrict,
    eliminate,
    field_elements,
    legendre_is_supersingular,
    level_mask,
    solve,
)
from .system import KINDS, TorsionSystem, Variant, build_system, prime_power

__all__ = [
    "CSV_HEADER",
    "KINDS",
    "TorsionResult",
    "TorsionSystem",
    "Variant",
    "beta_product",
    "build_system",
    "coset_elements",
    "coset_restrict",
    "eliminate",
    "field_elements",
    "legendre_is_supersingular",
    "level_mask",
    "prime_power",
    "solve",
]
