"""Counter-based random streams keyed by (seed, label)."""

from __future__ import annotations

import hashlib

import numpy as np


def _key(seed: int, label: str) -> int:
    h = hashlib.sha256(f"{int(seed) & ((1 << 64) - 1)}/{label}".encode()).digest()
    return int.from_bytes(h[:16], "little")


def rng(seed: int, label: str = "") -> np.random.Generator:
    """A Philox generator fully determined by (seed, label); distinct labels give independent streams."""
    return np.random.Generator(np.random.Philox(key=_key(seed, label)))


def subseed(seed: int, label: str) -> int:
    """A 64-bit seed derived from (seed, label), for APIs that take integers."""
    return _key(seed, label) & ((1 << 64) - 1)
