"""Supersingular-curve experiments over F_p and F_{p^2}."""

__version__ = "0.1.0"
