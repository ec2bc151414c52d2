"""Exact computations for Niemeier lattices, the Leech lattice, and the
weight-one Lie algebras of holomorphic c = 24 vertex operator algebras."""

from .errors import DomainError, LeechBoundary, NotFound

__all__ = ["DomainError", "LeechBoundary", "NotFound"]
__version__ = "0.1.0"
