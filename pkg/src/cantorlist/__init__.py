"""Enumerate the real algebraic numbers by height, with exact arithmetic."""

from .catalog import CatalogEntry, PhiTable, build_catalog, emit, phi_table, verify_golden
from .intpoly import DomainError, Poly
from .irreducibility import FactorWitness, is_irreducible, oracle_factor_search
from .realroots import AlgebraicReal, Interval, compare, isolate_roots, refine_to

__all__ = [
    "AlgebraicReal", "CatalogEntry", "DomainError", "FactorWitness", "Interval", "PhiTable", "Poly",
    "build_catalog", "compare", "emit", "is_irreducible", "isolate_roots", "oracle_factor_search",
    "phi_table", "refine_to", "verify_golden",
]
__version__ = "0.1.0"
