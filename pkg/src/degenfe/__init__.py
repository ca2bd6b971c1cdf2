"""Exact representation of polynomials by degenerate Frobenius-Euler polynomials."""

from .exact_poly import BACKEND, Poly, PolySeries, Rational, as_rational
from .families import Family, FamilyKind, family_poly, family_table, gf_oracle
from .representation import (
    Expansion,
    Variant,
    basis_convert_oracle,
    reconstruct,
    represent,
    represent_classical,
    represent_de,
    represent_de_r,
    represent_dfe,
    represent_dfe_r,
)

__all__ = [
    "BACKEND",
    "Expansion",
    "Family",
    "FamilyKind",
    "Poly",
    "PolySeries",
    "Rational",
    "Variant",
    "as_rational",
    "basis_convert_oracle",
    "family_poly",
    "family_table",
    "gf_oracle",
    "reconstruct",
    "represent",
    "represent_classical",
    "represent_de",
    "represent_de_r",
    "represent_dfe",
    "represent_dfe_r",
]

__version__ = "0.1.0"
