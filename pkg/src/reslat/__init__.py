"""Finite residuated lattices, ideal lattices of finite commutative rings,
ordinal products and small-size classification."""

from .classify import are_isomorphic, canonical_key, enumerate_algebras, enumerate_lattice_skeletons
from .core import (
    FiniteLattice,
    ResiduatedLattice,
    check_identities_c1_c5,
    check_properties,
    residuated,
    validate_lattice,
    validate_residuated,
)
from .expr import DirProd, Literal, OrdProd, Ring, render
from .ideal_lattice import build_ideal_lattice, classify_ring_logic, is_multiplication_ring
from .ordinal import evaluate_expr, ordinal_product
from .rings import PolyQuot, Product, TableSpec, Zn, build_ring, enumerate_ideals

__all__ = [
    "DirProd", "FiniteLattice", "Literal", "OrdProd", "PolyQuot", "Product", "ResiduatedLattice",
    "Ring", "TableSpec", "Zn", "are_isomorphic", "build_ideal_lattice", "build_ring",
    "canonical_key", "check_identities_c1_c5", "check_properties", "classify_ring_logic",
    "enumerate_algebras", "enumerate_ideals", "enumerate_lattice_skeletons", "evaluate_expr",
    "is_multiplication_ring", "ordinal_product", "render", "residuated", "validate_lattice",
    "validate_residuated",
]
