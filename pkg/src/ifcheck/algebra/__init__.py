"""Executable algebra tower: exact rationals, vectors, and equational-law suites."""

from .laws import (
    LawReport,
    LawResult,
    StructureWitness,
    at_level,
    check_laws,
    integer_ring_witness,
    rational_field_witness,
    sample_rational,
    vector_space_witness,
)
from .rational import ONE, ZERO, DivisionByZero, Rational
from .vector import DimensionMismatch, VectorN

__all__ = [
    "DivisionByZero",
    "DimensionMismatch",
    "LawReport",
    "LawResult",
    "ONE",
    "Rational",
    "StructureWitness",
    "VectorN",
    "ZERO",
    "at_level",
    "check_laws",
    "integer_ring_witness",
    "rational_field_witness",
    "sample_rational",
    "vector_space_witness",
]
