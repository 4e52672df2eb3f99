"""Exact computations in quantum shuffle algebras."""

from ._core import (
    Basis,
    Datum,
    Element,
    TheoryViolation,
    UsageError,
    is_lyndon,
    lyndon_factorization,
    run_cli,
    shifted_character,
    shuffle,
    skew_character,
)

__all__ = [
    "Basis",
    "Datum",
    "Element",
    "TheoryViolation",
    "UsageError",
    "is_lyndon",
    "lyndon_factorization",
    "run_cli",
    "shifted_character",
    "shuffle",
    "skew_character",
]
