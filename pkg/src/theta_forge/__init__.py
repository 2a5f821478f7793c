"""Finite semigroup laboratory: right regular representations, theta / theta*
kernels, one-sided sandwich semigroups and exhaustive verification."""

__version__ = "0.1.0"

from .core import FiniteSemigroup, from_table, parse, product_set, serialize
from .congruence import Congruence, quotient, rrr, theta, theta_star
from .construction import SandwichSpec, p_construct

__all__ = [
    "Congruence",
    "FiniteSemigroup",
    "SandwichSpec",
    "from_table",
    "p_construct",
    "parse",
    "product_set",
    "quotient",
    "rrr",
    "serialize",
    "theta",
    "theta_star",
]
