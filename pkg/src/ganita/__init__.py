"""Exact reconstructions of early Indian mathematical procedures."""

from .core import ExactScalar, Length, Rational, compare, convert, reduce
from .errors import DomainError, GanitaError, InexactError, ParseError

__version__ = "0.1.0"

__all__ = [
    "DomainError",
    "ExactScalar",
    "GanitaError",
    "InexactError",
    "Length",
    "ParseError",
    "Rational",
    "compare",
    "convert",
    "reduce",
]
