"""
Exception hierarchy for the digit extraction package.

Every error raised on purpose by the package derives from ``NthDigitsError``
and from the builtin exception it specialises, so callers that only know
about ``ValueError`` or ``OverflowError`` keep working.
"""

from typing import Iterable, Optional


class NthDigitsError(Exception):
    """Base class for all package errors."""


class NotCoprime(NthDigitsError, ValueError):
    """Two moduli (or a value and a modulus) share a factor."""

    def __init__(self, a: int, b: int, gcd: Optional[int] = None):
        self.a = a
        self.b = b
        self.gcd = gcd
        detail = f" (gcd={gcd})" if gcd is not None else ""
        super().__init__(f"{a} and {b} are not coprime{detail}")


class ModulusOverflow(NthDigitsError, OverflowError):
    """A modulus does not fit the wide lane of the arithmetic kernel."""

    def __init__(self, modulus: int, limit_bits: int, context: str = ""):
        self.modulus = modulus
        self.limit_bits = limit_bits
        where = f" in {context}" if context else ""
        super().__init__(
            f"modulus of {modulus.bit_length()} bits exceeds the "
            f"{limit_bits}-bit limit{where}"
        )


class UnknownConstant(NthDigitsError, ValueError):
    """The requested constant is not in the series registry."""

    def __init__(self, name: str, available: Iterable[str], reason: str = ""):
        self.name = name
        self.available = sorted(available)
        message = f"Unknown constant: {name}. Available: {self.available}"
        if reason:
            message = f"{message}. {reason}"
        super().__init__(message)


class ConfigError(NthDigitsError, ValueError):
    """Invalid command line or environment configuration."""
