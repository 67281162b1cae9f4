"""Extraction path: value types, arithmetic kernel, factorisation, splitting, extractor."""

from .base import (
    DigitResult,
    FixedPointFrac,
    PrimePower,
    ScaledNumerator,
    SeriesDef,
    SplitDecomposition,
    TermFactorization,
    UnitFraction,
)
from .errors import ConfigError, ModulusOverflow, NotCoprime, NthDigitsError, UnknownConstant

__all__ = [
    'DigitResult',
    'FixedPointFrac',
    'PrimePower',
    'ScaledNumerator',
    'SeriesDef',
    'SplitDecomposition',
    'TermFactorization',
    'UnitFraction',
    'ConfigError',
    'ModulusOverflow',
    'NotCoprime',
    'NthDigitsError',
    'UnknownConstant',
]
