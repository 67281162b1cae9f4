"""
Brute-force verification oracles.

Reference digits from exact scaled-integer summation, exact term rationals,
the BBP hexadecimal baseline for pi, and range verification of the
extractor. Nothing on the extraction path imports this package.
"""

from .bbp import bbp_hex_digits, bbp_hex_pi
from .reference import (
    ReferenceDigits,
    exact_term,
    named_constant,
    reconstruct_term,
    reference_digits,
)
from .verify import VerifyReport, verify_range

__all__ = [
    'ReferenceDigits',
    'VerifyReport',
    'bbp_hex_digits',
    'bbp_hex_pi',
    'exact_term',
    'named_constant',
    'reconstruct_term',
    'reference_digits',
    'verify_range',
]
