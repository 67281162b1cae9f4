"""
Exact reference values for the registry constants.

Everything here uses unbounded integers and rationals on purpose: these
values certify the extractor and are never reached from it.
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, List

from ..core.base import TermFactorization
from ..core.extractor import format_digits
from ..series import lookup, tail_cutoff

logger = logging.getLogger(__name__)

MIN_GUARD_DIGITS = 15
ORACLE_GUARD_BITS = 40


@dataclass
class ReferenceDigits:
    """Integer part and D exact fractional digits of a constant in base B."""
    constant: str
    base: int
    integer_part: str
    fractional: str
    precision_terms: int
    guard_digits: int

    def digit_width(self) -> int:
        return 1 if self.base <= 36 else len(str(self.base - 1))

    def digit_at(self, position: int) -> str:
        """The fractional digit at 1-based ``position``."""
        width = self.digit_width()
        if not 1 <= position <= len(self.fractional) // width:
            raise ValueError(f"position {position} outside the reference range")
        start = (position - 1) * width
        return self.fractional[start:start + width]

    def __str__(self) -> str:
        return f"{self.integer_part}.{self.fractional}"


def exact_term(series, n: int) -> Fraction:
    """The unreduced series term c^n n^(-s) / C(2n, n) as an exact rational.

    ``c = -1`` gives the weight (-1)^(n-1).
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    weight = Fraction(abs(series.c) ** n)
    if series.c < 0 and (n - 1) % 2:
        weight = -weight
    return weight / (Fraction(n) ** series.s * math.comb(2 * n, n))


def reconstruct_term(factorization: TermFactorization) -> Fraction:
    """Rebuild the rational a TermFactorization stands for."""
    value = Fraction(factorization.sign)
    for pp in factorization.numer:
        value *= pp.p ** pp.e
    for pp in factorization.denom:
        value /= pp.p ** pp.e
    return value


def _to_base(value: int, base: int) -> List[int]:
    if value == 0:
        return [0]
    digits = []
    while value:
        value, r = divmod(value, base)
        digits.append(r)
    return digits[::-1]


def guard_digits_for(base: int) -> int:
    return max(MIN_GUARD_DIGITS, math.ceil(ORACLE_GUARD_BITS / math.log2(base)))


def scaled_series_sum(series, cutoff: int, scale: int) -> int:
    """sum_{n<=cutoff} trunc(scale * term_n), one unit of error per term at most."""
    total = 0
    binom = 1
    cpow = 1
    for n in range(1, cutoff + 1):
        binom = binom * (2 * n) * (2 * n - 1) // (n * n)
        cpow *= abs(series.c)
        num = scale * cpow
        den = binom
        if series.s < 0:
            num *= n ** -series.s
        else:
            den *= n ** series.s
        term = num // den
        if series.c < 0 and (n - 1) % 2:
            total -= term
        else:
            total += term
    return total


def reference_digits(constant: str, digits: int, base: int = 10) -> ReferenceDigits:
    """Exact integer part and ``digits`` fractional digits of a constant."""
    if digits < 1:
        raise ValueError(f"digits must be >= 1, got {digits}")
    if not 2 <= base <= 256:
        raise ValueError(f"base must be in 2..256, got {base}")

    series = lookup(constant)
    guard = guard_digits_for(base)
    precision = digits + guard
    cutoff = tail_cutoff(series, precision, base, 20)
    scale = base ** precision

    total = scaled_series_sum(series, cutoff, scale)
    value = (series.u * total + series.v * scale) // series.w

    whole, frac = divmod(value, scale)
    frac_digits = _to_base(frac, base)
    frac_digits = [0] * (precision - len(frac_digits)) + frac_digits
    logger.debug("%s: reference of %d digits in base %d from %d terms",
                 series.name, digits, base, cutoff)
    return ReferenceDigits(
        constant=series.name,
        base=base,
        integer_part=format_digits(_to_base(whole, base), base),
        fractional=format_digits(frac_digits[:digits], base),
        precision_terms=cutoff,
        guard_digits=guard,
    )


def _closed_forms(mp) -> Dict[str, Callable]:
    return {
        'pi_eq1': lambda: mp.pi,
        'pi_eq3': lambda: mp.pi,
        'pi_sqrt3': lambda: mp.pi * mp.sqrt(3),
        'pi_squared': lambda: mp.pi ** 2,
        'zeta3': lambda: mp.zeta(3),
        'golden_ln': lambda: 2 / mp.sqrt(5) * mp.log((1 + mp.sqrt(5)) / 2),
    }


def named_constant(name: str, digits: int) -> str:
    """The closed form of a registry constant, truncated to ``digits`` decimals.

    Evaluated with mpmath, independently of the series.
    """
    from .. import require_dependency
    require_dependency('mpmath')
    from mpmath import mp

    series = lookup(name)
    with mp.workdps(digits + 30):
        x = _closed_forms(mp)[series.name]()
        whole = int(mp.floor(x))
        frac = int(mp.floor((x - whole) * mp.mpf(10) ** digits))
    return f"{whole}.{str(frac).zfill(digits)}"
