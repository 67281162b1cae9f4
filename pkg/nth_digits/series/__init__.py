"""
Registry of constants expressible as central binomial series.

Each entry is data: a weight c, a power s and an affine map (u, v, w) such
that constant = (u*S + v)/w with S = sum_{n>=1} c^n n^(-s) / C(2n, n).
Adding a constant means adding one record to AVAILABLE_SERIES.
"""

import logging
import math
from typing import Dict, List

from ..core.base import SeriesDef
from ..core.binomfactor import factorial_valuation
from ..core.errors import UnknownConstant

logger = logging.getLogger(__name__)

AVAILABLE_SERIES: Dict[str, SeriesDef] = {
    'pi_eq1': SeriesDef(
        name='pi_eq1', c=2, s=-1, u=1, v=-3, w=1,
        description='pi + 3 = sum n 2^n / C(2n, n)',
        display='pi', integer_part='3', aliases=('pi', 'pi@eq1'),
    ),
    'pi_eq3': SeriesDef(
        name='pi_eq3', c=2, s=1, u=2, v=0, w=1,
        description='pi / 2 = sum 2^n / (n C(2n, n))',
        display='pi', integer_part='3', aliases=('pi@eq3',),
    ),
    'pi_sqrt3': SeriesDef(
        name='pi_sqrt3', c=1, s=0, u=27, v=-9, w=2,
        description='sum 1 / C(2n, n) = 1/3 + 2 pi sqrt(3) / 27',
        display='pi*sqrt(3)', integer_part='5',
    ),
    'pi_squared': SeriesDef(
        name='pi_squared', c=1, s=2, u=18, v=0, w=1,
        description='sum 1 / (n^2 C(2n, n)) = pi^2 / 18',
        display='pi^2', integer_part='9',
    ),
    'zeta3': SeriesDef(
        name='zeta3', c=-1, s=3, u=5, v=0, w=2,
        description='sum (-1)^(n-1) / (n^3 C(2n, n)) = 2 zeta(3) / 5',
        display='zeta(3)', integer_part='1',
    ),
    'golden_ln': SeriesDef(
        name='golden_ln', c=-1, s=1, u=1, v=0, w=1,
        description='sum (-1)^(n-1) / (n C(2n, n)) = (2/sqrt(5)) ln(phi)',
        display='(2/sqrt(5))*ln(phi)', integer_part='0',
    ),
}

DEFAULT_SERIES = {'pi': 'pi_eq1'}

EXCLUDED_CONSTANTS: Dict[str, str] = {
    'e': "e = sum 1/n! is excluded: 1/n! eventually contains high powers of 2 "
         "(v_2(n!) = n - popcount(n)), so its terms cannot be split into "
         "word-sized fractions",
}
EXCLUDED_CONSTANTS['exp1'] = EXCLUDED_CONSTANTS['e']

_ALIASES: Dict[str, str] = {}
for _key, _series in AVAILABLE_SERIES.items():
    _ALIASES[_key] = _key
    for _alias in _series.aliases:
        _ALIASES.setdefault(_alias, _key)
_ALIASES.update(DEFAULT_SERIES)


def get_available_constants() -> List[str]:
    """Constant names accepted by lookup, as offered on the command line."""
    return ['pi', 'pi@eq1', 'pi@eq3', 'pi_sqrt3', 'pi_squared', 'zeta3', 'golden_ln']


def lookup(name: str) -> SeriesDef:
    """Return the registry record for a constant name."""
    key = _ALIASES.get(name.strip().lower())
    if key is None:
        reason = EXCLUDED_CONSTANTS.get(name.strip().lower(), "")
        raise UnknownConstant(name, get_available_constants(), reason)
    return AVAILABLE_SERIES[key]


def get_series_info(name: str) -> Dict[str, str]:
    """Describe a registry entry without running anything."""
    series = lookup(name)
    return {
        'name': series.name,
        'constant': series.display,
        'integer_part': series.integer_part,
        'series': series.description,
        'affine': f"({series.u}*S + {series.v}) / {series.w}",
        'weight': f"c={series.c}, s={series.s}",
    }


def term_log_bound(series: SeriesDef, n: int) -> float:
    """Upper bound on log2|term_n| from C(2n, n) >= 4^n / (2 sqrt(n))."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    log_n = math.log2(n)
    return n * math.log2(abs(series.c)) - 2 * n + 1 + 0.5 * log_n - series.s * log_n


def tail_log_bound(series: SeriesDef, cutoff: int) -> float:
    """Upper bound on log2 of sum_{n > cutoff} |term_n|.

    The majorant ratio between consecutive terms is at most
    |c|/4 * (1 + 1/n)^(3/2) for every s >= -1, which gives a geometric tail.
    """
    n = cutoff + 1
    ratio = abs(series.c) / 4 * (1 + 1 / n) ** 1.5
    if ratio >= 1:
        return math.inf
    return term_log_bound(series, n) - math.log2(1 - ratio)


def tail_cutoff(series: SeriesDef, d: int, base: int, guard_bits: int) -> int:
    """Smallest N whose remainder is below 2^-guard_bits * base^-d."""
    if d < 1 or base < 2:
        raise ValueError(f"tail_cutoff needs d >= 1 and base >= 2, got ({d}, {base})")
    target = -(guard_bits + d * math.log2(base))
    cutoff = 0
    while tail_log_bound(series, cutoff) >= target:
        cutoff += 1
    logger.info("%s: %d terms for position %d in base %d (guard %d bits)",
                series.name, cutoff, d, base, guard_bits)
    return cutoff


def explain_exclusion(name: str, n: int = 128) -> Dict[str, object]:
    """Why a constant is not in the class, shown on the n-th term of its series."""
    key = name.strip().lower()
    if key not in EXCLUDED_CONSTANTS:
        raise ValueError(f"{name} is not an excluded constant")
    exponent = factorial_valuation(2, n)
    return {
        'constant': name,
        'term': n,
        'largest_prime_power': f"2^{exponent}",
        'bits': exponent + 1,
        'reason': EXCLUDED_CONSTANTS[key],
    }
