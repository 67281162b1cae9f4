"""
Prime enumeration and exact prime-power factorisation of series terms.

Central binomial coefficients are never materialised: their factorisation
is assembled prime by prime from Legendre-type floor sums, which is what
keeps every denominator prime power word-sized. Valuations are taken over a
whole prime table at once with numpy.
"""

import logging
import math
from typing import Dict, Iterator, List, NamedTuple, Optional, Sequence, Tuple

import numpy as np

from .base import PrimePower, SeriesDef, TermFactorization, checked_power

logger = logging.getLogger(__name__)

SEGMENT_SIZE = 1 << 16

__all__ = [
    'small_primes',
    'primes_up_to',
    'prime_table',
    'binomial_valuation',
    'binomial_valuations',
    'integer_valuation',
    'integer_valuations',
    'factorial_valuation',
    'factor_central_binomial',
    'term_exponents',
    'term_factorization',
    'checked_power',
]


def _simple_sieve(limit: int) -> np.ndarray:
    if limit < 2:
        return np.array([], dtype=np.int64)
    is_prime = np.ones(limit + 1, dtype=bool)
    is_prime[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if is_prime[p]:
            is_prime[p * p::p] = False
    return np.flatnonzero(is_prime).astype(np.int64)


def small_primes(limit: int) -> List[int]:
    """Return the primes <= limit with a plain sieve."""
    return _simple_sieve(limit).tolist()


def _segments(limit: int, segment_size: int) -> Iterator[np.ndarray]:
    root = math.isqrt(limit) if limit > 0 else 0
    base = _simple_sieve(root)
    yield base

    low = max(root + 1, 2)
    while low <= limit:
        high = min(low + segment_size, limit + 1)  # exclusive
        mask = np.ones(high - low, dtype=bool)
        for p in base.tolist():
            start = max(p * p, -(-low // p) * p)
            if start >= high:
                continue
            mask[start - low::p] = False
        yield np.flatnonzero(mask).astype(np.int64) + low
        low = high


def primes_up_to(limit: int, segment_size: int = SEGMENT_SIZE) -> Iterator[int]:
    """Yield every prime <= limit in increasing order.

    Only the sieving primes up to sqrt(limit) and one segment are held in
    memory at a time.
    """
    for segment in _segments(limit, segment_size):
        yield from segment.tolist()


def prime_table(limit: int, segment_size: int = SEGMENT_SIZE) -> np.ndarray:
    """All primes <= limit as one int64 array."""
    parts = list(_segments(limit, segment_size))
    return np.concatenate(parts) if parts else np.array([], dtype=np.int64)


def binomial_valuation(p: int, n: int) -> int:
    """Exponent of p in C(2n, n): sum over k of floor(2n/p^k) - 2*floor(n/p^k)."""
    if p < 2 or n < 1:
        raise ValueError(f"binomial_valuation needs p >= 2 and n >= 1, got ({p}, {n})")
    two_n = 2 * n
    total = 0
    pk = p
    while pk <= two_n:
        total += two_n // pk - 2 * (n // pk)
        pk *= p
    return total


def binomial_valuations(primes: np.ndarray, n: int) -> np.ndarray:
    """binomial_valuation(p, n) for every p of an int64 prime array."""
    p = np.asarray(primes, dtype=np.int64)
    two_n = 2 * n
    total = np.zeros_like(p)
    pk = p.copy()
    # powers past 2n contribute zero, so they are clamped to keep int64 exact
    while pk.size and (pk <= two_n).any():
        total += two_n // pk - 2 * (n // pk)
        pk = np.minimum(pk, two_n + 1) * p
    return total


def integer_valuation(p: int, n: int) -> int:
    """Largest e with p**e dividing n."""
    if p < 2 or n < 1:
        raise ValueError(f"integer_valuation needs p >= 2 and n >= 1, got ({p}, {n})")
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


def integer_valuations(primes: np.ndarray, n: int) -> np.ndarray:
    p = np.asarray(primes, dtype=np.int64)
    total = np.zeros_like(p)
    pk = p.copy()
    while pk.size:
        hit = n % pk == 0
        if not hit.any():
            break
        total += hit
        pk = np.minimum(pk, n + 1) * p
    return total


def factorial_valuation(p: int, n: int) -> int:
    """Exponent of p in n! (Legendre)."""
    if p < 2 or n < 0:
        raise ValueError(f"factorial_valuation needs p >= 2 and n >= 0, got ({p}, {n})")
    total = 0
    pk = p
    while pk <= n:
        total += n // pk
        pk *= p
    return total


def _small_factorization(k: int) -> Dict[int, int]:
    """Trial division for the tiny affine coefficients of the registry."""
    k = abs(k)
    factors: Dict[int, int] = {}
    d = 2
    while d * d <= k:
        while k % d == 0:
            factors[d] = factors.get(d, 0) + 1
            k //= d
        d += 1
    if k > 1:
        factors[k] = factors.get(k, 0) + 1
    return factors


def _primes_through(limit: int, primes: Optional[Sequence[int]]) -> np.ndarray:
    if primes is None:
        return prime_table(limit)
    table = np.asarray(primes, dtype=np.int64)
    return table[:np.searchsorted(table, limit, side='right')]


def factor_central_binomial(n: int, primes: Optional[Sequence[int]] = None) -> List[PrimePower]:
    """Factorisation of C(2n, n) over the primes <= 2n.

    ``primes`` may supply a presieved ascending prime table covering 2n.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    table = _primes_through(2 * n, primes)
    exponents = binomial_valuations(table, n)
    keep = exponents > 0
    return [PrimePower(p, e) for p, e in zip(table[keep].tolist(), exponents[keep].tolist())]


class TermExponents(NamedTuple):
    """Array form of a reduced term: denominator primes and exponents, numerator pairs."""
    sign: int
    denom_primes: np.ndarray
    denom_exponents: np.ndarray
    numer: List[Tuple[int, int]]


def term_exponents(series: SeriesDef, n: int,
                   primes: Optional[Sequence[int]] = None) -> TermExponents:
    """Net exponent of every prime in u * c^n * n^(-s) / (w * C(2n, n)).

    Net denominator exponent of p is
    v_p(C(2n,n)) + s*v_p(n) + v_p(w) - n*v_p(|c|) - v_p(|u|).
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")

    u_factors = _small_factorization(series.u)
    w_factors = _small_factorization(series.w)
    c_factors = _small_factorization(series.c)
    extra = sorted(p for p in set(u_factors) | set(w_factors) | set(c_factors) if p > 2 * n)

    candidates = np.concatenate([_primes_through(2 * n, primes),
                                 np.array(extra, dtype=np.int64)])
    exponents = binomial_valuations(candidates, n)
    if series.s:
        exponents += series.s * integer_valuations(candidates, n)

    def adjust(factors: Dict[int, int], scale: int):
        for p, k in factors.items():
            exponents[np.searchsorted(candidates, p)] += scale * k

    adjust(w_factors, 1)
    adjust(c_factors, -n)
    adjust(u_factors, -1)

    denom = exponents > 0
    numer = exponents < 0
    return TermExponents(
        sign=series.term_sign(n),
        denom_primes=candidates[denom],
        denom_exponents=exponents[denom],
        numer=list(zip(candidates[numer].tolist(), (-exponents[numer]).tolist())),
    )


def term_factorization(series: SeriesDef, n: int,
                       primes: Optional[Sequence[int]] = None) -> TermFactorization:
    """Reduced factorisation of u * c^n * n^(-s) / (w * C(2n, n)).

    Raises ModulusOverflow when a denominator prime power leaves the wide lane.
    """
    term = term_exponents(series, n, primes)
    denom = []
    for p, e in zip(term.denom_primes.tolist(), term.denom_exponents.tolist()):
        checked_power(p, e)
        denom.append(PrimePower(p, e))
    numer = [PrimePower(p, e) for p, e in term.numer]
    return TermFactorization(n=n, sign=term.sign, denom=denom, numer=numer)
