"""
The digit extraction driver.

frac(B^(d-1) * x) is accumulated in a 128-bit wraparound fixed-point
fraction: every series term is factorised, split into unit-fraction
residues, shifted by B^(d-1) residue-wise and added (or subtracted). No
value whose width depends on d or n is ever formed; the widest scalar is a
double-width product of two residues below 2**96.

Most residues travel as numpy uint64 vectors over moduli below 2**32 and
are converted to fixed point limb by limb; only the rare prime powers above
that go through the scalar lanes.
"""

import logging
import math
import time
from concurrent.futures import ProcessPoolExecutor
from typing import List, NamedTuple, Optional, Sequence, Tuple

import numpy as np

from .base import (
    DEFAULT_GUARD_BITS, FRAC_BITS, FRAC_MASK, WIDE_LANE_BITS, WIDE_LANE_LIMIT,
    DigitResult, FixedPointFrac, PrimePower, ScaledNumerator, SeriesDef,
)
from .binomfactor import prime_table, term_exponents
from .errors import ModulusOverflow
from .fracsplit import split_scaled
from .modarith import mul_mod, pow_mod

logger = logging.getLogger(__name__)

DIGIT_ALPHABET = "0123456789ABCDEFGHIJKLMNOPQRSTUVWXYZ"
MAX_BASE = 256
MAX_COUNT = 32
# low accumulator bits kept below the last digit of a window
READ_GUARD_BITS = 8
_LIMB_BITS = 32
# smallest number of terms per worker that goes to a process pool
PARALLEL_MIN_TERMS = 64


class TermContribution(NamedTuple):
    """One term's share of the accumulator."""
    delta: FixedPointFrac
    sign: int
    ulps: int
    modulus_bits: int = 0


class PartitionSum(NamedTuple):
    value: int
    ulps: int
    residues: int
    modulus_bits: int


def frac_of_rational(p: int, q: int, d: int, base: int) -> FixedPointFrac:
    """floor(frac(B^d * p/q) * 2^F), exact to within one ulp."""
    if q < 1:
        raise ValueError(f"denominator must be >= 1, got {q}")
    if q >= WIDE_LANE_LIMIT:
        raise ModulusOverflow(q, WIDE_LANE_BITS, "frac_of_rational")
    if q == 1:
        return FixedPointFrac(0)
    r = mul_mod(pow_mod(base, d, q), p % q, q)
    return FixedPointFrac.from_residue(r, q)


def fixed_point_sum(residues: np.ndarray, moduli: np.ndarray) -> int:
    """sum of floor(a_j/q_j * 2^F) over a narrow-lane batch, by limb-wise long division."""
    r = residues.copy()
    total = 0
    for _ in range(FRAC_BITS // _LIMB_BITS):
        r <<= np.uint64(_LIMB_BITS)
        limbs = r // moduli
        r -= limbs * moduli
        total = (total << _LIMB_BITS) + int(limbs.sum())
    return total


def term_contribution(series: SeriesDef, n: int, d: int, base: int,
                      primes: Optional[Sequence[int]] = None) -> TermContribution:
    """frac(B^d * u * term_n / w) as an unsigned fixed-point delta plus its sign.

    ``d`` is the shift exponent. ``ulps`` counts the residues converted,
    each of which rounds down by less than one ulp.
    """
    term = term_exponents(series, n, primes)
    if not len(term.denom_primes):
        return TermContribution(FixedPointFrac(0), term.sign, 0, 0)

    mult = ScaledNumerator(base=base, exponent=d,
                           numer=[PrimePower(p, e) for p, e in term.numer])
    batch = split_scaled(mult, term.denom_primes, term.denom_exponents)

    total = fixed_point_sum(batch.residues, batch.moduli)
    for unit in batch.wide:
        total += FixedPointFrac.from_residue(unit.a, unit.q).value
    return TermContribution(FixedPointFrac(total & FRAC_MASK), term.sign,
                            len(batch), batch.widest_bits())


def _sum_partition(series: SeriesDef, indices: Sequence[int], d: int, base: int,
                   prime_limit: int) -> PartitionSum:
    """Sum the contributions of a subset of terms; runs inside worker processes."""
    primes = prime_table(prime_limit)
    value = 0
    ulps = 0
    widest = 0
    for n in indices:
        contribution = term_contribution(series, n, d, base, primes)
        if contribution.sign < 0:
            value -= contribution.delta.value
        else:
            value += contribution.delta.value
        value &= FRAC_MASK
        ulps += contribution.ulps
        widest = max(widest, contribution.modulus_bits)
    logger.debug("%s: partition of %d terms done (%d residues)",
                 series.name, len(indices), ulps)
    return PartitionSum(value, ulps, ulps, widest)


def partition_terms(cutoff: int, parts: int) -> List[range]:
    """Strided partition of 1..cutoff so every part gets small and large n."""
    parts = max(1, min(parts, cutoff)) if cutoff else 1
    return [range(1 + i, cutoff + 1, parts) for i in range(parts)]


def accumulate(series: SeriesDef, cutoff: int, d: int, base: int,
               workers: int = 1, partitions: Optional[List[Sequence[int]]] = None
               ) -> PartitionSum:
    """Wraparound sum of terms 1..cutoff, optionally across worker processes.

    The result is bit-identical for any partition of the terms.
    """
    prime_limit = max(2 * cutoff, 2)
    if partitions is None:
        partitions = partition_terms(cutoff, workers)

    if workers <= 1 or len(partitions) == 1 or cutoff < PARALLEL_MIN_TERMS * workers:
        sums = [_sum_partition(series, part, d, base, prime_limit) for part in partitions]
    else:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            futures = [executor.submit(_sum_partition, series, list(part), d, base, prime_limit)
                       for part in partitions]
            sums = [future.result() for future in futures]

    value = 0
    ulps = 0
    widest = 0
    for part in sums:
        value = (value + part.value) & FRAC_MASK
        ulps += part.ulps
        widest = max(widest, part.modulus_bits)
    return PartitionSum(value, ulps, ulps, widest)


def _digit_values(value: int, base: int, count: int) -> List[int]:
    digits = []
    for _ in range(count):
        value *= base
        digits.append(value >> FRAC_BITS)
        value &= FRAC_MASK
    return digits


def format_digits(values: Sequence[int], base: int) -> str:
    """Render digit values; bases above 36 use fixed-width decimal groups."""
    if base <= len(DIGIT_ALPHABET):
        return "".join(DIGIT_ALPHABET[v] for v in values)
    width = len(str(base - 1))
    return "".join(str(v).zfill(width) for v in values)


def max_window(base: int) -> int:
    """Most digits of one base that fit above the read guard bits."""
    return min(MAX_COUNT, int((FRAC_BITS - READ_GUARD_BITS) // math.log2(base)))


def _check_window(base: int, count: int) -> None:
    if count * math.log2(base) > FRAC_BITS - READ_GUARD_BITS:
        raise ValueError(f"{count} base-{base} digits do not fit in "
                         f"{FRAC_BITS - READ_GUARD_BITS} bits (at most {max_window(base)})")


def read_digits(acc: FixedPointFrac, base: int, count: int,
                total_ulps: int) -> Tuple[str, int]:
    """Leading digits of acc and how many survive a +-total_ulps perturbation."""
    _check_window(base, count)

    values = _digit_values(acc.value, base, count)
    digits = format_digits(values, base)
    if acc.value < total_ulps or acc.value + total_ulps > FRAC_MASK:
        return digits, 0

    low = _digit_values(acc.value - total_ulps, base, count)
    high = _digit_values(acc.value + total_ulps, base, count)
    confidence = 0
    for mid, lo, hi in zip(values, low, high):
        if not lo == mid == hi:
            break
        confidence += 1
    return digits, confidence


def tail_ulps_for(base: int, count: int, guard_bits: int) -> int:
    """Ulps charged for the dropped tail of a window of ``count`` digits."""
    return 1 << max(0, FRAC_BITS - guard_bits - (count + 1) * (base.bit_length() - 1))


def extract_digits(constant: str, d: int, base: int = 10, count: int = 1,
                   guard_bits: int = DEFAULT_GUARD_BITS, workers: int = 1) -> DigitResult:
    """Digits d .. d+count-1 after the radix point of a registry constant."""
    from ..series import lookup, tail_cutoff

    if d < 1:
        raise ValueError(f"position must be >= 1, got {d}")
    if not 2 <= base <= MAX_BASE:
        raise ValueError(f"base must be in 2..{MAX_BASE}, got {base}")
    if not 1 <= count <= MAX_COUNT:
        raise ValueError(f"count must be in 1..{MAX_COUNT}, got {count}")
    if guard_bits < 0:
        raise ValueError(f"guard_bits must be >= 0, got {guard_bits}")
    _check_window(base, count)

    series = lookup(constant)
    start = time.perf_counter()

    shift = d - 1
    cutoff = tail_cutoff(series, d + count, base, guard_bits + abs(series.u).bit_length())
    summed = accumulate(series, cutoff, shift, base, workers)

    acc = FixedPointFrac(summed.value) + frac_of_rational(series.v, series.w, shift, base)
    rounding_ulps = summed.ulps + 1
    tail_ulps = tail_ulps_for(base, count, guard_bits)
    digits, confidence = read_digits(acc, base, count, rounding_ulps + tail_ulps)
    elapsed = time.perf_counter() - start

    logger.info("%s base=%d pos=%d digits=%s confidence=%d terms=%d (%.3fs)",
                series.name, base, d, digits, confidence, cutoff, elapsed)
    return DigitResult(
        constant=series.name,
        base=base,
        position=d,
        digits=digits,
        confidence=confidence,
        error_bound_ulps=rounding_ulps,
        terms_used=cutoff,
        elapsed=elapsed,
        count=count,
        guard_bits=guard_bits,
        integer_part=series.integer_part,
        accumulator=acc.value,
        tail_ulps=tail_ulps,
        diagnostics={
            'residues': summed.residues,
            'max_modulus_bits': summed.modulus_bits,
            'max_scalar_bits': 2 * summed.modulus_bits,
            'shift_exponent': shift,
            'workers': workers,
            'tail_ulps': tail_ulps,
        },
    )
