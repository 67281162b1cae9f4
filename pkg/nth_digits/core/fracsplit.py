"""
The fraction splitting algorithm.

1/M, with M known only through pairwise coprime prime powers q_j, equals
sum_j a_j/q_j modulo 1 where a_j = (M/q_j)^-1 mod q_j. The integer part is
never formed, and M itself never appears.
"""

import logging
from typing import List, NamedTuple, Sequence, Tuple

import numpy as np

from .base import (
    NARROW_LANE_LIMIT, PrimePower, ScaledNumerator, SplitDecomposition, UnitFraction,
    checked_power,
)
from .errors import NotCoprime
from .modarith import (
    cofactor_products, ext_gcd, lane, mod_inverse, pow_mod, pow_mod_array, pow_mod_arrays,
)

logger = logging.getLogger(__name__)


def split_pair(a: int, b: int) -> Tuple[int, int]:
    """Return (k1, k2) with k1/a + k2/b = 1/(ab) modulo 1."""
    if a < 2 or b < 2:
        raise ValueError(f"split_pair needs moduli >= 2, got ({a}, {b})")
    g = ext_gcd(a, b).g
    if g != 1:
        raise NotCoprime(a, b, g)
    return mod_inverse(b, a), mod_inverse(a, b)


def _check_distinct_primes(factors: Sequence[PrimePower]) -> None:
    seen = {}
    for pp in factors:
        if pp.p in seen:
            raise NotCoprime(seen[pp.p].q, pp.q, pp.p)
        seen[pp.p] = pp


def cofactor_inverses(moduli: Sequence[int]) -> List[int]:
    """(M/q_j)^-1 mod q_j for each q_j, with M the product of all moduli.

    O(k^2) word operations; raises NotCoprime if the moduli are not
    pairwise coprime.
    """
    if moduli and max(moduli) < NARROW_LANE_LIMIT and min(moduli) >= 2:
        cofactors = cofactor_products(np.asarray(moduli, dtype=np.uint64)).tolist()
    else:
        cofactors = []
        for j, qj in enumerate(moduli):
            mul = lane(qj)
            cofactor = 1 % qj
            for i, qi in enumerate(moduli):
                if i != j:
                    cofactor = mul(cofactor, qi % qj)
            cofactors.append(cofactor)

    inverses = []
    for j, qj in enumerate(moduli):
        try:
            inverses.append(mod_inverse(cofactors[j], qj))
        except NotCoprime:
            partner = next(qi for i, qi in enumerate(moduli)
                           if i != j and ext_gcd(qi, qj).g != 1)
            raise NotCoprime(partner, qj, ext_gcd(partner, qj).g) from None
    return inverses


def decompose_moduli(moduli: Sequence[int]) -> SplitDecomposition:
    """Split 1/prod(moduli) over pairwise coprime moduli, keeping input order."""
    for q in moduli:
        if q < 2:
            raise ValueError(f"moduli must be >= 2, got {q}")
    inverses = cofactor_inverses(moduli)
    return SplitDecomposition([UnitFraction(a, q) for a, q in zip(inverses, moduli)])


def decompose(factors: Sequence[PrimePower]) -> SplitDecomposition:
    """Split 1/M into unit-fraction residues ordered by increasing prime."""
    _check_distinct_primes(factors)
    ordered = sorted(factors, key=lambda pp: pp.p)
    return decompose_moduli([pp.q for pp in ordered])


def decompose_pairwise(factors: Sequence[PrimePower]) -> SplitDecomposition:
    """The sequential procedure: fold prime powers in one at a time.

    Every element already split is split again against the newcomer q with
    split_pair: its residue is scaled by k1 = q^-1 mod q_i, and the residue
    of q is the product of the k2 = q_i^-1 mod q.
    Produces the same residues as ``decompose``.
    """
    _check_distinct_primes(factors)
    moduli: List[int] = []
    residues: List[int] = []
    for pp in sorted(factors, key=lambda f: f.p):
        q = pp.q
        mul_q = lane(q)
        fresh = 1 % q
        for idx, qi in enumerate(moduli):
            k1, k2 = split_pair(qi, q)
            residues[idx] = lane(qi)(residues[idx], k1)
            fresh = mul_q(fresh, k2)
        moduli.append(q)
        residues.append(fresh)
    return SplitDecomposition([UnitFraction(a, q) for a, q in zip(residues, moduli)])


def scaled_residues(mult: ScaledNumerator, factors: Sequence[PrimePower]) -> List[UnitFraction]:
    """Residues of B^d * A / M modulo 1, with A given by numerator prime powers.

    a_j = (B^d mod q_j) * (prod p^f mod q_j) * ((M/q_j)^-1 mod q_j) mod q_j.
    The sign of ``mult`` is left to the caller.
    """
    if mult.exponent < 0:
        raise ValueError(f"exponent must be >= 0, got {mult.exponent}")
    _check_distinct_primes(factors)
    denom_by_prime = {pp.p: pp for pp in factors}
    for pp in mult.numer:
        if pp.p in denom_by_prime:
            raise NotCoprime(pp.p, denom_by_prime[pp.p].q, pp.p)

    ordered = sorted(factors, key=lambda pp: pp.p)
    moduli = [pp.q for pp in ordered]
    inverses = cofactor_inverses(moduli)

    out = []
    for q, inv in zip(moduli, inverses):
        mul = lane(q)
        r = pow_mod(mult.base, mult.exponent, q)
        for pp in mult.numer:
            r = mul(r, pow_mod(pp.p, pp.e, q))
        out.append(UnitFraction(mul(r, inv), q))
    return out


class ResidueBatch(NamedTuple):
    """Residues of one scaled term: narrow-lane vectors plus the few wide moduli."""
    residues: np.ndarray
    moduli: np.ndarray
    wide: List[UnitFraction]

    def __len__(self) -> int:
        return len(self.moduli) + len(self.wide)

    def widest_bits(self) -> int:
        bits = [int(self.moduli.max()).bit_length()] if len(self.moduli) else []
        bits.extend(unit.q.bit_length() for unit in self.wide)
        return max(bits, default=0)


def pack_moduli(moduli: np.ndarray, totients: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """Merge pairwise coprime moduli into products below 2**32.

    The smallest modulus is paired with the largest, the second smallest with
    the second largest and so on, as long as the product fits; rounds repeat
    until no pair fits. Totients multiply along.
    """
    while len(moduli) > 1:
        order = np.argsort(moduli, kind='stable')
        q, t = moduli[order], totients[order]
        half = len(q) // 2
        lo, hi = q[:half], q[::-1][:half]
        fits = lo * hi < NARROW_LANE_LIMIT
        if not fits.any():
            break
        lo_t, hi_t = t[:half], t[::-1][:half]
        middle = slice(half, len(q) - half)
        moduli = np.concatenate([(lo * hi)[fits], lo[~fits], hi[~fits], q[middle]])
        totients = np.concatenate([(lo_t * hi_t)[fits], lo_t[~fits], hi_t[~fits], t[middle]])
    return moduli, totients


def split_scaled(mult: ScaledNumerator, primes: np.ndarray, exponents: np.ndarray,
                 pack: bool = True) -> ResidueBatch:
    """Residues of B^d * A / M modulo 1 for M = prod primes**exponents.

    Prime powers below 2**32 go through the numpy narrow lane, optionally
    packed into composite moduli; inverses come from Euler's theorem. Larger
    prime powers (up to 2**96) are handled one by one in the scalar lanes.
    The residues sum to the same value modulo 1 as ``scaled_residues``.
    """
    if mult.exponent < 0:
        raise ValueError(f"exponent must be >= 0, got {mult.exponent}")
    p = np.asarray(primes, dtype=np.int64)
    e = np.asarray(exponents, dtype=np.int64)
    narrow = e * np.log2(np.maximum(p, 2)) < 31.5
    wide_pairs = list(zip(p[~narrow].tolist(), e[~narrow].tolist()))

    p_narrow = p[narrow].astype(np.uint64)
    moduli = p_narrow ** e[narrow].astype(np.uint64)
    totients = moduli // p_narrow * (p_narrow - np.uint64(1))
    if pack:
        moduli, totients = pack_moduli(moduli, totients)

    residues = np.zeros_like(moduli)
    if len(moduli):
        cofactor = cofactor_products(moduli)
        for wp, we in wide_pairs:
            cofactor = cofactor * pow_mod_array(wp, we, moduli) % moduli
        inverse = pow_mod_arrays(cofactor, totients - np.uint64(1), moduli)
        x = pow_mod_array(mult.base, mult.exponent, moduli)
        for pp in mult.numer:
            x = x * pow_mod_array(pp.p, pp.e, moduli) % moduli
        residues = x * inverse % moduli

    wide = []
    narrow_values = moduli.tolist()
    wide_values = [checked_power(wp, we) for wp, we in wide_pairs]
    for j, q in enumerate(wide_values):
        mul = lane(q)
        cofactor = 1
        for other in narrow_values:
            cofactor = mul(cofactor, other % q)
        for i, other in enumerate(wide_values):
            if i != j:
                cofactor = mul(cofactor, other % q)
        r = pow_mod(mult.base, mult.exponent, q)
        for pp in mult.numer:
            r = mul(r, pow_mod(pp.p, pp.e, q))
        wide.append(UnitFraction(mul(r, mod_inverse(cofactor, q)), q))
    return ResidueBatch(residues, moduli, wide)
