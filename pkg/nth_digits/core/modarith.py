"""
Word-sized modular arithmetic kernel.

Moduli below 2**63 take the fast lane, where the double-width product of two
residues is reduced directly. Moduli in [2**63, 2**96) take the wide lane,
which multiplies limb by limb so that no intermediate exceeds 2**129.
Anything larger is rejected with ModulusOverflow.

The narrow lane works on numpy uint64 vectors of moduli below 2**32, so a
product of two residues never leaves the word.
"""

from typing import Callable, List, Tuple

import numpy as np

from .base import (
    FAST_LANE_LIMIT, NARROW_LANE_LIMIT, WIDE_LANE_BITS, WIDE_LANE_LIMIT,
    ConvergentList, ExtGcdResult,
)
from .errors import ModulusOverflow, NotCoprime

_LIMB_BITS = 32
_LIMB_MASK = (1 << _LIMB_BITS) - 1
_WIDE_SHIFTS = tuple(range(WIDE_LANE_BITS - _LIMB_BITS, -1, -_LIMB_BITS))

MulMod = Callable[[int, int], int]


def _check_modulus(m: int) -> None:
    if m < 1:
        raise ValueError(f"modulus must be >= 1, got {m}")
    if m >= WIDE_LANE_LIMIT:
        raise ModulusOverflow(m, WIDE_LANE_BITS)


def _mul_mod_wide(a: int, b: int, m: int) -> int:
    """Schoolbook multiply-reduce over 32-bit limbs of b, most significant first."""
    r = 0
    for shift in _WIDE_SHIFTS:
        r = (r << _LIMB_BITS) % m
        r = (r + a * ((b >> shift) & _LIMB_MASK)) % m
    return r


def lane(m: int) -> MulMod:
    """Return a multiply-reduce function specialised to modulus m.

    Callers must pass canonical residues in [0, m).
    """
    _check_modulus(m)
    if m < FAST_LANE_LIMIT:
        return lambda a, b: a * b % m
    return lambda a, b: _mul_mod_wide(a, b, m)


def ext_gcd(a: int, b: int) -> ExtGcdResult:
    """Extended Euclid: returns (g, x, y) with a*x + b*y == g == gcd(a, b)."""
    if a < 0 or b < 0:
        raise ValueError(f"ext_gcd expects non-negative inputs, got ({a}, {b})")
    if a == 0 and b == 0:
        raise ValueError("ext_gcd(0, 0) is undefined")

    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    return ExtGcdResult(old_r, old_x, old_y)


def mod_inverse(a: int, m: int) -> int:
    """Return u in [0, m) with a*u = 1 (mod m)."""
    _check_modulus(m)
    if m == 1:
        return 0
    a %= m
    result = ext_gcd(a, m)
    if result.g != 1:
        raise NotCoprime(a, m, result.g)
    return result.x % m


def mul_mod(a: int, b: int, m: int) -> int:
    """(a*b) mod m, exact for every modulus below 2**96."""
    _check_modulus(m)
    a %= m
    b %= m
    if m < FAST_LANE_LIMIT:
        return a * b % m
    return _mul_mod_wide(a, b, m)


def pow_mod(b: int, e: int, m: int) -> int:
    """b**e mod m by the binary (square-and-multiply) method."""
    if e < 0:
        raise ValueError(f"exponent must be >= 0, got {e}")
    mul = lane(m)
    result = 1 % m
    base = b % m
    while e:
        if e & 1:
            result = mul(result, base)
        base = mul(base, base)
        e >>= 1
    return result


def convergents(num: int, den: int) -> ConvergentList:
    """All convergents h_i/k_i of num/den, plus the before-last pair."""
    if den < 1 or num < 0:
        raise ValueError(f"convergents expects num >= 0 and den >= 1, got {num}/{den}")

    h_prev, h = 0, 1
    k_prev, k = 1, 0
    entries: List[Tuple[int, int]] = []
    a, b = num, den
    while b:
        q = a // b
        a, b = b, a - q * b
        h_prev, h = h, q * h + h_prev
        k_prev, k = k, q * k + k_prev
        entries.append((h, k))
    return ConvergentList(entries=entries, before_last=(h_prev, k_prev))


def inverse_via_convergents(a: int, m: int) -> int:
    """Modular inverse read off the before-last continuant of a/m."""
    _check_modulus(m)
    if m == 1:
        return 0
    a %= m
    h, k = convergents(a, m).before_last
    # a*k - h*m is +-gcd(a, m)
    det = a * k - h * m
    if det == 1:
        return k % m
    if det == -1:
        return -k % m
    raise NotCoprime(a, m, abs(det))


# Narrow lane: vectors of moduli below 2**32

ROW_BLOCK = 256


def as_narrow(moduli) -> np.ndarray:
    """uint64 copy of ``moduli``; every entry must be in [2, 2**32)."""
    arr = np.asarray(moduli, dtype=np.uint64)
    if arr.size and (int(arr.min()) < 2 or int(arr.max()) >= NARROW_LANE_LIMIT):
        raise ValueError("narrow lane moduli must lie in [2, 2**32)")
    return arr


def pow_mod_array(b: int, e: int, moduli: np.ndarray) -> np.ndarray:
    """b**e mod q for every q in ``moduli``; ``b`` must fit in a word."""
    if e < 0:
        raise ValueError(f"exponent must be >= 0, got {e}")
    result = np.ones_like(moduli)
    base = np.full_like(moduli, b) % moduli
    while e:
        if e & 1:
            result = result * base % moduli
        base = base * base % moduli
        e >>= 1
    return result % moduli


def pow_mod_arrays(bases: np.ndarray, exponents: np.ndarray, moduli: np.ndarray) -> np.ndarray:
    """Element-wise bases**exponents mod moduli."""
    result = np.ones_like(moduli)
    base = bases % moduli
    e = exponents.astype(np.uint64)
    while e.any():
        odd = (e & np.uint64(1)).astype(bool)
        result = np.where(odd, result * base % moduli, result)
        base = base * base % moduli
        e >>= np.uint64(1)
    return result % moduli


def row_products(matrix: np.ndarray, moduli: np.ndarray) -> np.ndarray:
    """Product of each row of ``matrix`` modulo the matching entry of ``moduli``.

    Columns are folded pairwise, so a row of width k takes log2(k) passes.
    """
    column = moduli[:, None]
    while matrix.shape[1] > 1:
        if matrix.shape[1] % 2:
            matrix[:, 0] = matrix[:, 0] * matrix[:, -1] % moduli
            matrix = matrix[:, :-1]
        half = matrix.shape[1] // 2
        matrix = matrix[:, :half] * matrix[:, half:] % column
    return matrix[:, 0] % moduli


def cofactor_products(moduli: np.ndarray) -> np.ndarray:
    """prod_{i != j} q_i mod q_j for every j, in blocks of ROW_BLOCK rows."""
    k = len(moduli)
    out = np.empty(k, dtype=np.uint64)
    for start in range(0, k, ROW_BLOCK):
        rows = moduli[start:start + ROW_BLOCK]
        block = moduli[None, :] % rows[:, None]
        idx = np.arange(len(rows))
        block[idx, start + idx] = 1
        out[start:start + len(rows)] = row_products(block, rows)
    return out
