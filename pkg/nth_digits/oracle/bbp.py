"""
Hexadecimal digits of pi by the BBP formula.

Shares only modular exponentiation with the rest of the package, which is
what makes it a useful cross-check for base 16.
"""

from ..core.modarith import pow_mod

_BITS = 96
_ONE = 1 << _BITS
_MASK = _ONE - 1


def _series(j: int, n: int) -> int:
    """frac(sum_k 16^(n-k) / (8k+j)) scaled by 2^96."""
    s = 0
    for k in range(n + 1):
        r = 8 * k + j
        s = (s + (pow_mod(16, n - k, r) << _BITS) // r) & _MASK
    k = n + 1
    shift = 4
    while shift < _BITS:
        s = (s + (_ONE >> shift) // (8 * k + j)) & _MASK
        k += 1
        shift += 4
    return s


def bbp_hex_pi(d: int) -> int:
    """The d-th hexadecimal digit of pi after the point (d >= 1)."""
    if d < 1:
        raise ValueError(f"position must be >= 1, got {d}")
    n = d - 1
    x = (4 * _series(1, n) - 2 * _series(4, n) - _series(5, n) - _series(6, n)) & _MASK
    return x >> (_BITS - 4)


def bbp_hex_digits(start: int, count: int) -> str:
    return "".join("0123456789ABCDEF"[bbp_hex_pi(start + i)] for i in range(count))
