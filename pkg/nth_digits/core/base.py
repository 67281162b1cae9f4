"""
Core value types for the digit extraction framework.

This module contains the data structures shared by the arithmetic kernel,
the fraction splitter, the series registry and the extractor, together with
the fixed widths every scalar on the extraction path is held to.
"""

from dataclasses import dataclass, field
from functools import cached_property
from math import gcd
from typing import Any, Dict, List, Tuple

from .errors import ModulusOverflow

# Widths of the extraction path
NARROW_LANE_BITS = 32
FAST_LANE_BITS = 63
WIDE_LANE_BITS = 96
NARROW_LANE_LIMIT = 1 << NARROW_LANE_BITS
FAST_LANE_LIMIT = 1 << FAST_LANE_BITS
WIDE_LANE_LIMIT = 1 << WIDE_LANE_BITS
MAX_SCALAR_BITS = 2 * WIDE_LANE_BITS

FRAC_BITS = 128
FRAC_MASK = (1 << FRAC_BITS) - 1
DEFAULT_GUARD_BITS = 40

_LIMB_BITS = 32


def checked_power(p: int, e: int, limit_bits: int = WIDE_LANE_BITS) -> int:
    """Return p**e, refusing to grow past ``2**limit_bits``."""
    limit = 1 << limit_bits
    q = 1
    for _ in range(e):
        q *= p
        if q >= limit:
            raise ModulusOverflow(q, limit_bits, f"{p}^{e}")
    return q


@dataclass(frozen=True)
class ExtGcdResult:
    """gcd with Bezout coefficients: a*x + b*y == g."""
    g: int
    x: int
    y: int


@dataclass(frozen=True)
class ConvergentList:
    """Convergents h_i/k_i of a continued fraction expansion."""
    entries: List[Tuple[int, int]]
    before_last: Tuple[int, int]

    @property
    def last(self) -> Tuple[int, int]:
        return self.entries[-1]

    def __len__(self) -> int:
        return len(self.entries)


@dataclass(frozen=True)
class PrimePower:
    """A prime ``p`` raised to ``e``.

    The value ``q`` is only materialised on request and is bounded by the
    wide lane. Numerator powers such as ``2**n`` are never asked for ``q``;
    they are consumed exponent-first by modular exponentiation.
    """
    p: int
    e: int

    def __post_init__(self):
        if self.p < 2:
            raise ValueError(f"prime must be >= 2, got {self.p}")
        if self.e < 1:
            raise ValueError(f"exponent must be >= 1, got {self.e}")

    @cached_property
    def q(self) -> int:
        return checked_power(self.p, self.e)

    def __str__(self) -> str:
        return str(self.p) if self.e == 1 else f"{self.p}^{self.e}"


@dataclass(frozen=True)
class TermFactorization:
    """Reduced prime-power form of one scaled series term."""
    n: int
    sign: int
    denom: List[PrimePower] = field(default_factory=list)
    numer: List[PrimePower] = field(default_factory=list)

    @property
    def is_integer(self) -> bool:
        return not self.denom

    def describe(self) -> str:
        top = " * ".join(str(pp) for pp in self.numer) or "1"
        bottom = " * ".join(str(pp) for pp in self.denom) or "1"
        sign = "-" if self.sign < 0 else "+"
        return f"{sign}({top}) / ({bottom})"


@dataclass(frozen=True)
class UnitFraction:
    """Residue a/q with 0 <= a < q."""
    a: int
    q: int

    def __post_init__(self):
        if self.q < 2:
            raise ValueError(f"modulus must be >= 2, got {self.q}")
        if not 0 <= self.a < self.q:
            raise ValueError(f"residue {self.a} outside [0, {self.q})")

    def __str__(self) -> str:
        return f"{self.a}/{self.q}"


@dataclass(frozen=True)
class SplitDecomposition:
    """1/M (or A/M) modulo 1 as a sum of unit-fraction residues."""
    entries: List[UnitFraction]

    @property
    def moduli(self) -> List[int]:
        return [entry.q for entry in self.entries]

    @property
    def residues(self) -> List[int]:
        return [entry.a for entry in self.entries]

    def __str__(self) -> str:
        return " + ".join(str(entry) for entry in self.entries)


@dataclass(frozen=True)
class ScaledNumerator:
    """Multiplier B**d * (product of numerator prime powers)."""
    base: int
    exponent: int
    numer: List[PrimePower] = field(default_factory=list)


@dataclass(frozen=True)
class SeriesDef:
    """One constant as (u*S + v)/w with S = sum_{n>=1} c^n n^(-s) / C(2n, n).

    ``c = -1`` encodes the alternating weight (-1)^(n-1).
    """
    name: str
    c: int
    s: int
    u: int
    v: int
    w: int
    description: str = ""
    display: str = ""
    integer_part: str = "0"
    aliases: Tuple[str, ...] = ()

    def __post_init__(self):
        if abs(self.c) not in (1, 2):
            raise ValueError(f"{self.name}: |c| must be 1 or 2, got {self.c}")
        if self.s not in (-1, 0, 1, 2, 3):
            raise ValueError(f"{self.name}: s must be in -1..3, got {self.s}")
        if self.w < 1 or self.u == 0:
            raise ValueError(f"{self.name}: need w >= 1 and u != 0")
        if gcd(gcd(self.u, self.v), self.w) != 1:
            raise ValueError(f"{self.name}: affine map ({self.u}, {self.v}, {self.w}) is not reduced")

    def term_sign(self, n: int) -> int:
        """Sign of u * c-weight for term n."""
        sign = -1 if self.c < 0 and (n - 1) % 2 else 1
        return -sign if self.u < 0 else sign


@dataclass(frozen=True)
class FixedPointFrac:
    """A value in [0, 1) held as FRAC_BITS fractional bits; arithmetic wraps mod 1."""
    value: int = 0

    def __post_init__(self):
        if not 0 <= self.value <= FRAC_MASK:
            raise ValueError(f"fixed-point value out of range: {self.value}")

    @classmethod
    def from_residue(cls, a: int, q: int) -> "FixedPointFrac":
        """floor((a/q) * 2**FRAC_BITS) by limb-wise long division."""
        r = a % q
        out = 0
        for _ in range(FRAC_BITS // _LIMB_BITS):
            r <<= _LIMB_BITS
            limb, r = divmod(r, q)
            out = (out << _LIMB_BITS) | limb
        return cls(out)

    def __add__(self, other: "FixedPointFrac") -> "FixedPointFrac":
        return FixedPointFrac((self.value + other.value) & FRAC_MASK)

    def __sub__(self, other: "FixedPointFrac") -> "FixedPointFrac":
        return FixedPointFrac((self.value - other.value) & FRAC_MASK)

    def __neg__(self) -> "FixedPointFrac":
        return FixedPointFrac(-self.value & FRAC_MASK)


@dataclass
class DigitResult:
    """Digits extracted at one position with their certified error bound."""
    constant: str
    base: int
    position: int
    digits: str
    confidence: int
    error_bound_ulps: int
    terms_used: int
    elapsed: float = 0.0
    count: int = 1
    guard_bits: int = DEFAULT_GUARD_BITS
    integer_part: str = ""
    accumulator: int = 0
    tail_ulps: int = 0
    diagnostics: Dict[str, Any] = field(default_factory=dict)

    @property
    def certified(self) -> bool:
        return self.confidence >= len(self.digits)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'constant': self.constant,
            'base': self.base,
            'position': self.position,
            'count': self.count,
            'digits': self.digits,
            'confidence': self.confidence,
            'error_bound_ulps': self.error_bound_ulps,
            'tail_ulps': self.tail_ulps,
            'terms_used': self.terms_used,
            'guard_bits': self.guard_bits,
            'integer_part': self.integer_part,
            'accumulator': self.accumulator,
            'elapsed': self.elapsed,
            'diagnostics': dict(self.diagnostics),
        }
