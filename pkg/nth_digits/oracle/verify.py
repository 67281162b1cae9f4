"""Compare extracted digits against reference digits over a position range."""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from ..core.extractor import extract_digits, max_window
from ..series import lookup
from .bbp import bbp_hex_pi
from .reference import ReferenceDigits, reference_digits

logger = logging.getLogger(__name__)

MAX_RANGE = 10_000


@dataclass
class VerifyReport:
    """Outcome of a range verification."""
    constant: str
    base: int
    start: int
    stop: int
    checked: int = 0
    mismatches: List[Tuple[int, str, str]] = field(default_factory=list)
    bbp_mismatches: List[Tuple[int, str, str]] = field(default_factory=list)
    min_confidence: Optional[int] = None
    windows: int = 0

    @property
    def ok(self) -> bool:
        return not self.mismatches and not self.bbp_mismatches

    @property
    def first_mismatch(self) -> Optional[int]:
        positions = [m[0] for m in self.mismatches + self.bbp_mismatches]
        return min(positions) if positions else None

    def to_dict(self) -> Dict[str, Any]:
        return {
            'constant': self.constant,
            'base': self.base,
            'from': self.start,
            'to': self.stop,
            'checked': self.checked,
            'mismatches': [list(m) for m in self.mismatches],
            'bbp_mismatches': [list(m) for m in self.bbp_mismatches],
            'min_confidence': self.min_confidence,
            'windows': self.windows,
            'ok': self.ok,
        }


def window_for(base: int, window: int) -> int:
    """Largest usable window not exceeding ``window`` digits for this base."""
    return max(1, min(window, max_window(base)))


def verify_range(constant: str, start: int, stop: int, base: int = 10,
                 window: int = 16, workers: int = 1,
                 reference: Optional[ReferenceDigits] = None) -> VerifyReport:
    """Extract digits start..stop in windows and check each against the reference.

    Pi in base 16 is additionally checked digit by digit against BBP.
    """
    if start < 1 or stop < start:
        raise ValueError(f"need 1 <= from <= to, got ({start}, {stop})")
    if stop - start > MAX_RANGE:
        raise ValueError(f"range of {stop - start} positions exceeds {MAX_RANGE}")

    series = lookup(constant)
    if reference is None or len(reference.fractional) < stop * reference.digit_width():
        reference = reference_digits(constant, stop, base)

    report = VerifyReport(constant=series.name, base=base, start=start, stop=stop)
    width = reference.digit_width()
    step = window_for(base, window)
    check_bbp = base == 16 and series.display == 'pi'

    position = start
    while position <= stop:
        count = min(step, stop - position + 1)
        result = extract_digits(constant, position, base, count, workers=workers)
        report.windows += 1
        if report.min_confidence is None or result.confidence < report.min_confidence:
            report.min_confidence = result.confidence

        for offset in range(count):
            pos = position + offset
            got = result.digits[offset * width:(offset + 1) * width]
            expected = reference.digit_at(pos)
            report.checked += 1
            if got != expected:
                logger.warning("%s base %d position %d: expected %s, got %s",
                               series.name, base, pos, expected, got)
                report.mismatches.append((pos, expected, got))
            if check_bbp:
                hex_digit = "0123456789ABCDEF"[bbp_hex_pi(pos)]
                if hex_digit != got:
                    logger.warning("%s position %d: BBP gives %s, got %s",
                                   series.name, pos, hex_digit, got)
                    report.bbp_mismatches.append((pos, hex_digit, got))
        position += count

    logger.info("%s base %d: %d positions checked, %d mismatches",
                series.name, base, report.checked, len(report.mismatches))
    return report
