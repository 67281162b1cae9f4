"""
Benchmark harness for digit extraction.

This module times extraction at a list of positions, keeps the raw samples,
and fits the exponent p of time ~ d^p by least squares on log-log axes.
"""

import logging
import math
import time
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence

import numpy as np

from .extractor import extract_digits

logger = logging.getLogger(__name__)

MIN_FIT_POINTS = 3

@dataclass
class BenchSample:
    """Timings of one position."""
    position: int
    times: List[float] = field(default_factory=list)
    terms_used: int = 0
    digits: str = ""

    @property
    def median(self) -> float:
        return float(np.median(self.times)) if self.times else 0.0


def fit_exponent(positions: Sequence[int], times: Sequence[float]) -> Optional[float]:
    """Slope of log(time) against log(position); None below three usable points."""
    points = [(p, t) for p, t in zip(positions, times) if p > 0 and t > 0]
    if len(points) < MIN_FIT_POINTS:
        return None
    xs = [math.log(p) for p, _ in points]
    ys = [math.log(t) for _, t in points]
    slope, _ = np.polyfit(xs, ys, 1)
    return float(slope)


class ComplexityBench:
    """Time one constant at increasing positions."""

    def __init__(self, constant: str, base: int = 10, guard_bits: int = 40, workers: int = 1):
        self.constant = constant
        self.base = base
        self.guard_bits = guard_bits
        self.workers = workers
        self.samples: Dict[int, BenchSample] = {}

    def run(self, positions: Sequence[int], repeat: int = 1) -> List[BenchSample]:
        """Extract one digit at every position ``repeat`` times."""
        if repeat < 1:
            raise ValueError(f"repeat must be >= 1, got {repeat}")
        if list(positions) != sorted(set(positions)):
            raise ValueError(f"positions must be strictly increasing, got {list(positions)}")

        for d in positions:
            sample = self.samples.setdefault(d, BenchSample(position=d))
            for _ in range(repeat):
                start = time.perf_counter()
                result = extract_digits(self.constant, d, self.base, 1,
                                        self.guard_bits, self.workers)
                sample.times.append(time.perf_counter() - start)
                sample.terms_used = result.terms_used
                sample.digits = result.digits
            logger.info("bench %s d=%d median=%.6fs terms=%d",
                        self.constant, d, sample.median, sample.terms_used)
        return self.get_samples()

    def get_samples(self) -> List[BenchSample]:
        return [self.samples[d] for d in sorted(self.samples)]

    def fitted_exponent(self) -> Optional[float]:
        samples = self.get_samples()
        return fit_exponent([s.position for s in samples], [s.median for s in samples])

    def get_report(self) -> Dict[str, Any]:
        """Raw samples plus the fit, in JSON-friendly form."""
        return {
            'constant': self.constant,
            'base': self.base,
            'samples': [
                {
                    'position': s.position,
                    'times': list(s.times),
                    'median': s.median,
                    'terms_used': s.terms_used,
                    'digit': s.digits,
                }
                for s in self.get_samples()
            ],
            'exponent': self.fitted_exponent(),
        }

    def print_table(self, file=None):
        """Print a table of per-position medians and the fitted exponent."""
        samples = self.get_samples()
        if not samples:
            print("No samples recorded.", file=file)
            return

        headers = ["Position", "Median (s)", "Terms", "Runs", "Digit"]
        rows = [[str(s.position), f"{s.median:.6f}", str(s.terms_used),
                 str(len(s.times)), s.digits] for s in samples]
        col_widths = [max(len(row[i]) for row in [headers] + rows) + 2
                      for i in range(len(headers))]

        print("=" * sum(col_widths), file=file)
        print("".join(f"{headers[i]:<{col_widths[i]}}" for i in range(len(headers))), file=file)
        print("=" * sum(col_widths), file=file)
        for row in rows:
            print("".join(f"{row[i]:<{col_widths[i]}}" for i in range(len(row))), file=file)
        print("=" * sum(col_widths), file=file)

        exponent = self.fitted_exponent()
        if exponent is None:
            print(f"fit: skipped (fewer than {MIN_FIT_POINTS} points)", file=file)
        else:
            print(f"fit: time ~ d^{exponent:.2f}", file=file)

    def clear_results(self):
        self.samples.clear()
