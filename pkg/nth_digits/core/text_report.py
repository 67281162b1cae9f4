"""
Plain text rendering of results.

Everything here returns strings; the CLI decides where they go.
"""

from typing import List, Sequence

from .base import DigitResult, PrimePower, SplitDecomposition


class TextReport:
    """Text formatting for extraction, splitting and verification results."""

    def __init__(self, show_diagnostics: bool = False):
        self.show_diagnostics = show_diagnostics

    def digit_line(self, result: DigitResult, name: str = "") -> str:
        line = (f"{name or result.constant} base={result.base} pos={result.position} "
                f"digits={result.digits} confidence={result.confidence} "
                f"terms={result.terms_used} time={result.elapsed:.3f}s")
        if self.show_diagnostics and result.diagnostics:
            extra = " ".join(f"{k}={v}" for k, v in sorted(result.diagnostics.items()))
            line = f"{line} {extra}"
        return line

    def factor_line(self, factors: Sequence[PrimePower]) -> str:
        """Prime powers joined by ``*``."""
        return " * ".join(str(pp) for pp in factors)

    def split_line(self, decomposition: SplitDecomposition) -> str:
        return str(decomposition)

    def verify_summary(self, report) -> str:
        status = "OK" if report.ok else "MISMATCH"
        lines = [
            f"{report.constant} base={report.base} from={report.start} to={report.stop} "
            f"checked={report.checked} mismatches={len(report.mismatches)} "
            f"min_confidence={report.min_confidence} {status}"
        ]
        if report.bbp_mismatches:
            lines.append(f"bbp mismatches: {len(report.bbp_mismatches)}")
        if not report.ok:
            pos = report.first_mismatch
            lines.append(f"first mismatch at position {pos}")
        return "\n".join(lines)

    def registry_table(self, rows: List[dict]) -> str:
        """Aligned table of registry entries."""
        headers = ["name", "constant", "integer_part", "series"]
        data = [[str(row[h]) for h in headers] for row in rows]
        col_widths = [max(len(r[i]) for r in [headers] + data) + 2 for i in range(len(headers))]
        out = ["".join(f"{headers[i]:<{col_widths[i]}}" for i in range(len(headers))).rstrip()]
        out.append("-" * sum(col_widths))
        for r in data:
            out.append("".join(f"{r[i]:<{col_widths[i]}}" for i in range(len(r))).rstrip())
        return "\n".join(out)
