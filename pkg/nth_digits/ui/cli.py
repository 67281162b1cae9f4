"""Command line interface for digit extraction."""

import argparse
import json
import logging
import os
import sys
from dataclasses import dataclass
from typing import List, Mapping, Optional, Sequence

from ..core.base import DEFAULT_GUARD_BITS, PrimePower, checked_power
from ..core.bench import ComplexityBench
from ..core.binomfactor import factor_central_binomial
from ..core.errors import ConfigError, ModulusOverflow, NotCoprime, UnknownConstant
from ..core.extractor import extract_digits
from ..core.fracsplit import decompose, decompose_moduli
from ..core.text_report import TextReport
from ..series import AVAILABLE_SERIES, get_available_constants, get_series_info, lookup
from ..utils.data_io import default_fixture_dir, find_fixture, write_fixture

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_LOW_CONFIDENCE = 3
EXIT_OVERFLOW = 4

THREADS_ENV = "NTH_DIGITS_THREADS"
OUTPUT_MODES = ("text", "json")
FIXTURE_CONSTANTS = ("pi_eq1", "pi_sqrt3", "pi_squared", "zeta3", "golden_ln")


class UsageError(ConfigError):
    """Bad command line arguments."""


@dataclass
class CliConfig:
    """Worker count, guard bits and output mode of one CLI run."""
    threads: int
    guard_bits: int = DEFAULT_GUARD_BITS
    output: str = "text"

    @classmethod
    def resolve(cls, flag_threads: Optional[int] = None, flag_guard: Optional[int] = None,
                output: str = "text", environ: Optional[Mapping[str, str]] = None) -> "CliConfig":
        """Threads come from the flag, then NTH_DIGITS_THREADS, then the CPU count."""
        environ = os.environ if environ is None else environ
        if flag_threads is not None:
            threads = flag_threads
        elif environ.get(THREADS_ENV, "").strip():
            raw = environ[THREADS_ENV].strip()
            try:
                threads = int(raw)
            except ValueError:
                raise ConfigError(f"{THREADS_ENV} must be an integer, got {raw!r}")
        else:
            threads = os.cpu_count() or 1

        if threads < 1:
            raise ConfigError(f"threads must be >= 1, got {threads}")
        guard = DEFAULT_GUARD_BITS if flag_guard is None else flag_guard
        if guard < 0:
            raise ConfigError(f"guard bits must be >= 0, got {guard}")
        if output not in OUTPUT_MODES:
            raise ConfigError(f"Unknown output mode: {output}. Available: {list(OUTPUT_MODES)}")
        return cls(threads=threads, guard_bits=guard, output=output)


def parse_int_list(text: str) -> List[int]:
    try:
        return [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise UsageError(f"expected a comma-separated list of integers, got {text!r}")


def parse_factors(text: str) -> List[int]:
    """Moduli from ``p1^e1,p2^e2,...``; plain integers are taken as they are."""
    moduli = []
    for token in (t.strip() for t in text.split(",")):
        if not token:
            continue
        try:
            if "^" in token:
                p, e = token.split("^", 1)
                moduli.append(checked_power(int(p), int(e)))
            else:
                moduli.append(int(token))
        except ValueError:
            raise UsageError(f"invalid factor {token!r}")
    if not moduli:
        raise UsageError("no factors given")
    return moduli


class CLIInterface:
    """Command dispatch for the ``nth-digits`` program."""

    def __init__(self, config: CliConfig, fixture_dir: Optional[str] = None, out=None):
        self.config = config
        self.fixture_dir = fixture_dir
        self.out = out or sys.stdout
        self.report = TextReport()

    def emit(self, text: str = ""):
        print(text, file=self.out)

    def emit_json(self, payload) -> None:
        self.emit(json.dumps(payload, indent=2))

    def cmd_digits(self, constant: str, position: int, base: int = 10, count: int = 1,
                   min_confidence: Optional[int] = None) -> int:
        """Extract a digit window; exit 3 if confidence stays low after one retry."""
        lookup(constant)
        needed = count if min_confidence is None else min_confidence
        guard = self.config.guard_bits
        result = extract_digits(constant, position, base, count, guard, self.config.threads)
        if result.confidence < needed:
            retry_guard = max(2 * guard, DEFAULT_GUARD_BITS)
            logger.warning("%s pos=%d: confidence %d < %d, retrying with %d guard bits",
                           constant, position, result.confidence, needed, retry_guard)
            result = extract_digits(constant, position, base, count, retry_guard,
                                    self.config.threads)

        if self.config.output == "json":
            self.emit_json(result.to_dict())
        else:
            self.emit(self.report.digit_line(result, constant))

        return EXIT_OK if result.confidence >= needed else EXIT_LOW_CONFIDENCE

    def cmd_split(self, binomial: Optional[int] = None, factors: Optional[str] = None) -> int:
        """Print the unit-fraction decomposition of 1/C(2n, n) or of 1/prod(factors)."""
        if (binomial is None) == (factors is None):
            raise UsageError("give exactly one of --binomial or --factors")

        if binomial is not None:
            if binomial < 1:
                raise UsageError(f"--binomial must be >= 1, got {binomial}")
            prime_powers = factor_central_binomial(binomial)
            decomposition = decompose(prime_powers)
            factor_text = self.report.factor_line(prime_powers)
        else:
            moduli = parse_factors(factors)
            decomposition = decompose_moduli(moduli)
            factor_text = " * ".join(str(q) for q in moduli)

        if self.config.output == "json":
            self.emit_json({
                'factors': factor_text,
                'fractions': [[e.a, e.q] for e in decomposition.entries],
            })
        else:
            if binomial is not None:
                self.emit(factor_text)
            self.emit(self.report.split_line(decomposition))
        return EXIT_OK

    def cmd_verify(self, constant: str, start: int, stop: int, base: int = 10) -> int:
        """Check extracted digits against fixtures or the oracle."""
        from ..oracle import verify_range

        series = lookup(constant)
        reference = find_fixture(self.fixture_dir, series.name, base)
        if reference is not None:
            logger.info("using fixture for %s base %d", series.name, base)
        report = verify_range(constant, start, stop, base,
                              workers=self.config.threads, reference=reference)

        if self.config.output == "json":
            self.emit_json(report.to_dict())
        else:
            self.emit(self.report.verify_summary(report))
        return EXIT_OK if report.ok else EXIT_MISMATCH

    def cmd_bench(self, constant: str, positions: Sequence[int], repeat: int = 1,
                  base: int = 10, plot: Optional[str] = None) -> int:
        """Time extraction at each position and fit the growth exponent."""
        lookup(constant)
        if not positions:
            raise UsageError("--positions is empty")
        bench = ComplexityBench(constant, base, self.config.guard_bits, self.config.threads)
        try:
            bench.run(positions, repeat)
        except ValueError as e:
            raise UsageError(str(e))

        if self.config.output == "json":
            self.emit_json(bench.get_report())
        else:
            bench.print_table(file=self.out)

        if plot:
            from ..visualizers import BenchPlotter, MATPLOTLIB_AVAILABLE
            if not MATPLOTLIB_AVAILABLE:
                logger.warning("matplotlib not installed, skipping plot %s", plot)
            else:
                BenchPlotter().save(bench, plot)
        return EXIT_OK

    def cmd_list(self) -> int:
        """Print the registry."""
        rows = [get_series_info(name) for name in AVAILABLE_SERIES]
        if self.config.output == "json":
            self.emit_json(rows)
        else:
            self.emit(self.report.registry_table(rows))
            self.emit(f"\nnames: {', '.join(get_available_constants())}")
        return EXIT_OK

    def cmd_fixtures(self, digits: int, bases: Sequence[int], out_dir: str,
                     constants: Sequence[str] = FIXTURE_CONSTANTS) -> int:
        """Write oracle reference lines for each constant and base."""
        from ..oracle import reference_digits

        if digits < 1:
            raise UsageError(f"--digits must be >= 1, got {digits}")
        for name in constants:
            for base in bases:
                ref = reference_digits(name, digits, base)
                path = write_fixture(ref, out_dir)
                logger.info("wrote %s", path)
                self.emit(path)
        return EXIT_OK


def _add_shared_options(parser: argparse.ArgumentParser, suppress: bool = False) -> None:
    """Options accepted both before and after the subcommand.

    Subcommand copies default to SUPPRESS so they only override the
    top-level value when actually given.
    """
    def default(value):
        return argparse.SUPPRESS if suppress else value

    parser.add_argument("--threads", type=int, default=default(None),
                        help=f"worker processes (default: ${THREADS_ENV} or CPU count)")
    parser.add_argument("--guard", type=int, default=default(None),
                        help=f"guard bits (default {DEFAULT_GUARD_BITS})")
    parser.add_argument("--json", dest="output", action="store_const", const="json",
                        default=default("text"), help="JSON output")
    parser.add_argument("--fixtures", default=default(None),
                        help="fixture directory consulted by verify")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nth-digits",
        description="Digits of pi and related constants at any position, without the preceding digits",
    )
    parser.add_argument("-v", "--verbose", action="count", default=0,
                        help="-v for progress, -vv for debug output (stderr)")
    _add_shared_options(parser)
    shared = argparse.ArgumentParser(add_help=False)
    _add_shared_options(shared, suppress=True)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("digits", parents=[shared], help="extract digits at a position")

    p.add_argument("constant")
    p.add_argument("--position", "-d", type=int, required=True)
    p.add_argument("--base", "-b", type=int, default=10)
    p.add_argument("--count", "-k", type=int, default=1)
    p.add_argument("--min-confidence", "-m", type=int, default=None)

    p = sub.add_parser("split", parents=[shared], help="unit-fraction decomposition")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--binomial", type=int)
    group.add_argument("--factors")

    p = sub.add_parser("verify", parents=[shared],
                       help="compare a position range against reference digits")
    p.add_argument("constant")
    p.add_argument("--from", dest="start", type=int, required=True)
    p.add_argument("--to", dest="stop", type=int, required=True)
    p.add_argument("--base", "-b", type=int, default=10)

    p = sub.add_parser("bench", parents=[shared],
                       help="time extraction and fit the growth exponent")
    p.add_argument("constant")
    p.add_argument("--positions", required=True, type=parse_int_list)
    p.add_argument("--repeat", type=int, default=1)
    p.add_argument("--base", "-b", type=int, default=10)
    p.add_argument("--plot", default=None, help="save a log-log plot to this file")

    sub.add_parser("list", parents=[shared], help="list the available constants")

    p = sub.add_parser("fixtures", parents=[shared], help="write reference digit fixtures")
    p.add_argument("--digits", type=int, default=1000)
    p.add_argument("--bases", type=parse_int_list, default=[2, 10, 16])
    p.add_argument("--out", default=default_fixture_dir())
    return parser


def configure_logging(verbosity: int):
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity >= 2:
        level = logging.DEBUG
    logging.basicConfig(level=level, stream=sys.stderr,
                        format="%(asctime)s %(levelname)s %(name)s: %(message)s")


def run(args: argparse.Namespace, out=None) -> int:
    config = CliConfig.resolve(args.threads, args.guard, args.output)
    cli = CLIInterface(config, args.fixtures or default_fixture_dir(), out)
    if args.command == "digits":
        return cli.cmd_digits(args.constant, args.position, args.base, args.count,
                              args.min_confidence)
    if args.command == "split":
        return cli.cmd_split(args.binomial, args.factors)
    if args.command == "verify":
        return cli.cmd_verify(args.constant, args.start, args.stop, args.base)
    if args.command == "bench":
        return cli.cmd_bench(args.constant, args.positions, args.repeat, args.base, args.plot)
    if args.command == "list":
        return cli.cmd_list()
    return cli.cmd_fixtures(args.digits, args.bases, args.out)


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    """Entry point; returns the process exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_USAGE
    configure_logging(args.verbose)

    try:
        return run(args, out)
    except ModulusOverflow as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_OVERFLOW
    except (UnknownConstant, NotCoprime, ConfigError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
