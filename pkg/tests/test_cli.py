"""
Tests for the command line interface: output, exit codes and configuration.
"""

import io
import json
import os
import sys
import tempfile
import unittest

# Add the project root to the path
current_dir = os.path.dirname(os.path.abspath(__file__))
project_root = os.path.dirname(current_dir)
sys.path.insert(0, project_root)

from nth_digits.core.errors import ConfigError
from nth_digits.ui.cli import (
    EXIT_LOW_CONFIDENCE, EXIT_MISMATCH, EXIT_OK, EXIT_OVERFLOW, EXIT_USAGE,
    CliConfig, main, parse_factors,
)
from nth_digits.utils.data_io import default_fixture_dir, fixture_path, read_fixture

BINOM_100_50_FACTORS = "2^3 * 3^4 * 11 * 13 * 17 * 19 * 29 * 31 * 53 * 59 * 61 * 67 * 71 * 73 * 79 * 83 * 89 * 97"
BINOM_100_50_SPLIT = ("5/8 + 20/81 + 10/11 + 2/13 + 13/17 + 10/19 + 4/29 + 5/31 + 23/53 + "
               "41/59 + 29/61 + 37/67 + 33/71 + 19/73 + 36/79 + 7/83 + 13/89 + 88/97")


def run_cli(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


class TestCliConfig(unittest.TestCase):

    def test_precedence(self):
        env = {"NTH_DIGITS_THREADS": "3"}
        self.assertEqual(CliConfig.resolve(5, None, "text", env).threads, 5)
        self.assertEqual(CliConfig.resolve(None, None, "text", env).threads, 3)
        self.assertEqual(CliConfig.resolve(None, None, "text", {}).threads, os.cpu_count() or 1)

    def test_defaults(self):
        config = CliConfig.resolve(1, None, "json", {})
        self.assertEqual(config.guard_bits, 40)
        self.assertEqual(config.output, "json")

    def test_invalid(self):
        with self.assertRaises(ConfigError):
            CliConfig.resolve(None, None, "text", {"NTH_DIGITS_THREADS": "many"})
        with self.assertRaises(ConfigError):
            CliConfig.resolve(0, None, "text", {})
        with self.assertRaises(ConfigError):
            CliConfig.resolve(1, -1, "text", {})
        with self.assertRaises(ConfigError):
            CliConfig.resolve(1, None, "xml", {})

    def test_parse_factors(self):
        self.assertEqual(parse_factors("2^3, 3^4,11"), [8, 81, 11])
        with self.assertRaises(ConfigError):
            parse_factors("2^x")


class TestSplitCommand(unittest.TestCase):

    def test_binomial_100_choose_50(self):
        code, output = run_cli("split", "--binomial", "50")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(output.splitlines(), [BINOM_100_50_FACTORS, BINOM_100_50_SPLIT])

    def test_factors(self):
        code, output = run_cli("split", "--factors", "2,3,5")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(output.strip(), "1/2 + 1/3 + 1/5")

    def test_not_coprime(self):
        code, _ = run_cli("split", "--factors", "4,6")
        self.assertEqual(code, EXIT_USAGE)

    def test_overflow(self):
        code, _ = run_cli("split", "--factors", "2^100,3")
        self.assertEqual(code, EXIT_OVERFLOW)

    def test_json(self):
        code, output = run_cli("--json", "split", "--factors", "3,5")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(json.loads(output)['fractions'], [[2, 3], [2, 5]])


class TestDigitsCommand(unittest.TestCase):

    def test_hex_window(self):
        code, output = run_cli("--threads", "1", "digits", "pi", "--position", "1",
                               "--base", "16", "--count", "6")
        self.assertEqual(code, EXIT_OK)
        self.assertIn("digits=243F6A", output)
        self.assertTrue(output.startswith("pi base=16 pos=1 "))

    def test_json_fields(self):
        code, output = run_cli("--threads", "1", "--json", "digits", "pi",
                               "--position", "10", "--count", "5")
        self.assertEqual(code, EXIT_OK)
        payload = json.loads(output)
        self.assertEqual(payload['digits'], "58979")
        self.assertEqual(payload['confidence'], 5)
        for key in ('constant', 'base', 'position', 'error_bound_ulps', 'terms_used',
                    'elapsed', 'diagnostics', 'accumulator', 'integer_part'):
            self.assertIn(key, payload)

    def test_excluded_constant(self):
        code, output = run_cli("digits", "e", "--position", "1")
        self.assertEqual(code, EXIT_USAGE)
        self.assertEqual(output, "")

    def test_bad_position(self):
        code, _ = run_cli("--threads", "1", "digits", "pi", "--position", "0")
        self.assertEqual(code, EXIT_USAGE)

    def test_unreachable_confidence(self):
        code, _ = run_cli("--threads", "1", "digits", "pi", "--position", "1",
                          "--count", "2", "--min-confidence", "3")
        self.assertEqual(code, EXIT_LOW_CONFIDENCE)

    def test_options_after_subcommand(self):
        code, output = run_cli("--threads", "1", "digits", "pi", "--position", "10",
                               "--count", "5", "--guard", "60", "--json")
        self.assertEqual(code, EXIT_OK)
        payload = json.loads(output)
        self.assertEqual(payload['digits'], "58979")
        self.assertEqual(payload['guard_bits'], 60)

    def test_subcommand_option_overrides_global(self):
        code, output = run_cli("--guard", "20", "--json", "digits", "pi", "--position", "3",
                               "--threads", "1", "--guard", "50")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(json.loads(output)['guard_bits'], 50)

    def test_full_decimal_window(self):
        code, output = run_cli("--threads", "1", "--json", "digits", "pi", "--position", "1",
                               "--count", "32")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(json.loads(output)['digits'], "14159265358979323846264338327950")

    def test_too_wide_window(self):
        code, _ = run_cli("--threads", "1", "digits", "pi", "--position", "1",
                          "--base", "256", "--count", "16")
        self.assertEqual(code, EXIT_USAGE)

    def test_retry_from_zero_guard(self):
        code, output = run_cli("--threads", "1", "--guard", "0", "--json", "digits", "pi",
                               "--position", "1", "--count", "2", "--min-confidence", "3")
        self.assertEqual(code, EXIT_LOW_CONFIDENCE)
        self.assertEqual(json.loads(output)['guard_bits'], 40)

    def test_position_1000_matches_fixture(self):
        ref = read_fixture(fixture_path(default_fixture_dir(), "pi_eq1", 10))
        code, output = run_cli("--threads", "1", "--json", "digits", "pi", "--position", "1000")
        self.assertEqual(code, EXIT_OK)
        payload = json.loads(output)
        self.assertEqual(payload['digits'], ref.fractional[999])
        self.assertEqual(payload['confidence'], 1)

    def test_thread_count_does_not_change_output(self):
        outputs = []
        for threads in ("1", "2"):
            code, output = run_cli("--threads", threads, "--json", "digits", "pi",
                                   "--position", "60", "--count", "5")
            self.assertEqual(code, EXIT_OK)
            payload = json.loads(output)
            outputs.append((payload['digits'], payload['accumulator']))
        self.assertEqual(outputs[0], outputs[1])

    def test_missing_subcommand(self):
        code, _ = run_cli()
        self.assertEqual(code, EXIT_USAGE)


class TestVerifyCommand(unittest.TestCase):

    def test_against_committed_fixture(self):
        code, output = run_cli("--threads", "1", "verify", "pi", "--from", "1", "--to", "30")
        self.assertEqual(code, EXIT_OK)
        self.assertIn("mismatches=0", output)
        self.assertIn("OK", output)

    def test_against_oracle(self):
        code, _ = run_cli("--threads", "1", "verify", "golden_ln", "--from", "1", "--to", "30")
        self.assertEqual(code, EXIT_OK)

    def test_corrupted_fixture(self):
        with tempfile.TemporaryDirectory() as tmp:
            with open(fixture_path(tmp, "pi_eq1", 10), "w") as f:
                f.write("pi_eq1 10 3.141592653589793238462643383270\n")
            code, output = run_cli("--threads", "1", "--fixtures", tmp,
                                   "verify", "pi", "--from", "1", "--to", "30")
        self.assertEqual(code, EXIT_MISMATCH)
        self.assertIn("first mismatch at position 30", output)


class TestOtherCommands(unittest.TestCase):

    def test_bench_with_fit(self):
        code, output = run_cli("--threads", "1", "bench", "pi_sqrt3",
                               "--positions", "10,20,40", "--repeat", "1")
        self.assertEqual(code, EXIT_OK)
        self.assertIn("fit: time ~ d^", output)

    def test_bench_single_point(self):
        code, output = run_cli("--threads", "1", "--json", "bench", "pi",
                               "--positions", "10", "--repeat", "2")
        self.assertEqual(code, EXIT_OK)
        payload = json.loads(output)
        self.assertEqual(len(payload['samples']), 1)
        self.assertEqual(len(payload['samples'][0]['times']), 2)
        self.assertIsNone(payload['exponent'])

    def test_bench_rejects_unsorted_positions(self):
        code, _ = run_cli("--threads", "1", "bench", "pi", "--positions", "20,10")
        self.assertEqual(code, EXIT_USAGE)

    def test_list(self):
        code, output = run_cli("list")
        self.assertEqual(code, EXIT_OK)
        for name in ("pi_eq1", "pi_eq3", "pi_sqrt3", "pi_squared", "zeta3", "golden_ln"):
            self.assertIn(name, output)

    def test_fixtures(self):
        with tempfile.TemporaryDirectory() as tmp:
            code, output = run_cli("fixtures", "--digits", "25", "--bases", "10,16", "--out", tmp)
            self.assertEqual(code, EXIT_OK)
            self.assertEqual(len(output.splitlines()), 10)
            ref = read_fixture(fixture_path(tmp, "pi_eq1", 16))
            self.assertEqual(ref.fractional, "243F6A8885A308D313198A2E0")


if __name__ == '__main__':
    unittest.main(verbosity=2)
