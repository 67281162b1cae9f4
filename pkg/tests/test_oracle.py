"""
Tests for the verification oracles.
"""

import os
import sys
import unittest
from fractions import Fraction

# Add the project root to the path
current_dir = os.path.dirname(os.path.abspath(__file__))
project_root = os.path.dirname(current_dir)
sys.path.insert(0, project_root)

from nth_digits import MPMATH_AVAILABLE
from nth_digits.core.binomfactor import term_factorization
from nth_digits.oracle import (
    ReferenceDigits, bbp_hex_digits, bbp_hex_pi, exact_term, named_constant,
    reconstruct_term, reference_digits, verify_range,
)
from nth_digits.oracle.verify import window_for
from nth_digits.series import AVAILABLE_SERIES, lookup
from nth_digits.utils.data_io import default_fixture_dir, fixture_path, read_fixture

PI_HEX = "243F6A8885A308D313198A2E03707344A4093822299F31D0082EFA98EC4E6C89"


class TestExactTerm(unittest.TestCase):

    def test_examples(self):
        self.assertEqual(exact_term(lookup("pi"), 4), Fraction(32, 35))
        self.assertEqual(exact_term(lookup("pi"), 1), 1)
        self.assertEqual(exact_term(lookup("zeta3"), 2), Fraction(-1, 48))
        self.assertEqual(exact_term(lookup("golden_ln"), 2), Fraction(-1, 12))

    def test_factorization_reconstructs_term(self):
        for series in AVAILABLE_SERIES.values():
            for n in range(1, 101):
                expected = exact_term(series, n) * series.u / series.w
                with self.subTest(series=series.name, n=n):
                    self.assertEqual(reconstruct_term(term_factorization(series, n)), expected)


class TestReferenceDigits(unittest.TestCase):

    def test_pi(self):
        ref = reference_digits("pi", 20, 10)
        self.assertEqual(ref.integer_part, "3")
        self.assertEqual(ref.fractional, "14159265358979323846")
        self.assertEqual(ref.constant, "pi_eq1")
        self.assertGreaterEqual(ref.guard_digits, 15)
        self.assertEqual(str(ref), "3.14159265358979323846")

    def test_other_constants(self):
        expected = {
            'pi_squared': ("9", "8696044010"),
            'golden_ln': ("0", "4304089409"),
            'pi_sqrt3': ("5", "4413980927"),
            'zeta3': ("1", "2020569031"),
        }
        for name, (integer_part, fractional) in expected.items():
            with self.subTest(constant=name):
                ref = reference_digits(name, 10, 10)
                self.assertEqual((ref.integer_part, ref.fractional), (integer_part, fractional))

    def test_integer_part_in_base(self):
        self.assertEqual(reference_digits("pi_squared", 4, 2).integer_part, "1001")
        self.assertEqual(reference_digits("pi", 4, 16).integer_part, "3")

    def test_two_pi_series_agree(self):
        self.assertEqual(reference_digits("pi@eq1", 120, 10).fractional,
                         reference_digits("pi@eq3", 120, 10).fractional)

    def test_extension_never_rewrites(self):
        short = reference_digits("zeta3", 40, 10).fractional
        long = reference_digits("zeta3", 90, 10).fractional
        self.assertTrue(long.startswith(short))

    def test_hex_matches_bbp(self):
        ref = reference_digits("pi", len(PI_HEX), 16)
        self.assertEqual(ref.fractional, PI_HEX)
        self.assertEqual(bbp_hex_digits(1, len(PI_HEX)), PI_HEX)

    def test_committed_fixtures(self):
        for name in ("pi_eq1", "pi_sqrt3", "pi_squared", "zeta3", "golden_ln"):
            for base in (2, 10, 16):
                with self.subTest(constant=name, base=base):
                    fixture = read_fixture(fixture_path(default_fixture_dir(), name, base))
                    self.assertEqual(len(fixture.fractional), 1000)
                    ref = reference_digits(name, 1000, base)
                    self.assertEqual(fixture.integer_part, ref.integer_part)
                    self.assertEqual(fixture.fractional, ref.fractional)

    def test_digit_at(self):
        ref = reference_digits("pi", 6, 100)
        self.assertEqual(ref.digit_at(1), "14")
        self.assertEqual(ref.digit_at(6), "89")
        with self.assertRaises(ValueError):
            ref.digit_at(7)

    def test_rejects_bad_input(self):
        with self.assertRaises(ValueError):
            reference_digits("pi", 0, 10)
        with self.assertRaises(ValueError):
            reference_digits("pi", 5, 1)


class TestBBP(unittest.TestCase):

    def test_examples(self):
        self.assertEqual(bbp_hex_pi(1), 2)
        self.assertEqual(bbp_hex_pi(2), 4)
        self.assertEqual(bbp_hex_pi(6), 10)
        with self.assertRaises(ValueError):
            bbp_hex_pi(0)

    def test_later_positions(self):
        # 144 hexadecimal digits of pi, as used by Blowfish
        fixture = read_fixture(fixture_path(default_fixture_dir(), "pi_eq1", 16))
        self.assertEqual(bbp_hex_digits(100, 45), fixture.fractional[99:144])


@unittest.skipUnless(MPMATH_AVAILABLE, "mpmath not installed")
class TestNamedConstants(unittest.TestCase):

    def test_pi(self):
        self.assertEqual(named_constant("pi", 30), "3.141592653589793238462643383279")

    def test_registry_affine_maps(self):
        for name in AVAILABLE_SERIES:
            with self.subTest(constant=name):
                ref = reference_digits(name, 40, 10)
                whole, frac = named_constant(name, 50).split(".")
                self.assertEqual(whole, ref.integer_part)
                self.assertEqual(frac[:40], ref.fractional)


class TestVerifyRange(unittest.TestCase):

    def test_pi_decimal(self):
        report = verify_range("pi", 1, 40, 10)
        self.assertTrue(report.ok)
        self.assertEqual(report.checked, 40)
        self.assertGreaterEqual(report.min_confidence, 1)
        self.assertIsNone(report.first_mismatch)

    def test_pi_hex_with_bbp(self):
        report = verify_range("pi", 1, 40, 16)
        self.assertTrue(report.ok)
        self.assertEqual(report.bbp_mismatches, [])

    def test_zeta3_offset_range(self):
        report = verify_range("zeta3", 21, 60, 10, window=7)
        self.assertTrue(report.ok)
        self.assertEqual(report.windows, 6)

    def test_detects_mismatch(self):
        good = reference_digits("golden_ln", 30, 10)
        corrupted = ReferenceDigits(
            constant=good.constant, base=10, integer_part=good.integer_part,
            fractional=good.fractional[:11] + str((int(good.fractional[11]) + 1) % 10)
            + good.fractional[12:],
            precision_terms=0, guard_digits=0,
        )
        report = verify_range("golden_ln", 1, 30, 10, reference=corrupted)
        self.assertFalse(report.ok)
        self.assertEqual(report.first_mismatch, 12)
        self.assertEqual(len(report.mismatches), 1)
        self.assertFalse(report.to_dict()['ok'])

    def test_window_for_uses_log2_of_base(self):
        self.assertEqual(window_for(10, 16), 16)
        self.assertEqual(window_for(10, 40), 32)
        self.assertEqual(window_for(16, 32), 30)
        self.assertEqual(window_for(256, 32), 15)

    def test_rejects_bad_range(self):
        with self.assertRaises(ValueError):
            verify_range("pi", 5, 4)
        with self.assertRaises(ValueError):
            verify_range("pi", 1, 20000)


if __name__ == '__main__':
    unittest.main(verbosity=2)
