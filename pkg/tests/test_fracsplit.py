"""
Tests for the fraction splitting algorithm.

Every decomposition is checked against exact rationals: the unit-fraction
residues must add up to the target modulo 1.
"""

import math
import os
import random
import sys
import unittest
from fractions import Fraction

import numpy as np
from hypothesis import given, settings, strategies as st

# Add the project root to the path
current_dir = os.path.dirname(os.path.abspath(__file__))
project_root = os.path.dirname(current_dir)
sys.path.insert(0, project_root)

from nth_digits.core.base import PrimePower, ScaledNumerator
from nth_digits.core.binomfactor import factor_central_binomial
from nth_digits.core.errors import NotCoprime
from nth_digits.core.fracsplit import (
    cofactor_inverses, decompose, decompose_moduli, decompose_pairwise, pack_moduli,
    scaled_residues, split_pair, split_scaled,
)

BINOM_100_50_SPLIT = ("5/8 + 20/81 + 10/11 + 2/13 + 13/17 + 10/19 + 4/29 + 5/31 + 23/53 + "
               "41/59 + 29/61 + 37/67 + 33/71 + 19/73 + 36/79 + 7/83 + 13/89 + 88/97")

PRIMES = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71,
          73, 79, 83, 89, 97, 101, 65537, 2147483647, 2305843009213693951]


def max_exponent(p):
    e = 1
    while p ** (e + 1) < 2**96:
        e += 1
    return e


@st.composite
def prime_power_sets(draw, max_size=12):
    primes = draw(st.lists(st.sampled_from(PRIMES), min_size=1, max_size=max_size, unique=True))
    return [PrimePower(p, draw(st.integers(min_value=1, max_value=min(max_exponent(p), 8))))
            for p in primes]


def is_integer(x: Fraction) -> bool:
    return x.denominator == 1


class TestSplitPair(unittest.TestCase):

    def test_small_pair(self):
        k1, k2 = split_pair(3, 5)
        self.assertEqual((k1, k2), (2, 2))
        self.assertTrue(is_integer(Fraction(k1, 3) + Fraction(k2, 5) - Fraction(1, 15)))

    def test_not_coprime(self):
        with self.assertRaises(NotCoprime):
            split_pair(4, 6)
        with self.assertRaises(ValueError):
            split_pair(1, 5)

    @given(st.sampled_from(PRIMES), st.sampled_from(PRIMES))
    def test_identity(self, a, b):
        if a == b:
            return
        k1, k2 = split_pair(a, b)
        self.assertTrue(0 <= k1 < a and 0 <= k2 < b)
        self.assertTrue(is_integer(Fraction(k1, a) + Fraction(k2, b) - Fraction(1, a * b)))


class TestDecompose(unittest.TestCase):

    def test_central_binomial_fifty(self):
        decomposition = decompose(factor_central_binomial(50))
        self.assertEqual(str(decomposition), BINOM_100_50_SPLIT)
        total = sum(Fraction(e.a, e.q) for e in decomposition.entries)
        self.assertTrue(is_integer(total - Fraction(1, 100891344545564193334812497256)))

    def test_pairwise_procedure_matches(self):
        factors = factor_central_binomial(50)
        self.assertEqual(decompose_pairwise(factors), decompose(factors))

    def test_plain_moduli(self):
        self.assertEqual(str(decompose_moduli([2, 3, 5])), "1/2 + 1/3 + 1/5")
        with self.assertRaises(NotCoprime) as ctx:
            decompose_moduli([4, 6])
        self.assertEqual(ctx.exception.gcd, 2)

    def test_single_modulus(self):
        self.assertEqual(str(decompose([PrimePower(7, 2)])), "1/49")

    def test_repeated_prime(self):
        with self.assertRaises(NotCoprime):
            decompose([PrimePower(3, 1), PrimePower(3, 2)])

    def test_cofactor_inverses_report_partner(self):
        with self.assertRaises(NotCoprime) as ctx:
            cofactor_inverses([5, 9, 12])
        self.assertEqual(ctx.exception.gcd, 3)

    @given(prime_power_sets())
    @settings(max_examples=300)
    def test_mod_one_identity(self, factors):
        decomposition = decompose(factors)
        m = math.prod(pp.q for pp in factors)
        for entry in decomposition.entries:
            self.assertTrue(0 <= entry.a < entry.q)
        total = sum(Fraction(e.a, e.q) for e in decomposition.entries)
        self.assertTrue(is_integer(total - Fraction(1, m)))

    @given(prime_power_sets(), st.randoms())
    @settings(max_examples=200)
    def test_permutation_invariance(self, factors, rnd):
        shuffled = list(factors)
        rnd.shuffle(shuffled)
        by_modulus = {e.q: e.a for e in decompose(factors).entries}
        shuffled_split = decompose_moduli([pp.q for pp in shuffled])
        self.assertEqual({e.q: e.a for e in shuffled_split.entries}, by_modulus)
        self.assertEqual(decompose_pairwise(shuffled), decompose(factors))


class TestScaledResidues(unittest.TestCase):

    def test_pi_term_four(self):
        # 32/35 = 1/5 + 5/7
        denom = [PrimePower(5, 1), PrimePower(7, 1)]
        residues = scaled_residues(ScaledNumerator(10, 0, [PrimePower(2, 5)]), denom)
        self.assertEqual([str(r) for r in residues], ["1/5", "5/7"])

    def test_numerator_sharing_denominator_prime(self):
        with self.assertRaises(NotCoprime):
            scaled_residues(ScaledNumerator(10, 1, [PrimePower(5, 1)]), [PrimePower(5, 2)])

    def test_negative_exponent(self):
        with self.assertRaises(ValueError):
            scaled_residues(ScaledNumerator(10, -1), [PrimePower(3, 1)])

    @given(prime_power_sets(max_size=8),
           st.integers(min_value=2, max_value=256),
           st.integers(min_value=0, max_value=5000),
           st.lists(st.tuples(st.sampled_from([2, 3, 5, 7, 1009]),
                              st.integers(min_value=1, max_value=300)),
                    max_size=3, unique_by=lambda t: t[0]))
    @settings(max_examples=300)
    def test_shifted_identity(self, factors, base, exponent, numer_spec):
        denom_primes = {pp.p for pp in factors}
        numer = [PrimePower(p, e) for p, e in numer_spec if p not in denom_primes]
        mult = ScaledNumerator(base, exponent, numer)
        residues = scaled_residues(mult, factors)

        m = math.prod(pp.q for pp in factors)
        a = math.prod(pp.p ** pp.e for pp in numer)
        # B^d * A / M mod 1 only depends on B^d * A mod M
        target = Fraction(pow(base, exponent, m) * a % m, m)
        total = sum(Fraction(r.a, r.q) for r in residues)
        self.assertTrue(is_integer(total - target))


def batch_total(batch) -> Fraction:
    total = sum(Fraction(a, q) for a, q in zip(batch.residues.tolist(), batch.moduli.tolist()))
    return total + sum(Fraction(u.a, u.q) for u in batch.wide)


def split_args(factors):
    ordered = sorted(factors, key=lambda pp: pp.p)
    return [pp.p for pp in ordered], [pp.e for pp in ordered]


class TestSplitScaled(unittest.TestCase):

    def test_unpacked_matches_scalar_residues(self):
        factors = factor_central_binomial(50)
        mult = ScaledNumerator(10, 17, [PrimePower(7, 3)])
        batch = split_scaled(mult, *split_args(factors), pack=False)
        self.assertEqual(batch.wide, [])
        expected = scaled_residues(mult, factors)
        self.assertEqual(list(zip(batch.residues.tolist(), batch.moduli.tolist())),
                         [(r.a, r.q) for r in expected])

    def test_packing_keeps_the_sum(self):
        factors = factor_central_binomial(50)
        m = math.prod(pp.q for pp in factors)
        mult = ScaledNumerator(10, 0)
        packed = split_scaled(mult, *split_args(factors))
        self.assertLess(len(packed), len(factors))
        self.assertLess(int(packed.moduli.max()), 2**32)
        self.assertTrue(is_integer(batch_total(packed) - Fraction(1, m)))

    def test_wide_prime_powers(self):
        factors = [PrimePower(3, 30), PrimePower(5, 2), PrimePower(65537, 3),
                   PrimePower(2305843009213693951, 1)]
        m = math.prod(pp.q for pp in factors)
        mult = ScaledNumerator(16, 1000, [PrimePower(7, 40)])
        batch = split_scaled(mult, *split_args(factors))
        self.assertEqual(sorted(u.q for u in batch.wide), [3**30, 65537**3, 2305843009213693951])
        target = Fraction(pow(16, 1000, m) * 7**40 % m, m)
        self.assertTrue(is_integer(batch_total(batch) - target))
        self.assertEqual(batch.widest_bits(), 61)

    def test_empty_denominator(self):
        batch = split_scaled(ScaledNumerator(10, 3), [], [])
        self.assertEqual(len(batch), 0)
        self.assertEqual(batch.widest_bits(), 0)

    @given(prime_power_sets(max_size=10),
           st.integers(min_value=2, max_value=256),
           st.integers(min_value=0, max_value=5000))
    @settings(max_examples=200)
    def test_shifted_identity(self, factors, base, exponent):
        m = math.prod(pp.q for pp in factors)
        batch = split_scaled(ScaledNumerator(base, exponent), *split_args(factors))
        target = Fraction(pow(base, exponent, m), m)
        self.assertTrue(is_integer(batch_total(batch) - target))


class TestPackModuli(unittest.TestCase):

    def test_pairs_small_with_large(self):
        moduli = np.array([2, 3, 5, 7, 65521, 65537], dtype=np.uint64)
        totients = np.array([1, 2, 4, 6, 65520, 65536], dtype=np.uint64)
        packed, phi = pack_moduli(moduli, totients)
        self.assertEqual(math.prod(packed.tolist()), math.prod(moduli.tolist()))
        self.assertEqual(math.prod(phi.tolist()), math.prod(totients.tolist()))
        self.assertTrue(all(q < 2**32 for q in packed.tolist()))
        self.assertLess(len(packed), len(moduli))

    def test_nothing_fits(self):
        moduli = np.array([65537, 65539], dtype=np.uint64)
        packed, _ = pack_moduli(moduli, moduli - np.uint64(1))
        self.assertEqual(sorted(packed.tolist()), [65537, 65539])


def random_case(rng: random.Random):
    primes = rng.sample(PRIMES[:26], rng.randint(1, 10))
    return [PrimePower(p, rng.randint(1, 3)) for p in primes]


class TestSeededBatch(unittest.TestCase):
    """A fixed-seed batch that runs quickly in the default suite."""

    def test_batch(self):
        rng = random.Random(20240101)
        for _ in range(2000):
            factors = random_case(rng)
            m = math.prod(pp.q for pp in factors)
            total = sum(Fraction(e.a, e.q) for e in decompose(factors).entries)
            self.assertTrue(is_integer(total - Fraction(1, m)))


if __name__ == '__main__':
    unittest.main(verbosity=2)
