"""
Copyright (c) 2019 The flamekit authors

Permission is hereby granted, free of charge, to any person obtaining a copy
of this software and associated documentation files (the "Software"), to deal
in the Software without restriction, including without limitation the rights
to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
copies of the Software, and to permit persons to whom the Software is
furnished to do so, subject to the following conditions:

The above copyright notice and this permission notice shall be included in all
copies or substantial portions of the Software.

THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE
SOFTWARE.
"""


from fractions import Fraction
from unittest import TestCase

from hypothesis import given
from hypothesis import strategies as st

from flamekit.errors import DomainError
from flamekit.oracle import SplitRandom, parse_probability


class ParseProbabilityTestCase(TestCase):
    def test_exact(self):
        """Decimal strings and fractions parse exactly."""
        self.assertEqual(parse_probability('0.35'), Fraction(7, 20))
        self.assertEqual(parse_probability('1/3'), Fraction(1, 3))
        self.assertEqual(parse_probability(1), Fraction(1))

    def test_out_of_range(self):
        """Probabilities lie in [0, 1]."""
        with self.assertRaises(DomainError):
            parse_probability('1.5')
        with self.assertRaises(DomainError):
            parse_probability('-0.1')

    def test_garbage(self):
        """Non-numbers are domain errors."""
        with self.assertRaises(DomainError):
            parse_probability('often')
        with self.assertRaises(DomainError):
            parse_probability('1/0')


class SplitRandomTestCase(TestCase):
    def test_reproducible(self):
        """The same seed gives the same words."""
        first = SplitRandom(42)
        second = SplitRandom(42)
        self.assertEqual([first.raw() for _ in range(5)],
                         [second.raw() for _ in range(5)])

    def test_words_are_64_bit(self):
        """Raw words are non-negative and below 2**64."""
        rng = SplitRandom(1)
        for _ in range(20):
            self.assertTrue(0 <= rng.raw() < 2 ** 64)

    def test_split_is_independent(self):
        """Children differ from each other and do not consume the parent."""
        parent = SplitRandom(3)
        first = parent.split(0)
        second = parent.split(1)
        self.assertNotEqual([first.raw() for _ in range(3)],
                            [second.raw() for _ in range(3)])
        self.assertEqual(parent.raw(), SplitRandom(3).raw())
        self.assertEqual(parent.split(0).spawn_key, (0,))
        self.assertEqual(parent.split(0).split(2).spawn_key, (0, 2))

    def test_bernoulli_extremes(self):
        """p = 0 never fires and p = 1 always does."""
        rng = SplitRandom(5)
        self.assertFalse(any(rng.bernoulli('0') for _ in range(50)))
        self.assertTrue(all(rng.bernoulli('1') for _ in range(50)))

    def test_negative_seed(self):
        """Seeds are non-negative."""
        with self.assertRaises(DomainError):
            SplitRandom(-1)

    def test_randbelow_bound(self):
        """A bound of zero is rejected."""
        with self.assertRaises(DomainError):
            SplitRandom(0).randbelow(0)

    @given(seed=st.integers(min_value=0, max_value=2 ** 64),
           bound=st.integers(min_value=1, max_value=2 ** 40))
    def test_randbelow_range(self, seed, bound):
        """Draws lie in [0, bound)."""
        self.assertTrue(0 <= SplitRandom(seed).randbelow(bound) < bound)

    @given(seed=st.integers(min_value=0, max_value=2 ** 32),
           items=st.lists(st.integers(), max_size=20))
    def test_shuffled_is_permutation(self, seed, items):
        """Shuffling keeps every item and leaves the input alone."""
        original = list(items)
        shuffled = SplitRandom(seed).shuffled(items)
        self.assertEqual(sorted(shuffled), sorted(original))
        self.assertEqual(items, original)
