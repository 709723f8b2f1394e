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

import numpy as np

from flamekit.errors import DomainError


_WORD = 1 << 64


def parse_probability(value):
    """
    Parse an edge probability as an exact fraction in ``[0, 1]``.
    """
    try:
        probability = Fraction(str(value))
    except (ValueError, ZeroDivisionError):
        raise DomainError('%r is not a probability' % (value,))
    if not 0 <= probability <= 1:
        raise DomainError('%s is not in [0, 1]' % value)

    return probability


class SplitRandom(object):
    """
    A seeded stream of 64-bit words from numpy's PCG64 bit generator.

    Only raw words are drawn, so streams are reproducible from the
    documented algorithm alone. :meth:`split` derives an independent child
    stream through ``SeedSequence`` spawn keys.
    """

    def __init__(self, seed, spawn_key=()):
        self.seed = int(seed)
        if self.seed < 0:
            raise DomainError('Seeds must be non-negative')
        self.spawn_key = tuple(spawn_key)

        sequence = np.random.SeedSequence(self.seed, spawn_key=self.spawn_key)
        self._bits = np.random.PCG64(sequence)

    def raw(self):
        return int(self._bits.random_raw())

    def bernoulli(self, probability):
        probability = parse_probability(probability)
        threshold = probability.numerator * _WORD // probability.denominator
        return self.raw() < threshold

    def randbelow(self, bound):
        """
        A uniform integer in ``[0, bound)`` by rejection sampling.
        """
        if bound <= 0:
            raise DomainError('randbelow needs a positive bound')

        limit = _WORD - _WORD % bound
        while True:
            word = self.raw()
            if word < limit:
                return word % bound

    def shuffled(self, items):
        """
        A Fisher-Yates shuffled copy of ``items``.
        """
        items = list(items)
        for i in range(len(items) - 1, 0, -1):
            j = self.randbelow(i + 1)
            items[i], items[j] = items[j], items[i]
        return items

    def split(self, key):
        return SplitRandom(self.seed, self.spawn_key + (int(key),))
