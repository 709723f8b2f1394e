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


import threading
from unittest import TestCase

import mock

from flamekit.errors import CapExceeded
from flamekit.utils.pool import default_jobs, parallel_map


class ParallelMapTestCase(TestCase):
    def test_order(self):
        """Results come back in input order whatever the job count."""
        items = list(range(20))
        for jobs in (1, 2, 7):
            self.assertEqual(parallel_map(lambda x: x * x, items, jobs=jobs),
                             [x * x for x in items])

    def test_single_item(self):
        """A single item runs in the calling thread."""
        seen = set()

        def record(item):
            seen.add(threading.current_thread().name)
            return item

        self.assertEqual(parallel_map(record, [1], jobs=4), [1])
        self.assertEqual(seen, {threading.current_thread().name})

    def test_errors_propagate(self):
        """An exception in a worker reaches the caller."""
        def fail(item):
            raise CapExceeded('in_degree', 1, item, what='test')

        with self.assertRaises(CapExceeded):
            parallel_map(fail, [2, 3], jobs=2)

    @mock.patch.dict('os.environ', {'FLAMEKIT_JOBS': '3'})
    def test_environment(self):
        """FLAMEKIT_JOBS overrides the configured job count."""
        self.assertEqual(default_jobs(), 3)

    @mock.patch.dict('os.environ', {'FLAMEKIT_JOBS': ''})
    def test_configured(self):
        """The configured job count applies without an override."""
        self.assertEqual(default_jobs(), 1)
