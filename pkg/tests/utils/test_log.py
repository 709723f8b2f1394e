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


import io
import logging
from unittest import TestCase

import mock

from flamekit.utils.log import SUCCESS, ColoredFormatter, configure_logging, \
        resolve_level


class ColoredFormatterTestCase(TestCase):
    def _record(self, level):
        return logging.LogRecord('flamekit.menger', level, __file__, 1,
                                 'found %d paths', (2,), None)

    def test_plain(self):
        """Without colors the message is formatted as is."""
        formatter = ColoredFormatter(use_color=False)
        self.assertEqual(formatter.format(self._record(logging.WARNING)),
                         'WARNING: [flamekit.menger] found 2 paths')

    def test_colored_copy(self):
        """Coloring leaves the original record untouched."""
        record = self._record(logging.ERROR)
        output = ColoredFormatter(use_color=True).format(record)

        self.assertIn('found 2 paths', output)
        self.assertEqual(record.levelname, 'ERROR')
        self.assertEqual(record.getMessage(), 'found 2 paths')

    def test_uncolored_level(self):
        """INFO records carry no color codes."""
        output = ColoredFormatter(use_color=True).format(
            self._record(logging.INFO))
        self.assertEqual(output, 'INFO: [flamekit.menger] found 2 paths')


class ConfigureLoggingTestCase(TestCase):
    def setUp(self):
        root = logging.getLogger()
        self._saved = root.handlers[:], root.level

    def tearDown(self):
        root = logging.getLogger()
        root.handlers, level = self._saved
        root.setLevel(level)

    @mock.patch.dict('os.environ', {'FLAMEKIT_LOG_LEVEL': 'debug'})
    def test_environment_override(self):
        """FLAMEKIT_LOG_LEVEL wins over the requested level."""
        self.assertEqual(resolve_level(logging.WARNING), logging.DEBUG)

    @mock.patch.dict('os.environ', {'FLAMEKIT_LOG_LEVEL': 'chatty'})
    def test_unknown_override(self):
        """Unknown level names are ignored."""
        self.assertEqual(resolve_level(logging.WARNING), logging.WARNING)

    @mock.patch.dict('os.environ', {'FLAMEKIT_LOG_LEVEL': ''})
    def test_success_level(self):
        """Successes pass a SUCCESS threshold and INFO does not."""
        stream = io.StringIO()
        configure_logging(level=SUCCESS, stream=stream)

        logger = logging.getLogger('flamekit.test')
        logger.info('hidden')
        logger.success('All %d cases agree', 3)

        self.assertEqual(stream.getvalue(),
                         'SUCCESS: [flamekit.test] All 3 cases agree\n')
