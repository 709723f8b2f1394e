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


import logging
import os
import sys

import termcolor


# Between INFO and WARNING
SUCCESS = 25

DEFAULT_CLI_LEVEL = logging.WARNING

LOG_FORMAT = '%(levelname)s: [%(name)s] %(message)s'

LEVEL_COLORS = {
    logging.DEBUG: 'cyan',
    SUCCESS: 'green',
    logging.WARNING: 'yellow',
    logging.ERROR: 'red',
    logging.CRITICAL: 'red',
}


# pylint: disable=protected-access
def _success(self, msg, *args, **kwargs):
    if self.isEnabledFor(SUCCESS):
        self._log(SUCCESS, msg, args, **kwargs)


# Registered on import so that programmatic callers can log successes
# without configure_logging
logging.addLevelName(SUCCESS, 'SUCCESS')
logging.Logger.success = _success


class ColoredFormatter(logging.Formatter):
    """
    Formats records as ``LEVEL: [logger] message``, colored by level.
    """

    def __init__(self, use_color=True):
        super(ColoredFormatter, self).__init__(fmt=LOG_FORMAT)
        self._use_color = use_color

    def format(self, record):
        color = LEVEL_COLORS.get(record.levelno) if self._use_color else None
        if color is None:
            return super(ColoredFormatter, self).format(record)

        # Color a copy; other handlers see the original record
        record = logging.makeLogRecord(record.__dict__)
        record.msg = termcolor.colored(record.getMessage(), color)
        record.args = None
        record.levelname = termcolor.colored(record.levelname, color)
        record.name = termcolor.colored(record.name, color)

        return super(ColoredFormatter, self).format(record)


def resolve_level(level):
    """
    The ``FLAMEKIT_LOG_LEVEL`` environment variable (e.g. ``DEBUG``) if set
    to a known level name, else ``level``.
    """
    override = os.environ.get('FLAMEKIT_LOG_LEVEL')
    if override:
        resolved = logging.getLevelName(override.upper())
        if isinstance(resolved, int):
            return resolved

    return level


def configure_logging(level=DEFAULT_CLI_LEVEL, use_color=None, stream=None):
    """
    Route every log record to ``stream`` (stderr by default) so that JSON
    and DOT output on stdout stay machine-readable. Colors default to
    whether the stream is a terminal.
    """
    stream = stream or sys.stderr
    if use_color is None:
        use_color = hasattr(stream, 'isatty') and stream.isatty()

    handler = logging.StreamHandler(stream)
    handler.setFormatter(ColoredFormatter(use_color=use_color))

    root = logging.getLogger()
    root.handlers = [handler]
    root.setLevel(resolve_level(level))
