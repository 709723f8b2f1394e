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


class FlameKitError(Exception):
    """
    Base class for all errors raised by the flamekit library.

    ``kind`` is the machine-readable tag written into CLI diagnostics.
    """
    kind = 'error'

    def __init__(self, message, subject=None):
        super(FlameKitError, self).__init__(message)
        self.subject = subject

    def to_json(self):
        diagnostic = {
            'error': self.kind,
            'message': str(self),
        }
        if self.subject is not None:
            diagnostic['subject'] = self.subject

        return diagnostic


class DomainError(FlameKitError):
    """
    An operation was called outside its domain, e.g. with ``v = r`` or with an
    edge set that is not drawn from the digraph.
    """
    kind = 'domain-error'


class ParseError(FlameKitError):
    """
    The edge-list or JSON input could not be parsed.
    """
    kind = 'parse-error'

    def __init__(self, message, lineno=None):
        super(ParseError, self).__init__(message)
        self.lineno = lineno

    def __str__(self):
        message = super(ParseError, self).__str__()
        if self.lineno is None:
            return message

        return 'line %d: %s' % (self.lineno, message)

    def to_json(self):
        diagnostic = super(ParseError, self).to_json()
        if self.lineno is not None:
            diagnostic['line'] = self.lineno

        return diagnostic


class CapExceeded(FlameKitError):
    """
    An enumeration would exceed one of the configured caps. The operation
    refuses rather than truncating.
    """
    kind = 'cap-exceeded'

    def __init__(self, cap, limit, actual, what='the instance', subject=None):
        super(CapExceeded, self).__init__(
            '%s is %d, above the %s cap of %d' % (what, actual, cap, limit),
            subject=subject)
        self.cap = cap
        self.limit = limit
        self.actual = actual

    def to_json(self):
        diagnostic = super(CapExceeded, self).to_json()
        diagnostic.update({
            'cap': self.cap,
            'limit': self.limit,
            'actual': self.actual,
        })

        return diagnostic


class InternalConsistencyError(FlameKitError):
    """
    A self-verification failed. This always indicates a bug in flamekit and is
    never turned into a regular diagnostic.
    """
    kind = 'internal-consistency'
