"""
Copyright (c) Django Software Foundation and individual contributors.
Copyright (c) 2019 The flamekit authors
All rights reserved.

Redistribution and use in source and binary forms, with or without modification,
are permitted provided that the following conditions are met:

    1. Redistributions of source code must retain the above copyright notice,
       this list of conditions and the following disclaimer.

    2. Redistributions in binary form must reproduce the above copyright
       notice, this list of conditions and the following disclaimer in the
       documentation and/or other materials provided with the distribution.

    3. Neither the name of Django nor the names of its contributors may be used
       to endorse or promote products derived from this software without
       specific prior written permission.

THIS SOFTWARE IS PROVIDED BY THE COPYRIGHT HOLDERS AND CONTRIBUTORS "AS IS" AND
ANY EXPRESS OR IMPLIED WARRANTIES, INCLUDING, BUT NOT LIMITED TO, THE IMPLIED
WARRANTIES OF MERCHANTABILITY AND FITNESS FOR A PARTICULAR PURPOSE ARE
DISCLAIMED. IN NO EVENT SHALL THE COPYRIGHT OWNER OR CONTRIBUTORS BE LIABLE FOR
ANY DIRECT, INDIRECT, INCIDENTAL, SPECIAL, EXEMPLARY, OR CONSEQUENTIAL DAMAGES
(INCLUDING, BUT NOT LIMITED TO, PROCUREMENT OF SUBSTITUTE GOODS OR SERVICES;
LOSS OF USE, DATA, OR PROFITS; OR BUSINESS INTERRUPTION) HOWEVER CAUSED AND ON
ANY THEORY OF LIABILITY, WHETHER IN CONTRACT, STRICT LIABILITY, OR TORT
(INCLUDING NEGLIGENCE OR OTHERWISE) ARISING IN ANY WAY OUT OF THE USE OF THIS
SOFTWARE, EVEN IF ADVISED OF THE POSSIBILITY OF SUCH DAMAGE.
"""


from abc import ABCMeta, abstractmethod
from argparse import ArgumentParser
import json
import logging
import os
import sys

from flamekit.digraph import load_digraph, parse_annotations, to_dot, validate
from flamekit.errors import CapExceeded, DomainError, ParseError
from flamekit.utils import log


# Exit status of each library error family. InternalConsistencyError has no
# status and propagates with its traceback.
EXIT_STATUS = (
    (ParseError, 1),
    (DomainError, 2),
    (CapExceeded, 3),
)


class CommandError(Exception):
    """
    Exception class indicating a problem while executing a command.

    ``status`` is the process exit status and ``diagnostic`` the JSON
    document written to stderr when the command runs from the command line.
    """

    def __init__(self, message, status=1, diagnostic=None):
        super(CommandError, self).__init__(message)
        self.status = status
        self.diagnostic = diagnostic or {'error': 'usage-error',
                                         'message': message}

    @classmethod
    def from_library(cls, error):
        for error_class, status in EXIT_STATUS:
            if isinstance(error, error_class):
                return cls(str(error), status=status,
                           diagnostic=error.to_json())
        return None


class CommandParser(ArgumentParser):
    """
    Customized ``ArgumentParser`` class that reports argument errors as
    ``CommandError`` instead of exiting, so that unknown flags get the same
    JSON diagnostic as every other failure.
    """

    def __init__(self, cmd, **kwargs):
        self._cmd = cmd
        super(CommandParser, self).__init__(**kwargs)

    def error(self, message):
        if self._cmd and self._cmd.called_from_command_line:
            self.print_usage(sys.stderr)
        raise CommandError(message)


def default_seed():
    """
    The ``FLAMEKIT_SEED`` environment variable, or 0.
    """
    try:
        return int(os.environ.get('FLAMEKIT_SEED', 0))
    except ValueError:
        raise CommandError('FLAMEKIT_SEED must be an integer')


def render(output):
    """
    Canonical text for a command result: JSON with sorted keys, or the text
    itself for DOT and edge lists.
    """
    if isinstance(output, str):
        return output if output.endswith('\n') else output + '\n'

    return json.dumps(output, indent=4, sort_keys=True) + '\n'


class BaseCommand(metaclass=ABCMeta):
    """
    The base class that all commands ultimately derive from.

    This class is based on Django's ``BaseCommand`` class. The normal flow
    works as follows:

    1. ``manage.py`` loads the command class and calls its ``run_from_argv()``
       method.

    2. The ``run_from_argv()`` method calls ``create_parser()`` to get an
       ``ArgumentParser`` for the arguments, parses them and then calls the
       ``execute()`` method, passing the parsed arguments.

    3. The ``execute()`` method sets up logging and the worker count, calls
       ``handle()`` and writes whatever it returns to stdout.

    4. If anything raises a ``CommandError`` or a library error with a known
       exit status, ``run_from_argv()`` writes the diagnostic as JSON to
       stderr and exits with that status.

    ``handle()`` returns either a JSON-serializable object or a ready string
    (DOT, edge list).
    """

    # Metadata about this command
    help = ''

    called_from_command_line = False

    def __init__(self):
        self._jobs = None

    def create_parser(self, prog_name, subcommand):
        """
        Create and return the ``CommandParser`` which will be used to parse
        the arguments to this command.
        """
        parser = CommandParser(
            self, prog='%s %s' % (os.path.basename(prog_name), subcommand),
            description=self.help or None)

        parser.add_argument('-v', '--verbose', action='store_true',
                            help='Log progress at INFO level')
        parser.add_argument('--jobs', type=int, default=None,
                            help='Worker threads for per-vertex checks')
        self.add_arguments(parser)

        return parser

    def add_arguments(self, parser):
        """
        Entry point for subclassed commands to add custom arguments.
        """
        pass

    def print_help(self, prog_name, subcommand):
        parser = self.create_parser(prog_name, subcommand)
        parser.print_help()

    def run_from_argv(self, argv):
        """
        Run this command. Errors with a known exit status are logged, written
        to stderr as JSON and turned into that exit status.
        """
        self.called_from_command_line = True

        try:
            parser = self.create_parser(argv[0], argv[1])
            options = vars(parser.parse_args(argv[2:]))

            output = self.execute(**options)
        except Exception as e:
            error = e if isinstance(e, CommandError) else \
                CommandError.from_library(e)
            if error is None:
                raise

            logger = logging.getLogger(self.name)
            logger.error(error)
            sys.stderr.write(render(error.diagnostic))
            sys.exit(error.status)

        return output

    def handle_common_args(self, **options):
        """
        Handle any common command options here and remove them from the options
        dict given to the command.
        """
        verbose = options.pop('verbose', False)
        self._jobs = options.pop('jobs', None)
        if self._jobs is not None and self._jobs < 1:
            raise CommandError('--jobs must be positive')

        if self.called_from_command_line and verbose:
            log.configure_logging(level=logging.INFO)

        return options

    def execute(self, *args, **options):
        """
        Try to execute the command and write its result to stdout.
        """
        options = self.handle_common_args(**options)

        output = self.handle(*args, **options)
        if output is not None:
            sys.stdout.write(render(output))

        return output

    @property
    def jobs(self):
        return self._jobs

    @property
    def name(self):
        return self.__module__.split('.')[-1].replace('_', '-')

    @abstractmethod
    def handle(self, *args, **options):
        """
        The actual logic of the command. Subclasses must implement this method.
        """
        raise NotImplementedError('subclasses of BaseCommand must provide a '
                                  'handle() method')


# pylint: disable=abstract-method
# We don't want to implement handle() in this class
class DigraphCommand(BaseCommand):
    """
    The base command for all commands that read a rooted digraph.

    The input is an edge list or a certificate JSON document, read from a
    file or from stdin when the path is ``-``. An invalid digraph is a domain
    error.
    """

    # Commands that report invalid digraphs themselves turn this off
    require_valid = True

    def __init__(self):
        super(DigraphCommand, self).__init__()

        self._text = None
        self._digraph = None

    def add_arguments(self, parser):
        super(DigraphCommand, self).add_arguments(parser)

        parser.add_argument('input', nargs='?', default='-',
                            help='Edge list or certificate JSON. Defaults to '
                                 'stdin')

    def handle_common_args(self, **options):
        options = super(DigraphCommand, self).handle_common_args(**options)

        path = options.pop('input', '-')
        self._text = read_input(path)
        self._digraph = load_digraph(self._text)

        diagnostics = validate(self._digraph)
        if diagnostics and self.require_valid:
            raise DomainError('The input is not a valid rooted digraph: %s' %
                              diagnostics[0], subject=diagnostics[0].subject)

        return options

    @property
    def digraph(self):
        return self._digraph

    @property
    def annotations(self):
        """
        The ``# sources:`` and ``# sinks:`` annotations of the input.
        """
        return parse_annotations(self._text)

    def check_vertex(self, vertex):
        if not self._digraph.has_vertex(vertex):
            raise DomainError('%s is not a vertex of the digraph' % vertex,
                              subject=vertex)
        return vertex

    def sides(self, sources, sinks):
        """
        The X and Y vertex sets from ``--sources``/``--sinks``, falling back
        to the input's annotations.
        """
        annotations = self.annotations
        sources = split_ids(sources) or annotations.get('sources')
        sinks = split_ids(sinks) or annotations.get('sinks')
        if not sources or not sinks:
            raise CommandError('Give --sources and --sinks or annotate the '
                               'input with "# sources:" and "# sinks:"')

        for vertex in sources + sinks:
            self.check_vertex(vertex)

        return frozenset(sources), frozenset(sinks)


def read_input(path):
    """
    Read the whole input text from ``path``, or from stdin for ``-``.
    """
    if path == '-':
        return sys.stdin.read()

    try:
        with open(path, 'r') as f:
            return f.read()
    except IOError as e:
        raise CommandError('Cannot read %s: %s' % (path, e.strerror))


def split_ids(value):
    """
    Parse a comma-separated list of vertex ids.
    """
    return [v for v in (value or '').split(',') if v]


def dot_or_json(digraph, output, dot, name, highlight=()):
    """
    The DOT rendering of ``digraph`` if ``--dot`` was given, else ``output``.
    """
    if dot:
        return to_dot(digraph, name=name, highlight=highlight)
    return output


def parse_edges(value):
    """
    Parse a comma-separated list of ``tail:head`` edges.
    """
    edges = []
    for item in split_ids(value):
        tail, sep, head = item.partition(':')
        if not sep or not tail or not head:
            raise CommandError('Expected "tail:head", got %r' % item)
        edges.append((tail, head))

    return edges


def load_side_digraph(path, root):
    """
    Load a second digraph (host, base or flame) given by a flag.
    """
    digraph = load_digraph(read_input(path))
    diagnostics = validate(digraph)
    if diagnostics:
        raise DomainError('%s is not a valid rooted digraph: %s' %
                          (path, diagnostics[0]), subject=path)
    if digraph.root != root:
        raise DomainError('%s has root %s instead of %s' %
                          (path, digraph.root, root), subject=path)

    return digraph
