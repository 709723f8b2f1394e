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


import importlib
import os
import pkgutil
import sys

import flamekit
from flamekit.command import BaseCommand, CommandError
from flamekit.utils import log


COMMANDS_DIR = os.path.join(os.path.dirname(__file__), 'commands')


def find_commands():
    """
    The sorted names of all available commands as typed on the command line,
    e.g. ``separation-min`` for the ``separation_min`` module.
    """
    return sorted(name.replace('_', '-') for _, name, ispkg in
                  pkgutil.iter_modules([COMMANDS_DIR])
                  if not ispkg and not name.startswith('_'))


def load_command_class(name):
    """
    Given a command name, returns the Command class instance. All errors raised
    by the import process (ImportError, AttributeError) are allowed to
    propagate.
    """
    module = importlib.import_module('flamekit.commands.%s' %
                                     name.replace('-', '_'))
    return module.Command()


def call_command(command, *args, **options):
    """
    Run ``command``, a name or a command instance, and return its output.

    ``args`` are the positional command-line arguments and ``options`` the
    flags, named after their destination (``max_n`` for ``--max-n``).
    Omitted flags take their command-line defaults. The output is written to
    stdout as well.
    """
    if not isinstance(command, BaseCommand):
        command = load_command_class(command)

    parser = command.create_parser('flamekit', command.name)
    parsed = vars(parser.parse_args([str(a) for a in args]))

    unknown = sorted(set(options) - set(parsed))
    if unknown:
        raise CommandError('Unknown options for %s: %s' %
                           (command.name, ', '.join(unknown)))
    parsed.update(options)

    return command.execute(**parsed)


class CommandManager(object):
    """
    Dispatches ``flamekit <subcommand> [options]`` to the subcommand.
    """

    def __init__(self, argv):
        self._argv = list(argv)
        self._prog_name = os.path.basename(self._argv[0])

    def main_help_text(self, commands_only=False):
        """
        The command list, optionally with usage and one line per command.
        """
        commands = find_commands()
        if commands_only:
            return '\n'.join(commands)

        width = max(len(name) for name in commands)
        lines = [
            'usage: %s <subcommand> [options] [input]' % self._prog_name,
            '',
            'Type \'%s help <subcommand>\' for help on a specific '
            'subcommand.' % self._prog_name,
            '',
            'Available subcommands:',
        ]
        for name in commands:
            lines.append('    %s  %s' % (name.ljust(width),
                                         load_command_class(name).help))

        return '\n'.join(lines)

    def fetch_command(self, subcommand):
        """
        The command called ``subcommand``. Unknown names exit with status 1.
        """
        if subcommand not in find_commands():
            sys.stderr.write('Unknown command - %r. Type \'%s help\' for '
                             'usage\n' % (subcommand, self._prog_name))
            sys.exit(1)

        return load_command_class(subcommand)

    def execute(self):
        """
        Run the subcommand named by the first argument, or print help.
        """
        args = self._argv[1:]

        if not args or args[0] in ('-h', '--help'):
            sys.stdout.write('%s\n' % self.main_help_text())
        elif args[0] == '--version':
            sys.stdout.write('%s %s\n' % (self._prog_name,
                                          flamekit.__version__))
        elif args[0] == 'help':
            topics = args[1:]
            if '--commands' in topics:
                sys.stdout.write('%s\n' %
                                 self.main_help_text(commands_only=True))
            elif topics:
                self.fetch_command(topics[0]).print_help(self._prog_name,
                                                         topics[0])
            else:
                sys.stdout.write('%s\n' % self.main_help_text())
        else:
            self.fetch_command(args[0]).run_from_argv(self._argv)


def main():
    """
    The main function.

    Use the command manager to execute a command.
    """
    log.configure_logging()
    manager = CommandManager(sys.argv)
    manager.execute()


if __name__ == '__main__':
    main()
