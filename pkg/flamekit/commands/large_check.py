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

from flamekit.command import CommandError, DigraphCommand, load_side_digraph
from flamekit.errors import DomainError
from flamekit.flames import is_large, is_v_large


logger = logging.getLogger('large-check')


class Command(DigraphCommand):
    """
    Checks that the input is a large spanning subgraph of ``--host``.
    """

    help = 'Checks that the input keeps the root connectivity of the host.'

    def add_arguments(self, parser):
        super(Command, self).add_arguments(parser)

        parser.add_argument('--host', required=False, default=None,
                            help='Edge list of the host digraph D')
        parser.add_argument('--all', action='store_true',
                            help='Emit a witness for every vertex, not only '
                                 'for those that lost in-edges')

    def handle(self, *args, **options):
        if not options['host']:
            raise CommandError('large-check needs --host')

        subgraph = self.digraph
        host = load_side_digraph(options['host'], subgraph.root)
        witnesses = is_large(subgraph, host, all_vertices=options['all'],
                             jobs=self.jobs)
        if witnesses is None:
            for vertex in host.non_root_vertices():
                if is_v_large(subgraph, host, vertex) is None:
                    raise DomainError('Not large at %s' % vertex,
                                      subject=vertex)

        logger.success('The input is large in %s', options['host'])
        return {
            'large': True,
            'witnesses': {v: w.to_json() for v, w in witnesses.items()},
        }
