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

from flamekit.command import DigraphCommand
from flamekit.menger import erdos_menger_pair, erdos_menger_pair_sets


logger = logging.getLogger('menger')


class Command(DigraphCommand):
    """
    Emits an Erdős-Menger pair: a maximum path-system with an orthogonal
    separation.

    With ``--target v`` the pair is an (r, v)-pair of ``D - rv``; with
    ``--sources`` and ``--sinks`` (or the input's annotations) it is a
    disjoint (X, Y)-pair.
    """

    help = 'Computes an orthogonal path-system and separation.'

    def add_arguments(self, parser):
        super(Command, self).add_arguments(parser)

        parser.add_argument('--target', required=False, default=None,
                            help='Pair for the root and this vertex')
        parser.add_argument('--sources', required=False, default=None,
                            help='Comma-separated source side X')
        parser.add_argument('--sinks', required=False, default=None,
                            help='Comma-separated sink side Y')

    def handle(self, *args, **options):
        target = options['target']
        if target is not None:
            pair = erdos_menger_pair(self.digraph, self.check_vertex(target))
        else:
            sources, sinks = self.sides(options['sources'], options['sinks'])
            pair = erdos_menger_pair_sets(self.digraph, sources, sinks)

        logger.info('Found %d paths', len(pair.system))
        output = pair.to_json()
        output['size'] = len(pair.system)

        return output
