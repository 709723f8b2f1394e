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

from flamekit.command import DigraphCommand, default_seed, dot_or_json, \
        load_side_digraph, split_ids
from flamekit.digraph import RootedDigraph
from flamekit.extend import MODES, default_mode, extend_flame


logger = logging.getLogger('extend')


class Command(DigraphCommand):
    """
    Extends a flame of the input to a large flame and emits its verified
    certificate.
    """

    help = 'Extends a flame F of D to a large flame F* containing it.'

    def add_arguments(self, parser):
        super(Command, self).add_arguments(parser)

        parser.add_argument('--flame', required=False, default=None,
                            help='Edge list of the flame F. Defaults to the '
                                 'edgeless flame')
        parser.add_argument('--mode', choices=MODES, default=None,
                            help='Target in-edge sets. Defaults to %s' %
                                 default_mode())
        parser.add_argument('--order', required=False, default=None,
                            help='Comma-separated vertex order. Defaults to '
                                 'the canonical order')
        parser.add_argument('--seed', type=int, default=None,
                            help='Seed recorded in the certificate. '
                                 'Defaults to FLAMEKIT_SEED')
        parser.add_argument('--debug', action='store_true',
                            help='Check every intermediate state')
        parser.add_argument('--dot', action='store_true',
                            help='Emit F* as DOT with the edges of F in bold')
        parser.add_argument('--cap-in-degree', type=int, default=None,
                            help='Widest in-edge interval enumerated by the '
                                 'faithful mode')

    def handle(self, *args, **options):
        if options['debug']:
            logging.getLogger('flamekit').setLevel(logging.DEBUG)

        digraph = self.digraph
        if options['flame']:
            flame = load_side_digraph(options['flame'], digraph.root)
        else:
            flame = RootedDigraph(digraph.vertices, (), root=digraph.root)

        seed = options['seed']
        certificate = extend_flame(digraph, flame, mode=options['mode'],
                                   vertex_order=split_ids(options['order'])
                                   or None,
                                   cap=options['cap_in_degree'],
                                   debug=options['debug'],
                                   seed=default_seed() if seed is None
                                   else seed)
        logger.info('F* has %d edges', len(certificate.flame.edges))

        return dot_or_json(certificate.flame, certificate.to_json(),
                           options['dot'], 'f_star', highlight=flame.edges)
