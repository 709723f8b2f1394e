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


from flamekit.command import DigraphCommand, default_seed, dot_or_json, \
        split_ids
from flamekit.extend import lovasz


class Command(DigraphCommand):
    """
    Finds a spanning flame whose in-degrees are the local connectivities
    from the root.
    """

    help = 'Computes a connectivity-preserving spanning flame.'

    def add_arguments(self, parser):
        super(Command, self).add_arguments(parser)

        parser.add_argument('--order', required=False, default=None,
                            help='Comma-separated vertex order')
        parser.add_argument('--seed', type=int, default=None,
                            help='Seed recorded in the certificate')
        parser.add_argument('--debug', action='store_true',
                            help='Check every intermediate state')
        parser.add_argument('--dot', action='store_true',
                            help='Emit F* as DOT')

    def handle(self, *args, **options):
        seed = options['seed']
        certificate = lovasz(self.digraph,
                             vertex_order=split_ids(options['order']) or None,
                             debug=options['debug'],
                             seed=default_seed() if seed is None else seed)

        return dot_or_json(certificate.flame, certificate.to_json(),
                           options['dot'], 'f_star')
