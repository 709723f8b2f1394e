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


from flamekit.command import CommandError, DigraphCommand, parse_edges
from flamekit.incompressibility import bubble


class Command(DigraphCommand):
    """
    Finds a separation around the head of an edge that every realization of
    an in-edge set needs.

    Edges are written ``tail:head``.
    """

    help = 'Builds the separation and path-system around a forced edge.'

    def add_arguments(self, parser):
        super(Command, self).add_arguments(parser)

        parser.add_argument('--target', required=False, default=None,
                            help='The vertex w')
        parser.add_argument('--edges', required=False, default='',
                            help='Comma-separated in-edges I of w')
        parser.add_argument('--edge', required=False, default=None,
                            help='The forced edge uv')

    def handle(self, *args, **options):
        if not options['target'] or not options['edge']:
            raise CommandError('bubble needs --target and --edge')

        edge = parse_edges(options['edge'])
        if len(edge) != 1:
            raise CommandError('--edge takes exactly one edge')

        result = bubble(self.digraph, self.check_vertex(options['target']),
                        parse_edges(options['edges']), edge[0])

        return result.to_json()
