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


from flamekit.command import DigraphCommand
from flamekit.errors import DomainError
from flamekit.menger import min_separation


class Command(DigraphCommand):
    """
    Emits the smallest Erdős-Menger separation in the separation order.
    """

    help = 'Computes the separation closest to the source side.'

    # Shared with separation-max
    extreme = staticmethod(min_separation)

    def add_arguments(self, parser):
        super(Command, self).add_arguments(parser)

        parser.add_argument('--target', required=False, default=None,
                            help='Separate this vertex from the root in '
                                 'D - rv')
        parser.add_argument('--sources', required=False, default=None,
                            help='Comma-separated source side X')
        parser.add_argument('--sinks', required=False, default=None,
                            help='Comma-separated sink side Y')

    def handle(self, *args, **options):
        digraph = self.digraph
        target = options['target']
        if target is not None:
            root = digraph.root
            if self.check_vertex(target) == root:
                raise DomainError('The root cannot be separated from '
                                  'itself', subject=root)
            separation = self.extreme(digraph.remove_edges([(root, target)]),
                                      root, target)
        else:
            sources, sinks = self.sides(options['sources'], options['sinks'])
            separation = self.extreme(digraph, sources, sinks)

        output = separation.to_json()
        output['size'] = len(separation)

        return output
