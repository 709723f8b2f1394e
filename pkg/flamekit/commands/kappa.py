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
from flamekit.menger import kappa


class Command(DigraphCommand):
    """
    Computes local connectivities from the root (or ``--source``).
    """

    help = 'Computes the local connectivity to one vertex or to every vertex.'

    def add_arguments(self, parser):
        super(Command, self).add_arguments(parser)

        parser.add_argument('--target', required=False, default=None,
                            help='The target vertex. Defaults to every '
                                 'non-root vertex')
        parser.add_argument('--source', required=False, default=None,
                            help='The source vertex. Defaults to the root')

    def handle(self, *args, **options):
        digraph = self.digraph
        source = self.check_vertex(options['source'] or digraph.root)

        target = options['target']
        if target is not None:
            return {'kappa': kappa(digraph, source, self.check_vertex(target))}

        return {
            'kappa': {v: kappa(digraph, source, v) for v in digraph.order
                      if v != source},
        }
