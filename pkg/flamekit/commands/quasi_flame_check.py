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


from flamekit.command import CommandError, DigraphCommand, load_side_digraph
from flamekit.flames import is_quasi_flame


class Command(DigraphCommand):
    """
    Checks that every in-edge set of the input containing the in-edges of
    ``--base`` is realizable.
    """

    help = 'Checks that the input is a quasi-flame over a base subgraph.'

    def add_arguments(self, parser):
        super(Command, self).add_arguments(parser)

        parser.add_argument('--base', required=False, default=None,
                            help='Edge list of the base subgraph G')
        parser.add_argument('--cap-in-degree', type=int, default=None,
                            help='Widest in-edge interval to enumerate')

    def handle(self, *args, **options):
        if not options['base']:
            raise CommandError('quasi-flame-check needs --base')

        base = load_side_digraph(options['base'], self.digraph.root)
        check = is_quasi_flame(self.digraph, base,
                               cap=options['cap_in_degree'])

        return check.to_json()
