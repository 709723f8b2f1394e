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
from flamekit.incompressibility import incompressible_separation, \
        is_incompressible, is_joinable


class Command(DigraphCommand):
    """
    Decides whether every disjoint path-system covering X also covers Y.

    With ``--drop x`` the smallest Erdős-Menger separation to which
    ``X - x`` is incompressible is emitted as well; this needs X itself to be
    unjoinable and ``X - x`` joinable.
    """

    help = 'Checks whether X is incompressible to Y.'

    def add_arguments(self, parser):
        super(Command, self).add_arguments(parser)

        parser.add_argument('--sources', required=False, default=None,
                            help='Comma-separated source side X')
        parser.add_argument('--sinks', required=False, default=None,
                            help='Comma-separated sink side Y')
        parser.add_argument('--drop', required=False, default=None,
                            help='A source x whose removal makes X joinable')

    def handle(self, *args, **options):
        digraph = self.digraph
        sources, sinks = self.sides(options['sources'], options['sinks'])

        output = {
            'joinable': is_joinable(digraph, sources, sinks) is not None,
            'incompressible': is_incompressible(digraph, sources, sinks,
                                                jobs=self.jobs),
        }

        drop = options['drop']
        if drop is not None:
            separation = incompressible_separation(digraph, sources, sinks,
                                                   self.check_vertex(drop))
            output['separation'] = separation.to_json()['vertices']

        return output
