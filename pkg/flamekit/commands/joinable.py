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
from flamekit.incompressibility import is_joinable


class Command(DigraphCommand):
    """
    Decides whether some disjoint path-system starts at every source.
    """

    help = 'Checks whether X is joinable to Y.'

    def add_arguments(self, parser):
        super(Command, self).add_arguments(parser)

        parser.add_argument('--sources', required=False, default=None,
                            help='Comma-separated source side X')
        parser.add_argument('--sinks', required=False, default=None,
                            help='Comma-separated sink side Y')

    def handle(self, *args, **options):
        sources, sinks = self.sides(options['sources'], options['sinks'])
        witness = is_joinable(self.digraph, sources, sinks)

        output = {'joinable': witness is not None}
        if witness is not None:
            output['paths'] = witness.to_json()['paths']

        return output
