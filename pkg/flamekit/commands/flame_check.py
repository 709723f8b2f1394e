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
from flamekit.errors import DomainError
from flamekit.flames import find_flame_violation, is_flame


logger = logging.getLogger('flame-check')


class Command(DigraphCommand):
    """
    Checks that every in-edge set of the input is realized by one internally
    disjoint path-system from the root.

    The input may be an ``extend``/``lovasz`` certificate, in which case F*
    is checked. A digraph that is not a flame is a domain error naming the
    first failing vertex.
    """

    help = 'Checks that the input is a flame and emits one witness per vertex.'

    def handle(self, *args, **options):
        witnesses = is_flame(self.digraph, jobs=self.jobs)
        if witnesses is None:
            vertex = find_flame_violation(self.digraph)
            raise DomainError('Not a flame at %s' % vertex, subject=vertex)

        logger.success('The input is a flame')
        return {
            'flame': True,
            'witnesses': {v: w.to_json() for v, w in witnesses.items()},
        }
