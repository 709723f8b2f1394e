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


from flamekit.digraph import sort_vertices
from flamekit.errors import DomainError, InternalConsistencyError
from flamekit.menger import separates


def separation_supremum(digraph, vertex, collection):
    """
    The vertices of the union of ``collection`` that every member separates
    from the root. Every member must separate ``vertex`` from the root, and
    so does the result.
    """
    root = digraph.root
    collection = [frozenset(s) for s in collection]
    if not collection:
        raise DomainError('The collection of separations is empty')

    for members in collection:
        if root in members:
            raise DomainError('A separation contains the root', subject=root)
        if not separates(digraph, members, root, [vertex]):
            raise DomainError('%s does not separate %s from %s' %
                              (sort_vertices(members), vertex, root),
                              subject=vertex)

    union = frozenset().union(*collection)
    supremum = frozenset(s for s in union
                         if all(separates(digraph, members, root, [s])
                                for members in collection))

    if not separates(digraph, supremum, root, [vertex]):
        raise InternalConsistencyError('The supremum %s does not separate %s' %
                                       (sort_vertices(supremum), vertex))

    return supremum
