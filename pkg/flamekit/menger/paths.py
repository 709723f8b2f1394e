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


import itertools

import networkx as nx

from flamekit.digraph import edge_str, sort_vertices, vertex_key


KINDS = ('xy', 'XY', 'xY', 'Xy')


def as_side(side):
    """
    A side of a path problem is a single vertex id or a set of vertex ids.

    Returns ``(vertices, single)``.
    """
    if isinstance(side, str):
        return frozenset([side]), True
    return frozenset(side), False


def side_kind(source, sink):
    """
    The path-system kind of a ``(source, sink)`` problem.
    """
    return (('x' if as_side(source)[1] else 'X') +
            ('y' if as_side(sink)[1] else 'Y'))


def side_to_json(side):
    vertices, single = as_side(side)
    if single:
        return next(iter(vertices))
    return sort_vertices(vertices)


def _path_key(path):
    return [vertex_key(v) for v in path]


def separates(digraph, vertices, source, sink):
    """
    True if every directed path from the source side to the sink side meets
    ``vertices``.
    """
    vertices = frozenset(vertices)
    start = as_side(source)[0] - vertices
    goal = as_side(sink)[0] - vertices
    if start & goal:
        return False

    graph = nx.restricted_view(digraph.to_networkx(), vertices, [])
    for vertex in sort_vertices(start):
        if vertex in graph and nx.descendants(graph, vertex) & goal:
            return False

    return True


class PathSystem(object):
    """
    A set of directed paths of one disjointness kind.

    ``xy`` paths are pairwise internally disjoint, ``XY`` paths pairwise
    disjoint, ``xY`` paths disjoint but for ``x`` and ``Xy`` paths disjoint but
    for ``y``. Paths are kept as vertex tuples in canonical order.
    """

    def __init__(self, paths=(), kind='xy'):
        if kind not in KINDS:
            raise ValueError('unknown path-system kind %r' % kind)

        self._paths = tuple(sorted((tuple(p) for p in paths), key=_path_key))
        self._kind = kind

    @property
    def paths(self):
        return self._paths

    @property
    def kind(self):
        return self._kind

    @property
    def initial_vertices(self):
        """
        V-(P), the set of first vertices.
        """
        return frozenset(p[0] for p in self._paths)

    @property
    def terminal_vertices(self):
        """
        V+(P), the set of last vertices.
        """
        return frozenset(p[-1] for p in self._paths)

    @property
    def initial_edges(self):
        """
        E-(P), the set of first edges of non-trivial paths.
        """
        return frozenset((p[0], p[1]) for p in self._paths if len(p) > 1)

    @property
    def terminal_edges(self):
        """
        E+(P), the set of last edges of non-trivial paths.
        """
        return frozenset((p[-2], p[-1]) for p in self._paths if len(p) > 1)

    @property
    def edges(self):
        return frozenset(e for p in self._paths for e in zip(p, p[1:]))

    @property
    def vertices(self):
        return frozenset(v for p in self._paths for v in p)

    def with_path(self, path):
        return PathSystem(self._paths + (tuple(path),), self._kind)

    def without_path(self, path):
        path = tuple(path)
        return PathSystem([p for p in self._paths if p != path], self._kind)

    def path_ending_with(self, edge):
        """
        The path whose last edge is ``edge``, or None.
        """
        for path in self._paths:
            if len(path) > 1 and (path[-2], path[-1]) == tuple(edge):
                return path
        return None

    def problems(self, digraph, source, sink):
        """
        Describe every way in which this is not a valid path-system of its kind
        in ``digraph``. An empty list means valid.
        """
        sources, _ = as_side(source)
        sinks, _ = as_side(sink)
        problems = []

        if len(set(self._paths)) != len(self._paths):
            problems.append('duplicate paths')

        for path in self._paths:
            label = '-'.join(path)
            if len(set(path)) != len(path):
                problems.append('path %s repeats a vertex' % label)
            if len(path) == 1 and not (self._kind == 'XY' and
                                       path[0] in sources & sinks):
                problems.append('path %s is trivial' % label)
            for edge in zip(path, path[1:]):
                if not digraph.has_edge(edge):
                    problems.append('path %s uses missing edge %s' %
                                    (label, edge_str(edge)))
            if path[0] not in sources:
                problems.append('path %s does not start on the source side' %
                                label)
            if path[-1] not in sinks:
                problems.append('path %s does not end on the sink side' % label)
            if sources & set(path[1:]):
                problems.append('path %s meets the source side twice' % label)
            if sinks & set(path[:-1]):
                problems.append('path %s meets the sink side early' % label)

        shared = frozenset()
        if self._kind[0] == 'x':
            shared |= sources
        if self._kind[1] == 'y':
            shared |= sinks

        for first, second in itertools.combinations(self._paths, 2):
            common = (set(first) & set(second)) - shared
            if common:
                problems.append('paths %s and %s share %s' %
                                ('-'.join(first), '-'.join(second),
                                 ','.join(sort_vertices(common))))

        return problems

    def to_json(self):
        return {
            'kind': self._kind,
            'paths': [list(p) for p in self._paths],
        }

    def __len__(self):
        return len(self._paths)

    def __iter__(self):
        return iter(self._paths)

    def __eq__(self, other):
        return (isinstance(other, PathSystem) and self._kind == other.kind and
                self._paths == other.paths)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self._kind, self._paths))

    def __repr__(self):
        return '<PathSystem %s %s>' % (self._kind,
                                       [('-'.join(p)) for p in self._paths])


class Separation(object):
    """
    A vertex set meant to separate the sink side from the source side.
    """

    def __init__(self, vertices, source, sink):
        self._vertices = frozenset(vertices)
        self._source = source
        self._sink = sink

    @property
    def vertices(self):
        return self._vertices

    @property
    def source(self):
        return self._source

    @property
    def sink(self):
        return self._sink

    @property
    def kind(self):
        return side_kind(self._source, self._sink)

    def problems(self, digraph):
        problems = []
        if self.kind == 'xy' and self._vertices & {self._source, self._sink}:
            problems.append('an (x,y)-separation contains x or y')
        if not separates(digraph, self._vertices, self._source, self._sink):
            problems.append('%s does not separate' %
                            ','.join(sort_vertices(self._vertices)))
        return problems

    def to_json(self):
        return {
            'kind': self.kind,
            'vertices': sort_vertices(self._vertices),
        }

    def __len__(self):
        return len(self._vertices)

    def __iter__(self):
        return iter(sort_vertices(self._vertices))

    def __contains__(self, vertex):
        return vertex in self._vertices

    def __eq__(self, other):
        return (isinstance(other, Separation) and
                self._vertices == other.vertices)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self._vertices)

    def __repr__(self):
        return '<Separation %s>' % sort_vertices(self._vertices)


def orthogonality_problems(system, vertices):
    """
    Problems with ``system`` being orthogonal to the vertex set: every path
    must meet it exactly once and it must be covered by the paths.
    """
    vertices = frozenset(vertices)
    problems = []
    for path in system:
        hits = [v for v in path if v in vertices]
        if len(hits) != 1:
            problems.append('path %s meets the separation %d times' %
                            ('-'.join(path), len(hits)))

    uncovered = vertices - system.vertices
    if uncovered:
        problems.append('separation vertices %s lie on no path' %
                        ','.join(sort_vertices(uncovered)))

    return problems


def is_orthogonal(system, vertices):
    return not orthogonality_problems(system, vertices)


class OrthogonalPair(object):
    """
    A path-system together with an orthogonal separation.
    """

    def __init__(self, system, separation):
        self.system = system
        self.separation = separation

    def problems(self, digraph):
        return (self.system.problems(digraph, self.separation.source,
                                     self.separation.sink) +
                self.separation.problems(digraph) +
                orthogonality_problems(self.system, self.separation.vertices))

    def to_json(self):
        return {
            'kind': self.system.kind,
            'paths': self.system.to_json()['paths'],
            'separation': sort_vertices(self.separation.vertices),
        }

    def __repr__(self):
        return '<OrthogonalPair %r %r>' % (self.system, self.separation)
