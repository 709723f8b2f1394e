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


import collections
import re

import networkx as nx

from flamekit.errors import DomainError


_DIGIT_RUNS = re.compile(r'(\d+)')


def vertex_key(vertex):
    """
    Natural sort key for vertex ids: digit runs compare numerically, so that
    ``v2`` sorts before ``v10``. The raw id breaks the remaining ties.
    """
    parts = _DIGIT_RUNS.split(str(vertex))
    return (tuple(int(part) if i % 2 else part for i, part in enumerate(parts)),
            str(vertex))


def edge_key(edge):
    return vertex_key(edge[0]), vertex_key(edge[1])


def sort_vertices(vertices):
    return sorted(vertices, key=vertex_key)


def sort_edges(edges):
    return sorted((tuple(e) for e in edges), key=edge_key)


def edge_str(edge):
    return '%s->%s' % (edge[0], edge[1])


def as_edge_set(edges):
    """
    Normalize an iterable of ``(tail, head)`` pairs (lists from JSON included)
    into a frozenset of tuples.
    """
    return frozenset((e[0], e[1]) for e in edges)


class Diagnostic(collections.namedtuple('Diagnostic', ['code', 'subject'])):
    """
    A single invariant violation found by :func:`validate`.
    """
    __slots__ = ()

    def __str__(self):
        return '%s %s' % (self.code, self.subject)

    def to_json(self):
        return {'code': self.code, 'subject': self.subject}


class Digraph(object):
    """
    An immutable finite simple digraph.

    Vertex ids are opaque strings. Edges are ``(tail, head)`` tuples. Every
    operation returns a new digraph. The dense index of a vertex is its
    position in :attr:`order`.

    Order, index and adjacency are built in the constructor and never
    change afterwards. Instances are shared between worker threads.
    """

    def __init__(self, vertices=(), edges=()):
        self._vertices = frozenset(vertices)
        self._edges = as_edge_set(edges)

        self._order = self._canonical_order()
        self._index = {v: i for i, v in enumerate(self._order)}
        self._in, self._out = self._adjacency()

    @classmethod
    def from_edges(cls, edges, vertices=(), **kwargs):
        """
        Build a digraph whose vertex set also contains every edge endpoint.
        """
        edges = as_edge_set(edges)
        all_vertices = set(vertices)
        for tail, head in edges:
            all_vertices.add(tail)
            all_vertices.add(head)

        return cls(vertices=all_vertices, edges=edges, **kwargs)

    def _copy_with(self, vertices, edges):
        return Digraph(vertices, edges)

    @property
    def vertices(self):
        return self._vertices

    @property
    def edges(self):
        return self._edges

    def _canonical_order(self):
        return tuple(sort_vertices(self._vertices))

    def _adjacency(self):
        in_edges = collections.defaultdict(set)
        out_edges = collections.defaultdict(set)
        for edge in self._edges:
            out_edges[edge[0]].add(edge)
            in_edges[edge[1]].add(edge)

        return ({v: frozenset(es) for v, es in in_edges.items()},
                {v: frozenset(es) for v, es in out_edges.items()})

    @property
    def order(self):
        """
        Vertices in canonical order.
        """
        return self._order

    def index(self, vertex):
        return self._index[vertex]

    def in_edges(self, vertex):
        return self._in.get(vertex, frozenset())

    def out_edges(self, vertex):
        return self._out.get(vertex, frozenset())

    def in_degree(self, vertex):
        return len(self.in_edges(vertex))

    def predecessors(self, vertex):
        return sort_vertices(tail for tail, _ in self.in_edges(vertex))

    def successors(self, vertex):
        return sort_vertices(head for _, head in self.out_edges(vertex))

    def has_vertex(self, vertex):
        return vertex in self._vertices

    def has_edge(self, edge):
        return (edge[0], edge[1]) in self._edges

    def sorted_edges(self):
        return sort_edges(self._edges)

    def add_edges(self, edges):
        edges = as_edge_set(edges)
        vertices = set(self._vertices)
        for tail, head in edges:
            vertices.add(tail)
            vertices.add(head)

        return self._copy_with(vertices, self._edges | edges)

    def remove_edges(self, edges):
        edges = as_edge_set(edges)
        if not edges:
            return self

        return self._copy_with(self._vertices, self._edges - edges)

    def remove_vertices(self, vertices):
        vertices = frozenset(vertices)
        if not vertices:
            return self

        edges = [e for e in self._edges
                 if e[0] not in vertices and e[1] not in vertices]
        return self._copy_with(self._vertices - vertices, edges)

    def is_subgraph_of(self, other):
        return self._vertices <= other.vertices and self._edges <= other.edges

    def to_networkx(self):
        """
        A fresh ``networkx.DiGraph`` copy of this digraph. Nodes and edges
        are inserted in canonical order so that networkx traversals are
        deterministic.
        """
        graph = nx.DiGraph()
        graph.add_nodes_from(self._order)
        graph.add_edges_from(self.sorted_edges())
        return graph

    def __eq__(self, other):
        return (type(self) is type(other) and
                self._vertices == other.vertices and
                self._edges == other.edges)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self._vertices, self._edges))

    def __repr__(self):
        return '<%s |V|=%d |E|=%d>' % (self.__class__.__name__,
                                       len(self._vertices), len(self._edges))


class RootedDigraph(Digraph):
    """
    A digraph with a distinguished root ``r``. The root comes first in the
    canonical vertex order.

    Construction does not check the invariants; use :func:`validate`.
    """

    def __init__(self, vertices=(), edges=(), root=None):
        self._root = root
        super(RootedDigraph, self).__init__(vertices, edges)

    @classmethod
    def from_edges(cls, edges, vertices=(), root=None):
        return super(RootedDigraph, cls).from_edges(
            edges, vertices=set(vertices) | {root}, root=root)

    def _copy_with(self, vertices, edges):
        return RootedDigraph(vertices, edges, root=self._root)

    @property
    def root(self):
        return self._root

    def _canonical_order(self):
        rest = sort_vertices(v for v in self._vertices if v != self._root)
        if self._root in self._vertices:
            rest.insert(0, self._root)
        return tuple(rest)

    def non_root_vertices(self):
        return self.order[1:] if self._root in self._vertices else self.order

    def remove_vertices(self, vertices):
        if self._root in frozenset(vertices):
            raise DomainError('The root %s cannot be deleted' % self._root,
                              subject=self._root)
        return super(RootedDigraph, self).remove_vertices(vertices)

    def is_spanning_subgraph_of(self, other):
        """
        True if this digraph has the same vertices and root as ``other`` and a
        subset of its edges.
        """
        return (self._root == other.root and
                self._vertices == other.vertices and
                self._edges <= other.edges)

    def __eq__(self, other):
        return (super(RootedDigraph, self).__eq__(other) and
                self._root == other.root)

    def __hash__(self):
        return hash((self._root, self._vertices, self._edges))


def validate(digraph):
    """
    Return one :class:`Diagnostic` per violated rooted-digraph invariant. The
    list is empty iff the digraph is valid.

    Parallel edges cannot be represented in memory; the edge-list parser
    rejects them.
    """
    diagnostics = []
    root = digraph.root

    if root is None or root not in digraph.vertices:
        diagnostics.append(Diagnostic('root-missing', str(root)))

    for edge in digraph.sorted_edges():
        tail, head = edge
        for endpoint in (tail, head):
            if endpoint not in digraph.vertices:
                diagnostics.append(Diagnostic('unknown-vertex', endpoint))
        if tail == head:
            diagnostics.append(Diagnostic('loop', tail))
        elif head == root:
            diagnostics.append(Diagnostic('root-has-in-edge', edge_str(edge)))

    return diagnostics


def restrict_at(digraph, vertex, edges):
    """
    The restriction of ``digraph`` to ``edges`` at ``vertex``: every in-edge of
    ``vertex`` outside ``edges`` is deleted.
    """
    if vertex == digraph.root:
        raise DomainError('Cannot restrict at the root', subject=vertex)
    if not digraph.has_vertex(vertex):
        raise DomainError('%s is not a vertex of the digraph' % vertex,
                          subject=vertex)

    edges = as_edge_set(edges)
    in_edges = digraph.in_edges(vertex)
    foreign = edges - in_edges
    if foreign:
        edge = sort_edges(foreign)[0]
        raise DomainError('%s is not an in-edge of %s' % (edge_str(edge), vertex),
                          subject=edge_str(edge))

    return digraph.remove_edges(in_edges - edges)


def delete(digraph, elements):
    """
    Delete a set of vertices (with their incident edges) or a set of edges.
    Deleting the root is rejected.
    """
    elements = list(elements)
    if not elements:
        return digraph

    is_edge = [isinstance(e, (tuple, list)) for e in elements]
    if all(is_edge):
        edges = as_edge_set(elements)
        missing = edges - digraph.edges
        if missing:
            edge = sort_edges(missing)[0]
            raise DomainError('%s is not an edge of the digraph' % edge_str(edge),
                              subject=edge_str(edge))
        return digraph.remove_edges(edges)

    if any(is_edge):
        raise DomainError('Cannot delete a mix of vertices and edges')

    vertices = frozenset(elements)
    missing = vertices - digraph.vertices
    if missing:
        vertex = sort_vertices(missing)[0]
        raise DomainError('%s is not a vertex of the digraph' % vertex,
                          subject=vertex)

    return digraph.remove_vertices(vertices)
