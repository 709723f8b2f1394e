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
import logging

import networkx as nx

from flamekit.digraph import edge_key, sort_edges, sort_vertices, vertex_key
from flamekit.errors import DomainError
from flamekit.menger import PathSystem, Separation, as_side, separates, \
        side_kind
from flamekit.incompressibility import strip
from flamekit.utils.caps import enforce_cap


logger = logging.getLogger('flamekit.oracle')


def _check_cap(digraph, limit=None):
    enforce_cap('brute_vertices', len(digraph.vertices),
                'the brute-force oracle input', limit=limit)


def _system_key(system):
    return len(system), [[vertex_key(v) for v in p] for p in system.paths]


def _edge_set_key(edges):
    return len(edges), [edge_key(e) for e in sort_edges(edges)]


def _packings(paths, shared):
    """
    Every subset of ``paths`` whose members pairwise meet only in
    ``shared``, the empty one included.
    """
    paths = [(p, frozenset(p) - shared) for p in paths]

    def extend(start, chosen, used):
        yield [p for p, _ in chosen]
        for i in range(start, len(paths)):
            path, private = paths[i]
            if not private & used:
                for packing in extend(i + 1, chosen + [paths[i]],
                                      used | private):
                    yield packing

    return extend(0, [], frozenset())


def _simple_paths(graph, source, sink):
    if source not in graph or sink not in graph:
        return []
    return [tuple(p) for p in nx.all_simple_paths(graph, source, sink)]


def brute_all_path_systems(digraph, source, sink, limit=None):
    """
    Every internally disjoint (x, y)-path-system of ``digraph``, the empty
    system included, smallest first.
    """
    _check_cap(digraph, limit)
    if source == sink:
        raise DomainError('Source and target are both %s' % sink,
                          subject=sink)

    paths = _simple_paths(digraph.to_networkx(), source, sink)
    systems = [PathSystem(packing, 'xy') for packing in
               _packings(paths, frozenset([source, sink]))]

    return sorted(systems, key=_system_key)


def brute_G(digraph, vertex, limit=None):
    """
    Every realizable in-edge set of ``vertex``, read off the last edges of
    all internally disjoint (r, v)-path-systems.
    """
    systems = brute_all_path_systems(digraph, digraph.root, vertex,
                                     limit=limit)
    realizable = set(s.terminal_edges for s in systems)

    return sorted(realizable, key=_edge_set_key)


def _set_paths(digraph, sources, sinks):
    graph = strip(digraph, sources, sinks).to_networkx()
    paths = []
    for source in sort_vertices(sources):
        if source in sinks:
            paths.append((source,))
            continue
        for sink in sort_vertices(sinks):
            paths.extend(_simple_paths(graph, source, sink))

    return paths


def brute_set_path_systems(digraph, sources, sinks, limit=None):
    """
    Every disjoint (X, Y)-path-system, the empty system included. A vertex
    on both sides is joined by its trivial path.
    """
    _check_cap(digraph, limit)
    sources = frozenset(sources)
    sinks = frozenset(sinks)

    paths = _set_paths(digraph, sources, sinks)
    systems = [PathSystem(packing, 'XY') for packing in
               _packings(paths, frozenset())]

    return sorted(systems, key=_system_key)


def brute_separations(digraph, source, sink, limit=None):
    """
    Every Erdős-Menger separation between the two sides, i.e. every
    separation of the smallest size. An (x, y)-separation avoids x and y.
    """
    _check_cap(digraph, limit)
    kind = side_kind(source, sink)
    candidates = sort_vertices(digraph.vertices)
    if kind == 'xy':
        if digraph.has_edge((source, sink)):
            raise DomainError('No vertex set separates the edge %s->%s' %
                              (source, sink))
        candidates = [v for v in candidates if v not in (source, sink)]

    for size in range(len(candidates) + 1):
        found = [Separation(c, source, sink) for c in
                 itertools.combinations(candidates, size)
                 if separates(digraph, c, source, sink)]
        if found:
            return sorted(found, key=lambda s: [vertex_key(v) for v in s])

    raise DomainError('The sides cannot be separated')


def brute_leq(digraph, source, first, second):
    """
    True if every path from the source side to ``second`` meets ``first``.
    """
    first = frozenset(first)
    second = frozenset(second)
    graph = digraph.to_networkx()
    for start in sort_vertices(as_side(source)[0]):
        if start in first:
            continue
        if start in second:
            return False
        for end in sort_vertices(second):
            for path in _simple_paths(graph, start, end):
                if not first & frozenset(path):
                    return False

    return True


def _covering(digraph, sources, sinks, limit):
    sources = frozenset(sources)
    return [s for s in brute_set_path_systems(digraph, sources, sinks,
                                              limit=limit)
            if s.initial_vertices == sources]


def brute_is_joinable(digraph, sources, sinks, limit=None):
    return bool(_covering(digraph, sources, sinks, limit))


def brute_is_incompressible(digraph, sources, sinks, limit=None):
    covering = _covering(digraph, sources, sinks, limit)
    return bool(covering) and \
        all(s.terminal_vertices == frozenset(sinks) for s in covering)


def brute_is_quasi_flame(digraph, base, limit=None):
    """
    True if at every vertex each in-edge set of ``digraph`` containing the
    in-edges of ``base`` is realizable.
    """
    for vertex in digraph.non_root_vertices():
        realizable = set(brute_G(digraph, vertex, limit=limit))
        fixed = base.in_edges(vertex)
        extra = sort_edges(digraph.in_edges(vertex) - fixed)
        for size in range(len(extra) + 1):
            for edges in itertools.combinations(extra, size):
                if fixed | frozenset(edges) not in realizable:
                    logger.debug('Brute quasi-flame check fails at %s',
                                 vertex)
                    return False

    return True


def brute_max_paths(digraph, source, sink, limit=None):
    return max(len(s) for s in brute_all_path_systems(digraph, source, sink,
                                                      limit=limit))


def brute_is_v_large(subgraph, digraph, vertex, limit=None):
    """
    True if ``subgraph`` keeps the root edge of ``vertex`` and as many
    internally disjoint (r, v)-paths avoiding it as the smallest separation
    of ``digraph`` has vertices.
    """
    root = digraph.root
    direct = (root, vertex)
    if digraph.has_edge(direct) and not subgraph.has_edge(direct):
        return False

    host = digraph.remove_edges([direct])
    size = len(brute_separations(host, root, vertex, limit=limit)[0])

    return brute_max_paths(subgraph.remove_edges([direct]), root, vertex,
                           limit=limit) == size
