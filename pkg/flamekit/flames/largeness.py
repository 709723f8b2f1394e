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

from flamekit.digraph import sort_edges
from flamekit.errors import DomainError, InternalConsistencyError
from flamekit.menger import OrthogonalPair, max_disjoint_paths, \
        min_separation
from flamekit.utils.caps import enforce_cap
from flamekit.utils.pool import parallel_map
from .membership import is_in_G
from .witnesses import LargenessWitness, SuperlargeCheck


logger = logging.getLogger('flamekit.flames')


def _check_spanning(subgraph, digraph):
    if not subgraph.is_spanning_subgraph_of(digraph):
        raise DomainError('The subgraph is not a spanning subgraph of the '
                          'host digraph')


def _v_large(subgraph, digraph, vertex):
    root = digraph.root
    direct = (root, vertex)
    rv_in_host = digraph.has_edge(direct)
    if rv_in_host and not subgraph.has_edge(direct):
        return None

    host = digraph.remove_edges([direct])
    system = max_disjoint_paths(subgraph.remove_edges([direct]), root, vertex)
    separation = min_separation(host, root, vertex)
    if len(system) != len(separation):
        return None

    pair = OrthogonalPair(system, separation)
    problems = pair.problems(host)
    if problems:
        raise InternalConsistencyError('Largeness witness at %s failed '
                                       'self-verification: %s' %
                                       (vertex, '; '.join(problems)))

    return LargenessWitness(vertex, pair, rv_in_host)


def is_v_large(subgraph, digraph, vertex):
    """
    Return a :class:`LargenessWitness` if some Erdős-Menger (r, v)-path-system
    of ``digraph`` lies in ``subgraph`` and ``rv`` survives, otherwise None.
    """
    _check_spanning(subgraph, digraph)
    if vertex == digraph.root:
        raise DomainError('Largeness is not defined at the root',
                          subject=vertex)
    if not digraph.has_vertex(vertex):
        raise DomainError('%s is not a vertex of the digraph' % vertex,
                          subject=vertex)

    return _v_large(subgraph, digraph, vertex)


def is_large(subgraph, digraph, all_vertices=False, jobs=None):
    """
    Return a map from vertex to :class:`LargenessWitness`, or None if
    ``subgraph`` is not large in ``digraph``.

    Only vertices whose in-edges were thinned need checking; ``all_vertices``
    checks every non-root vertex and returns the full map.
    """
    _check_spanning(subgraph, digraph)

    vertices = [v for v in digraph.non_root_vertices()
                if all_vertices or subgraph.in_edges(v) != digraph.in_edges(v)]
    witnesses = parallel_map(lambda v: _v_large(subgraph, digraph, v),
                             vertices, jobs=jobs)
    for vertex, witness in zip(vertices, witnesses):
        if witness is None:
            logger.debug('Largeness fails at %s', vertex)
            return None

    return dict(zip(vertices, witnesses))


def subsets_by_size(edges):
    """
    Every subset of ``edges``, smallest first, lexicographic within a size.
    """
    edges = sort_edges(edges)
    for size in range(len(edges) + 1):
        for subset in itertools.combinations(edges, size):
            yield frozenset(subset)


def superlarge_condition(subgraph, digraph, cap=None):
    """
    Check that every edge ``uv`` of ``digraph`` missing from ``subgraph`` has
    some realizable in-edge set ``I`` of ``v`` in ``subgraph`` such that
    ``I + uv`` is no longer realizable once ``uv`` is added.
    """
    _check_spanning(subgraph, digraph)

    witnesses = {}
    for edge in sort_edges(digraph.edges - subgraph.edges):
        vertex = edge[1]
        in_edges = subgraph.in_edges(vertex)
        enforce_cap('in_degree', len(in_edges),
                    'the in-degree of %s' % vertex, limit=cap, subject=vertex)

        grown = subgraph.add_edges([edge])
        for edges in subsets_by_size(in_edges):
            if is_in_G(subgraph, vertex, edges) is not None and \
                    is_in_G(grown, vertex, edges | {edge}) is None:
                witnesses[edge] = edges
                break
        else:
            return SuperlargeCheck(False, witnesses, edge)

    return SuperlargeCheck(True, witnesses, None)
