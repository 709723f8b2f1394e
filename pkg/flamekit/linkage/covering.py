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

from flamekit.digraph import as_edge_set, edge_str, restrict_at, sort_edges
from flamekit.errors import DomainError, InternalConsistencyError
from flamekit.flames import is_v_large
from flamekit.menger import PathSystem, Separation, is_orthogonal, \
        max_disjoint_paths, orthogonality_problems
from .pym import pym_merge_to_vertex


logger = logging.getLogger('flamekit.linkage')


def _last_hit(path, vertices):
    for index in range(len(path) - 1, -1, -1):
        if path[index] in vertices:
            return index
    return None


def covering_menger_system(digraph, vertex, edges, separation):
    """
    An Erdős-Menger (r, v)-path-system of ``D - rv`` orthogonal to
    ``separation`` whose last edges include ``edges``.

    The witness of ``edges`` and a maximum system are both cut at the
    separation; their tails towards ``v`` are merged so that every
    separation vertex stays covered and every edge of ``edges`` stays last,
    and the heads of the maximum system are glued back on.
    """
    root = digraph.root
    edges = as_edge_set(edges)
    direct = (root, vertex)
    if direct in edges:
        raise DomainError('%s cannot be covered in D - rv' % edge_str(direct),
                          subject=edge_str(direct))

    host = digraph.remove_edges([direct])
    vertices = separation.vertices if isinstance(separation, Separation) \
        else frozenset(separation)

    witness = max_disjoint_paths(restrict_at(host, vertex, edges), root,
                                 vertex)
    if len(witness) != len(edges):
        raise DomainError('%s is not realizable as last edges at %s' %
                          (','.join(edge_str(e) for e in sort_edges(edges)),
                           vertex), subject=vertex)

    maximum = max_disjoint_paths(host, root, vertex)
    problems = Separation(vertices, root, vertex).problems(host) + \
        orthogonality_problems(maximum, vertices)
    if problems:
        raise DomainError('Not an Erdős-Menger separation of %s: %s' %
                          (vertex, '; '.join(problems)), subject=vertex)

    heads = {}
    tails = []
    for path in maximum:
        index = _last_hit(path, vertices)
        heads[path[index]] = path[:index]
        tails.append(path[index:])

    covering = []
    for path in witness:
        index = _last_hit(path, vertices)
        covering.append(path[index:])

    merged = pym_merge_to_vertex(host, vertices, vertex,
                                 PathSystem(tails, 'Xy'),
                                 PathSystem(covering, 'Xy'))

    system = PathSystem([heads[p[0]] + p for p in merged], 'xy')

    problems = system.problems(host, root, vertex) + \
        orthogonality_problems(system, vertices)
    if not edges <= system.terminal_edges:
        problems.append('a required last edge is not covered')
    if len(system) != len(maximum):
        problems.append('the system is not maximum')
    if problems:
        raise InternalConsistencyError('Covering system failed '
                                       'self-verification: %s' %
                                       '; '.join(problems))

    return system


def covering_in_large(large, digraph, vertex, edges):
    """
    A path-system in ``large`` whose last edges include ``edges`` and which,
    apart from the trivial path ``rv``, is an Erdős-Menger system of both
    ``large`` and ``digraph`` at ``vertex``.
    """
    root = digraph.root
    witness = is_v_large(large, digraph, vertex)
    if witness is None:
        raise DomainError('L is not %s-large with respect to D' % vertex,
                          subject=vertex)

    edges = as_edge_set(edges)
    direct = (root, vertex)
    system = covering_menger_system(large, vertex, edges - {direct},
                                    witness.pair.separation)
    if direct in edges:
        system = system.with_path(direct)

    problems = [('path %s leaves L' % '-'.join(p)) for p in system
                if not all(large.has_edge(e) for e in zip(p, p[1:]))]
    if not is_orthogonal(system.without_path(direct),
                         witness.pair.separation.vertices):
        problems.append('the system is not orthogonal to a minimum '
                        'separation of D - rv')
    if problems:
        raise InternalConsistencyError('Covering system in L failed '
                                       'self-verification: %s' %
                                       '; '.join(problems))

    logger.debug('Covered %d edges at %s with %d paths', len(edges), vertex,
                 len(system))
    return system
