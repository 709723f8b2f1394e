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
import logging

from flamekit.digraph import as_edge_set, edge_str, sort_edges, sort_vertices
from flamekit.errors import DomainError, InternalConsistencyError
from flamekit.flames import is_in_G
from flamekit.menger import PathSystem, separates
from .auxiliary import build_auxiliary, in_vertex
from .joining import incompressible_separation


logger = logging.getLogger('flamekit.incompressibility')


class Bubble(collections.namedtuple('Bubble', ['separation', 'system'])):
    """
    A vertex set ``S`` and an (r, S)-path-system ending at every vertex of
    ``S``.
    """

    def to_json(self):
        return {
            'separation': sort_vertices(self.separation),
            'paths': [list(p) for p in self.system],
        }


def bubble_problems(digraph, target, edge, result):
    """
    Every way in which ``result`` misses the bubble guarantees for ``uv``.
    """
    root = digraph.root
    tail, head = edge
    vertices = frozenset(result.separation)
    system = result.system
    problems = []

    if root in vertices:
        problems.append('S contains the root')
    if head not in vertices:
        problems.append('S does not contain %s' % head)
    problems.extend(system.problems(digraph, root, vertices))
    if system.terminal_vertices != vertices:
        problems.append('the paths do not end at every vertex of S')

    tails = frozenset(t for t, _ in digraph.in_edges(head)) - {tail, root}
    if not separates(digraph, vertices, root, tails):
        problems.append('S does not separate the other tails of %s from %s' %
                        (head, root))
    if tuple(edge) not in system.terminal_edges:
        problems.append('%s is not a last edge' % edge_str(edge))

    return problems


def _check_preconditions(digraph, target, edges, edge):
    root = digraph.root
    tail, head = edge
    if not digraph.has_edge(edge):
        raise DomainError('uv: %s is not an edge' % edge_str(edge),
                          subject=edge_str(edge))
    if tail == root or head == target:
        raise DomainError('uv: %s must avoid the root tail and the target '
                          'head' % edge_str(edge), subject=edge_str(edge))
    if is_in_G(digraph, target, edges) is None:
        raise DomainError('I is not realizable at %s' % target,
                          subject=target)
    for other in sort_edges(digraph.in_edges(target) - edges):
        if is_in_G(digraph, target, edges | {other}) is None:
            raise DomainError('I + %s is not realizable at %s' %
                              (edge_str(other), target),
                              subject=edge_str(other))
    if is_in_G(digraph.remove_edges([edge]), target, edges) is not None:
        raise DomainError('I stays realizable without %s' % edge_str(edge),
                          subject=edge_str(edge))


def _segments(system, vertices):
    """
    Cut every path at its first vertex in ``vertices``.
    """
    segments = []
    for path in system:
        for index, vertex in enumerate(path):
            if vertex in vertices:
                segments.append(path[:index + 1])
                break
        else:
            segments.append(path)

    return PathSystem(segments, 'xY')


def _bubble(digraph, target, edges, edge, direct_removed=False):
    root = digraph.root
    tail, head = edge

    witness = is_in_G(digraph, target, edges).system
    carrier = [p for p in witness if tail in p and
               p[p.index(tail) + 1:p.index(tail) + 2] == (head,)]
    if len(carrier) != 1:
        raise InternalConsistencyError('%s lies on %d witness paths' %
                                       (edge_str(edge), len(carrier)))
    last_edge = carrier[0][-2:]

    auxiliary = build_auxiliary(digraph, target)
    reduced = auxiliary.digraph.remove_edges([(head, tail)])
    sources = auxiliary.sources_for(edges)
    separation = incompressible_separation(reduced, sources, auxiliary.sinks,
                                           in_vertex(last_edge))

    # Subdivision vertices give way to their original neighbour
    vertices = set()
    for vertex in separation.vertices:
        if vertex in auxiliary.source_edges:
            vertices.add(auxiliary.source_edges[vertex][0])
        elif vertex in auxiliary.sink_edges:
            vertices.add(auxiliary.sink_edges[vertex][1])
        else:
            vertices.add(vertex)
    vertices.add(head)

    tails = frozenset(t for t, _ in digraph.in_edges(head)) - {tail, root}
    if separates(digraph, vertices, root, tails):
        logger.debug('Bubble at %s closes without %s', head, target)
        return Bubble(frozenset(vertices), _segments(witness, vertices))

    others = sort_edges(digraph.in_edges(target) - edges)
    if not others:
        if direct_removed:
            # Closed by the trivial path rw
            return Bubble(frozenset(vertices), _segments(witness, vertices))
        raise DomainError('S does not separate the other tails of %s and I '
                          'already holds every in-edge of %s' %
                          (head, target), subject=target)

    vertices.add(target)
    grown = is_in_G(digraph, target, edges | {others[0]}).system
    logger.debug('Bubble at %s closes through %s via %s', head, target,
                 edge_str(others[0]))
    return Bubble(frozenset(vertices), _segments(grown, vertices))


def bubble(digraph, target, edges, edge):
    """
    For an edge ``uv`` that every realization of ``I`` at ``w`` needs, find a
    vertex set ``S`` containing ``v`` that separates the other tails of ``v``
    from the root, together with an (r, S)-path-system ending at every
    vertex of S, one of whose paths ends with ``uv``.

    With ``rw`` present the construction runs without it, and the trivial
    path ``rw`` is added afterwards if the result needs it.
    """
    root = digraph.root
    edges = as_edge_set(edges)
    edge = tuple(edge)
    _check_preconditions(digraph, target, edges, edge)

    direct = (root, target)
    if digraph.has_edge(direct):
        result = _bubble(digraph.remove_edges([direct]), target,
                         edges - {direct}, edge, direct_removed=True)
        if bubble_problems(digraph, target, edge, result):
            result = Bubble(result.separation | {target},
                            result.system.with_path(direct))
    else:
        result = _bubble(digraph, target, edges, edge)

    problems = bubble_problems(digraph, target, edge, result)
    if problems:
        raise InternalConsistencyError('Bubble failed self-verification: %s' %
                                       '; '.join(problems))

    return result
