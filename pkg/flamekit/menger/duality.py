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

from flamekit.digraph import edge_str, sort_edges, sort_vertices
from flamekit.errors import DomainError, InternalConsistencyError
from .flow import FlowNetwork
from .paths import OrthogonalPair, Separation, as_side, \
        orthogonality_problems, separates


logger = logging.getLogger('flamekit.menger')


def _check_vertex(digraph, vertex):
    if not digraph.has_vertex(vertex):
        raise DomainError('%s is not a vertex of the digraph' % vertex,
                          subject=vertex)


def _check_pair(digraph, source, vertex):
    _check_vertex(digraph, source)
    _check_vertex(digraph, vertex)
    if source == vertex:
        raise DomainError('Source and target are both %s' % vertex,
                          subject=vertex)


def _check_sets(digraph, sources, sinks):
    sources, _ = as_side(sources)
    sinks, _ = as_side(sinks)
    for vertex in sort_vertices(sources | sinks):
        _check_vertex(digraph, vertex)
    common = sources & sinks
    if common:
        vertex = sort_vertices(common)[0]
        raise DomainError('%s lies on both sides' % vertex, subject=vertex)


def _verify(what, problems):
    if problems:
        raise InternalConsistencyError('%s failed self-verification: %s' %
                                       (what, '; '.join(problems)))


def max_disjoint_paths(digraph, source, vertex):
    """
    A maximum internally disjoint (source, vertex)-path-system. If the edge
    from ``source`` to ``vertex`` exists it is returned as a path of its own.
    """
    _check_pair(digraph, source, vertex)

    direct = (source, vertex)
    has_direct = digraph.has_edge(direct)
    network = FlowNetwork(digraph.remove_edges([direct]) if has_direct
                          else digraph, source, vertex)
    network.maximize()
    system = network.path_system()
    if has_direct:
        system = system.with_path(direct)

    return system


def kappa(digraph, source, vertex):
    """
    The local connectivity from ``source`` to ``vertex``.
    """
    return len(max_disjoint_paths(digraph, source, vertex))


def _pair(digraph, source, sink):
    network = FlowNetwork(digraph, source, sink)
    network.maximize()
    pair = OrthogonalPair(network.path_system(),
                          Separation(network.source_side_cut(), source, sink))
    _verify('Erdős-Menger pair', pair.problems(digraph))

    return pair


def erdos_menger_pair(digraph, vertex):
    """
    An orthogonal (r, vertex)-path-system and separation of ``D - rv``.
    """
    root = digraph.root
    _check_pair(digraph, root, vertex)

    return _pair(digraph.remove_edges([(root, vertex)]), root, vertex)


def erdos_menger_pair_sets(digraph, sources, sinks):
    """
    An orthogonal (X, Y)-path-system and separation. The sides must be
    disjoint.
    """
    _check_sets(digraph, sources, sinks)

    return _pair(digraph, frozenset(sources), frozenset(sinks))


def _separation_vertices(separation):
    if isinstance(separation, Separation):
        return separation.vertices
    return frozenset(separation)


def leq_separation(digraph, sources, first, second):
    """
    True if ``first`` separates ``second`` from the source side.
    """
    return separates(digraph, _separation_vertices(first), sources,
                     _separation_vertices(second))


def _extreme_separation(digraph, source, sink, from_sink):
    network = FlowNetwork(digraph, source, sink)
    network.maximize()
    system = network.path_system()
    cut = network.sink_side_cut() if from_sink else network.source_side_cut()
    separation = Separation(cut, source, sink)

    problems = separation.problems(digraph) + \
        orthogonality_problems(system, cut)
    if len(cut) != network.value:
        problems.append('separation has %d vertices for a flow of %d' %
                        (len(cut), network.value))
    _verify('%s separation' % ('Maximum' if from_sink else 'Minimum'),
            problems)

    return separation


def min_separation(digraph, source, sink):
    """
    The smallest Erdős-Menger separation in the separation order, i.e. the
    one closest to the source side.
    """
    return _extreme_separation(digraph, source, sink, from_sink=False)


def max_separation(digraph, source, sink):
    """
    The largest Erdős-Menger separation, closest to the sink side.
    """
    return _extreme_separation(digraph, source, sink, from_sink=True)


class Augmentation(object):
    """
    The outcome of a successful augmenting step: the grown path-system, the
    new source and sink vertices and the edges whose usage changed.
    """

    def __init__(self, system, source, sink, changed_edges):
        self.system = system
        self.source = source
        self.sink = sink
        self.changed_edges = frozenset(changed_edges)

    def to_json(self):
        return {
            'kind': 'augmentation',
            'paths': self.system.to_json()['paths'],
            'source': self.source,
            'sink': self.sink,
            'changed_edges': [edge_str(e) for e in
                              sort_edges(self.changed_edges)],
        }

    def __repr__(self):
        return '<Augmentation +%s +%s %r>' % (self.source, self.sink,
                                              self.system)


def augment(digraph, sources, sinks, system):
    """
    Either grow ``system`` by one path, returning an :class:`Augmentation`
    whose system starts at one new source and ends at one new sink, or
    return a :class:`Separation` orthogonal to ``system``.
    """
    network = FlowNetwork(digraph, sources, sinks)
    network.load(system)

    if not network.augment_once():
        separation = Separation(network.source_side_cut(), sources, sinks)
        _verify('Augmenting-walk separation',
                separation.problems(digraph) +
                orthogonality_problems(system, separation.vertices))
        logger.debug('No augmenting walk; separation %s',
                     sort_vertices(separation.vertices))
        return separation

    grown = network.path_system()
    new_sources = grown.initial_vertices - system.initial_vertices
    new_sinks = grown.terminal_vertices - system.terminal_vertices

    problems = grown.problems(digraph, sources, sinks)
    if not (system.initial_vertices <= grown.initial_vertices and
            system.terminal_vertices <= grown.terminal_vertices):
        problems.append('augmentation dropped an endpoint')
    if len(grown) != len(system) + 1:
        problems.append('augmentation did not add exactly one path')
    _verify('Augmentation', problems)

    source = next(iter(new_sources)) if new_sources else None
    sink = next(iter(new_sinks)) if new_sinks else None
    logger.debug('Augmented by a walk from %s to %s', source, sink)

    return Augmentation(grown, source, sink, system.edges ^ grown.edges)


def _lattice_operation(digraph, source, sink, first, second, later):
    network = FlowNetwork(digraph, source, sink)
    network.maximize()
    system = network.path_system()

    first = _separation_vertices(first)
    second = _separation_vertices(second)
    for vertices in (first, second):
        problems = orthogonality_problems(system, vertices)
        if len(vertices) != network.value or \
                not separates(digraph, vertices, source, sink):
            problems.append('not a minimum separation')
        if problems:
            raise DomainError('%s is not an Erdős-Menger separation' %
                              ','.join(sort_vertices(vertices)))

    chosen = set()
    for path in system:
        positions = [i for i, v in enumerate(path) if v in first]
        positions += [i for i, v in enumerate(path) if v in second]
        chosen.add(path[max(positions) if later else min(positions)])

    separation = Separation(chosen, source, sink)
    problems = separation.problems(digraph) + \
        orthogonality_problems(system, chosen)
    _verify('Separation %s' % ('join' if later else 'meet'), problems)

    return separation


def separation_meet(digraph, source, sink, first, second):
    """
    The greatest Erdős-Menger separation below both arguments: on every path
    of a maximum system, the earlier of the two separator vertices.
    """
    return _lattice_operation(digraph, source, sink, first, second,
                              later=False)


def separation_join(digraph, source, sink, first, second):
    """
    The least Erdős-Menger separation above both arguments.
    """
    return _lattice_operation(digraph, source, sink, first, second, later=True)
