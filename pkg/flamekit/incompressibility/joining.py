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
import itertools
import logging

from flamekit.digraph import Digraph, edge_str, sort_edges, sort_vertices
from flamekit.errors import DomainError, InternalConsistencyError
from flamekit.menger import FlowNetwork, PathSystem, Separation, augment, \
        min_separation
from flamekit.utils.caps import cap_limit
from flamekit.utils.pool import parallel_map


logger = logging.getLogger('flamekit.incompressibility')


class JoinWitness(object):
    """
    A disjoint (X, Y)-path-system starting at every vertex of X.
    """

    def __init__(self, system):
        self.system = system

    @property
    def sources(self):
        return self.system.initial_vertices

    @property
    def sinks(self):
        return self.system.terminal_vertices

    def to_json(self):
        return self.system.to_json()

    def __repr__(self):
        return '<JoinWitness %r>' % self.system


class HittingResult(collections.namedtuple('HittingResult',
                                           ['status', 'members', 'method'])):
    """
    Outcome of a hitting-set search. ``status`` is ``found``, ``none`` or
    ``indeterminate``; ``method`` says which search produced a found set.
    """

    def to_json(self):
        output = {'status': self.status}
        if self.members is not None:
            if all(isinstance(m, tuple) for m in self.members):
                output['members'] = [edge_str(e) for e in
                                     sort_edges(self.members)]
            else:
                output['members'] = sort_vertices(self.members)
            output['method'] = self.method

        return output


def strip(digraph, sources, sinks):
    """
    Drop the in-edges of the source side and the out-edges of the sink side.
    No (X, Y)-path uses them.
    """
    sources = frozenset(sources)
    sinks = frozenset(sinks)
    edges = [e for e in digraph.edges
             if e[1] not in sources and e[0] not in sinks]

    return Digraph(digraph.vertices, edges)


def _check_subset(digraph, vertices, name):
    missing = frozenset(vertices) - digraph.vertices
    if missing:
        vertex = sort_vertices(missing)[0]
        raise DomainError('%s: %s is not a vertex of the digraph' %
                          (name, vertex), subject=vertex)


def _reduced(base, sources, sinks):
    common = sources & sinks
    return base.remove_vertices(common), sources - common, sinks - common


def maximum_joining(digraph, sources, sinks):
    """
    A maximum disjoint (X, Y)-path-system. Vertices on both sides are
    covered by their trivial paths.
    """
    sources = frozenset(sources)
    sinks = frozenset(sinks)
    common = sources & sinks

    reduced, rest_sources, rest_sinks = _reduced(
        strip(digraph, sources, sinks), sources, sinks)
    network = FlowNetwork(reduced, rest_sources, rest_sinks)
    network.maximize()

    return PathSystem(network.path_system().paths +
                      tuple((c,) for c in common), 'XY')


def is_joinable(digraph, sources, sinks):
    """
    Return a :class:`JoinWitness` if some disjoint (X, Y)-path-system starts
    at every vertex of X, otherwise None.
    """
    _check_subset(digraph, sources, 'X')
    _check_subset(digraph, sinks, 'Y')

    system = maximum_joining(digraph, sources, sinks)
    if len(system) != len(frozenset(sources)):
        return None

    return JoinWitness(system)


def is_incompressible(digraph, sources, sinks, jobs=None):
    """
    True if X is joinable to Y and every joining path-system ends at every
    vertex of Y. Equivalently no ``y`` of Y can be deleted with X still
    joinable to the rest of Y.
    """
    sources = frozenset(sources)
    sinks = frozenset(sinks)
    if is_joinable(digraph, sources, sinks) is None:
        return False

    base = strip(digraph, sources, sinks)

    def compressible_at(sink):
        return is_joinable(base.remove_vertices([sink]), sources,
                           sinks - {sink}) is not None

    # A vertex on both sides is only ever covered by its trivial path
    candidates = sort_vertices(sinks - sources)
    return not any(parallel_map(compressible_at, candidates, jobs=jobs))


def incompressible_separation(digraph, sources, sinks, source):
    """
    The smallest Erdős-Menger (X, Y)-separation S, given that X is not
    joinable to Y but ``X - x`` is. ``X - x`` is incompressible to S.
    """
    sources = frozenset(sources)
    sinks = frozenset(sinks)
    if source not in sources:
        raise DomainError('%s is not in X' % source, subject=source)

    base = strip(digraph, sources, sinks)
    if is_joinable(base, sources - {source}, sinks) is None:
        raise DomainError('X - %s is not joinable to Y' % source,
                          subject=source)
    if is_joinable(base, sources, sinks) is not None:
        raise DomainError('X is joinable to Y')

    reduced, rest_sources, rest_sinks = _reduced(base, sources, sinks)
    separation = min_separation(reduced, rest_sources, rest_sinks)
    vertices = separation.vertices | (sources & sinks)

    if not is_incompressible(base, sources - {source}, vertices):
        raise InternalConsistencyError('X - %s is not incompressible to the '
                                       'smallest separation %s' %
                                       (source, sort_vertices(vertices)))

    return Separation(vertices, sources, sinks)


def _grow(reduced, sources, sinks, system):
    """
    Augment ``system`` until no augmenting walk is left.
    """
    while True:
        result = augment(reduced, sources, sinks, system)
        if isinstance(result, Separation):
            return system
        system = result.system


def _nontrivial(system):
    return PathSystem([p for p in system if len(p) > 1], 'XY')


def extend_joinable(digraph, sources, part, sinks, part_sinks):
    """
    Given ``X`` joinable to ``Y`` and ``X' ⊆ X`` joinable to ``Y' ⊆ Y``,
    return ``Y'' ⊆ Y`` with X joinable to ``Y''`` and at most ``|X - X'|``
    vertices outside ``Y'``.
    """
    sources = frozenset(sources)
    part = frozenset(part)
    sinks = frozenset(sinks)
    part_sinks = frozenset(part_sinks)
    if not (part <= sources and part_sinks <= sinks):
        raise DomainError("X' and Y' must be subsets of X and Y")

    base = strip(digraph, sources, sinks)
    if is_joinable(base, sources, sinks) is None:
        raise DomainError('X is not joinable to Y')
    witness = is_joinable(base, part, part_sinks)
    if witness is None:
        raise DomainError("X' is not joinable to Y'")

    reduced, rest_sources, rest_sinks = _reduced(base, sources, sinks)
    system = _grow(reduced, rest_sources, rest_sinks,
                   _nontrivial(witness.system))
    if system.initial_vertices != rest_sources:
        raise InternalConsistencyError('Augmenting stopped short of X')

    extended = part_sinks | system.terminal_vertices | (sources & sinks)

    problems = []
    if is_joinable(base, sources, extended) is None:
        problems.append("X is not joinable to Y''")
    if len(extended - part_sinks) > len(sources - part):
        problems.append("Y'' gained more than |X - X'| vertices")
    if problems:
        raise InternalConsistencyError('Extension failed self-verification: '
                                       '%s' % '; '.join(problems))

    return extended


def finitely_extendable(digraph, sources, part, sinks):
    """
    Whether every finite enlargement of ``X'`` inside X stays joinable to Y.
    On a finite digraph X itself is such an enlargement and joinability is
    inherited by subsets, so this is joinability of X.
    """
    if not frozenset(part) <= frozenset(sources):
        raise DomainError("X' must be a subset of X")

    return is_joinable(digraph, sources, sinks) is not None


def _stranded_source(digraph, sources, sinks, start):
    reduced, rest_sources, rest_sinks = _reduced(digraph, sources, sinks)
    system = _grow(reduced, rest_sources, rest_sinks, start)

    stranded = rest_sources - system.initial_vertices
    if len(stranded) != 1:
        raise InternalConsistencyError('Deleting one vertex stranded %d '
                                       'sources' % len(stranded))

    return next(iter(stranded))


def delete_preserving(digraph, sources, part, sinks, deletions):
    """
    Delete ``U`` while keeping ``X'`` finitely extendable: returns
    ``W ⊇ U`` that adds at most ``|U|`` vertices of ``X - X'``.

    Vertices of U are handled in canonical order. A deletion that leaves X
    joinable costs nothing; otherwise exactly one source loses its path and
    is deleted along with it.
    """
    sources = frozenset(sources)
    part = frozenset(part)
    sinks = frozenset(sinks)
    deletions = frozenset(deletions)
    _check_subset(digraph, deletions, 'U')
    if deletions & part:
        raise DomainError("U meets X'")

    base = strip(digraph, sources, sinks)
    if not finitely_extendable(base, sources, part, sinks):
        raise DomainError("X' is not finitely extendable")
    witness = is_joinable(base.remove_vertices(deletions), part,
                          sinks - deletions)
    if witness is None:
        raise DomainError("X' is not joinable to Y - U in D - U")
    start = _nontrivial(witness.system)

    deleted = set()
    current = base
    for vertex in sort_vertices(deletions):
        if vertex in deleted:
            continue

        rest = current.remove_vertices([vertex])
        rest_sources = sources - deleted - {vertex}
        rest_sinks = sinks - deleted - {vertex}
        removed = {vertex}
        if vertex not in sources and \
                is_joinable(rest, rest_sources, rest_sinks) is None:
            removed.add(_stranded_source(rest, rest_sources, rest_sinks,
                                         start))
        logger.debug('Deleting %s removes %s', vertex, sort_vertices(removed))

        deleted |= removed
        current = current.remove_vertices(removed)

    kept = frozenset(deleted)
    problems = []
    if len(kept - deletions) > len(deletions):
        problems.append('W - U is larger than U')
    if not kept - deletions <= sources - part:
        problems.append("W - U leaves X - X'")
    if not finitely_extendable(base.remove_vertices(kept), sources - kept,
                               part - kept, sinks - kept):
        problems.append("X' - W is not finitely extendable in D - W")
    if problems:
        raise InternalConsistencyError('Deletion failed self-verification: %s'
                                       % '; '.join(problems))

    return kept


def hit_all_families(digraph, sources, part, sinks, families, limit=None):
    """
    Look for ``O`` with ``X' ⊆ O ⊆ X``, O joinable to Y and O meeting every
    family. Families are hit greedily in order, each by its first vertex
    that keeps O joinable. If that fails, every subset of the families'
    union is tried on digraphs within the ``exhaustive_vertices`` cap;
    beyond it the result is ``indeterminate``.
    """
    sources = frozenset(sources)
    part = frozenset(part)
    families = [frozenset(f) for f in families]
    for family in families:
        if not family <= sources - part:
            raise DomainError("Every family must lie in X - X'")

    base = strip(digraph, sources, sinks)
    if any(not f for f in families) or \
            is_joinable(base, part, sinks) is None:
        return HittingResult('none', None, None)

    chosen = set(part)
    for family in families:
        if chosen & family:
            continue
        for vertex in sort_vertices(family):
            if is_joinable(base, chosen | {vertex}, sinks) is not None:
                chosen.add(vertex)
                break
        else:
            break
    else:
        return HittingResult('found', frozenset(chosen), 'greedy')

    logger.debug('Greedy hitting failed, %d vertices', len(digraph.vertices))
    if len(digraph.vertices) > cap_limit('exhaustive_vertices', limit):
        return HittingResult('indeterminate', None, None)

    pool = sort_vertices(frozenset().union(*families))
    for size in range(1, len(pool) + 1):
        for extra in itertools.combinations(pool, size):
            candidate = part | frozenset(extra)
            if all(candidate & f for f in families) and \
                    is_joinable(base, candidate, sinks) is not None:
                return HittingResult('found', candidate, 'exhaustive')

    return HittingResult('none', None, None)
