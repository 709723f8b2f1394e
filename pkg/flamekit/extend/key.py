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

from flamekit.digraph import edge_str, restrict_at, sort_edges
from flamekit.errors import DomainError, InternalConsistencyError
from flamekit.flames import is_in_G, is_quasi_flame, subsets_by_size
from flamekit.utils.caps import enforce_cap


logger = logging.getLogger('flamekit.extend')


class RelevantSet(collections.namedtuple('RelevantSet',
                                         ['vertex', 'edges', 'hitting'])):
    """
    An in-edge set of ``vertex`` that the base in-edges of ``v`` cannot
    realize, with the new in-edges of ``v`` that each make it realizable on
    their own.
    """

    def to_json(self):
        return {
            'vertex': self.vertex,
            'edges': [edge_str(e) for e in sort_edges(self.edges)],
            'hitting': [edge_str(e) for e in sort_edges(self.hitting)],
        }


def _with_root_edges(host, base):
    return base.add_edges(host.out_edges(host.root))


def relevant_sets(host, base, vertex, exhaustive=False, cap=None):
    """
    The relevant in-edge sets at every vertex other than ``vertex``, each
    with its hitting set.

    ``D0`` restricts ``vertex`` to its base in-edges. A set between the base
    in-edges and all in-edges of some ``w`` is relevant if ``D0`` cannot
    realize it; its hitting set holds the new in-edges ``e`` of ``vertex``
    with the set realizable in ``D0 + e``. Hitting sets only shrink as the
    set grows, so by default only the full in-edge set of each ``w`` is
    examined; ``exhaustive`` lists every relevant set.
    """
    base = _with_root_edges(host, base)
    restricted = restrict_at(host, vertex, base.in_edges(vertex))
    new_edges = sort_edges(host.in_edges(vertex) - base.in_edges(vertex))

    found = []
    for other in host.non_root_vertices():
        if other == vertex:
            continue

        in_edges = host.in_edges(other)
        if exhaustive:
            extra = in_edges - base.in_edges(other)
            enforce_cap('in_degree', len(extra),
                        'the in-edge interval width at %s' % other,
                        limit=cap, subject=other)
            candidates = [base.in_edges(other) | s
                          for s in subsets_by_size(extra)]
        else:
            candidates = [in_edges]

        for edges in candidates:
            if is_in_G(restricted, other, edges) is not None:
                continue
            hitting = frozenset(e for e in new_edges
                                if is_in_G(restricted.add_edges([e]), other,
                                           edges) is not None)
            if not hitting:
                raise InternalConsistencyError(
                    'Relevant set at %s has an empty hitting set' % other)
            found.append(RelevantSet(other, edges, hitting))

    return found


def key_I_star(host, base, vertex, exhaustive=False, cap=None):
    """
    The smallest in-edge set ``I*`` of ``vertex`` containing its base
    in-edges such that restricting ``vertex`` to ``I*`` keeps the host a
    quasi-flame over ``base``.

    Candidates are tried by size, then lexicographically; a candidate must
    meet every hitting set, be realizable and pass the quasi-flame check.
    """
    if vertex == host.root:
        raise DomainError('I* is not defined at the root', subject=vertex)
    check = is_quasi_flame(host, base, cap=cap)
    if not check:
        raise DomainError('The host is not a quasi-flame over the base at %s'
                          % check.vertex, subject=check.vertex)

    base = _with_root_edges(host, base)
    base_edges = base.in_edges(vertex)
    extra = host.in_edges(vertex) - base_edges
    enforce_cap('in_degree', len(extra),
                'the in-edge interval width at %s' % vertex, limit=cap,
                subject=vertex)

    relevant = relevant_sets(host, base, vertex, exhaustive=exhaustive,
                             cap=cap)
    logger.debug('%d relevant sets at %s', len(relevant), vertex)

    for added in subsets_by_size(extra):
        candidate = base_edges | added
        if any(not (candidate & r.hitting) for r in relevant):
            continue
        if is_in_G(host, vertex, candidate) is None:
            continue
        if not is_quasi_flame(restrict_at(host, vertex, candidate), base,
                              cap=cap):
            continue
        return candidate

    raise InternalConsistencyError('No key set exists at %s' % vertex)
