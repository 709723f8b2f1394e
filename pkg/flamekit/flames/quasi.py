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

from flamekit.digraph import RootedDigraph, vertex_key
from flamekit.errors import DomainError, InternalConsistencyError
from flamekit.utils.caps import enforce_cap
from .largeness import subsets_by_size
from .membership import find_flame_violation, is_in_G
from .witnesses import QuasiFlameCheck


logger = logging.getLogger('flamekit.flames')


def _check_subgraph(base, digraph):
    if not (base.vertices <= digraph.vertices and base.edges <= digraph.edges):
        raise DomainError('The base is not a subgraph of the host digraph')


def smallest_unrealizable(digraph, vertex, base_edges, cap=None):
    """
    The smallest set between ``base_edges`` and the in-edges of ``vertex``
    that is not realizable, or None if the whole interval is.

    Realizable in-edge sets are closed under taking subsets, so the interval
    is fine iff its top is; the interval is only enumerated to name a
    counterexample.
    """
    in_edges = digraph.in_edges(vertex)
    if is_in_G(digraph, vertex, in_edges) is not None:
        return None

    base_edges = frozenset(base_edges) & in_edges
    extra = in_edges - base_edges
    enforce_cap('in_degree', len(extra),
                'the in-edge interval width at %s' % vertex, limit=cap,
                subject=vertex)

    for edges in subsets_by_size(extra):
        candidate = base_edges | edges
        if is_in_G(digraph, vertex, candidate) is None:
            return candidate

    raise InternalConsistencyError('The in-edges of %s are unrealizable but '
                                   'no subset is' % vertex)


def is_quasi_flame(digraph, base, cap=None):
    """
    Check that at every vertex each in-edge set containing the ``base``
    in-edges is realizable. Returns a :class:`QuasiFlameCheck` naming the
    first vertex and smallest set that fail.
    """
    _check_subgraph(base, digraph)

    for vertex in digraph.non_root_vertices():
        failing = smallest_unrealizable(digraph, vertex,
                                        base.in_edges(vertex), cap=cap)
        if failing is not None:
            return QuasiFlameCheck(False, vertex, failing)

    return QuasiFlameCheck(True, None, None)


def _greedy_key(edge):
    return vertex_key(edge[1]), vertex_key(edge[0])


def maximal_quasi_flame(digraph, flame):
    """
    Grow ``flame`` inside ``digraph`` to a quasi-flame over it that no single
    remaining edge can extend.

    Adding ``uv`` leaves every in-edge set but that of ``v`` unchanged and
    only adds paths, so each candidate is checked at its head alone. Edges
    are tried by head, then tail, until nothing more fits.
    """
    _check_subgraph(flame, digraph)
    violation = find_flame_violation(flame)
    if violation is not None:
        raise DomainError('The base is not a flame at %s' % violation,
                          subject=violation)

    grown = RootedDigraph(digraph.vertices, flame.edges, root=digraph.root)
    candidates = sorted(digraph.edges - flame.edges, key=_greedy_key)

    changed = True
    while changed:
        changed = False
        remaining = []
        for edge in candidates:
            attempt = grown.add_edges([edge])
            head = edge[1]
            if is_in_G(attempt, head, attempt.in_edges(head)) is not None:
                grown = attempt
                changed = True
            else:
                remaining.append(edge)
        candidates = remaining

    logger.debug('Maximal quasi-flame keeps %d of %d edges',
                 len(grown.edges), len(digraph.edges))
    return grown
