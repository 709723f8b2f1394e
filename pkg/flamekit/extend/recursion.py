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

from flamekit import CONSTANTS
from flamekit.digraph import RootedDigraph, restrict_at
from flamekit.errors import CapExceeded, DomainError, InternalConsistencyError
from flamekit.flames import find_flame_violation, is_flame, is_large, \
        maximal_quasi_flame
from flamekit.linkage import covering_in_large
from flamekit.menger import kappa
from .certificate import LargeFlameCertificate
from .key import key_I_star
from .state import ExtensionState


logger = logging.getLogger('flamekit.extend')

MODES = ('faithful', 'finite-direct')


def default_mode():
    return CONSTANTS['extension']['default_mode']


def _check_order(digraph, vertex_order):
    if vertex_order is None:
        return list(digraph.non_root_vertices())

    vertex_order = list(vertex_order)
    expected = set(digraph.non_root_vertices())
    if len(vertex_order) != len(expected) or set(vertex_order) != expected:
        raise DomainError('The vertex order must list every non-root vertex '
                          'exactly once')

    return vertex_order


def _check_flame(digraph, flame):
    if flame.root != digraph.root:
        raise DomainError('F and D have different roots')
    if not (flame.vertices <= digraph.vertices and
            flame.edges <= digraph.edges):
        raise DomainError('F is not a subgraph of D')

    violation = find_flame_violation(flame)
    if violation is not None:
        raise DomainError('F is not a flame at %s' % violation,
                          subject=violation)


def _target(mode, host, flame, vertex, cap):
    if mode == 'finite-direct':
        return host.in_edges(vertex)

    try:
        return key_I_star(host, flame, vertex, cap=cap)
    except CapExceeded:
        logger.warning('The key set search at %s is over the cap; the '
                       'finite-direct mode has no such cap', vertex)
        raise


def extend_flame(digraph, flame, mode=None, vertex_order=None, cap=None,
                 debug=False, seed=None):
    """
    Extend the flame ``F`` of ``D`` to a large flame ``F*`` and return its
    verified :class:`LargeFlameCertificate`.

    The host ``L`` starts as a maximal flame of D containing F and the
    out-edges of the root. Each vertex in turn is covered by a path-system
    of L that is Erdős-Menger in both L and D; its edges join the flame and
    the other in-edges of the vertex leave the host. ``faithful`` mode covers
    the key set of the vertex, ``finite-direct`` all of its host in-edges.
    """
    mode = mode or default_mode()
    if mode not in MODES:
        raise DomainError('Unknown extension mode %r' % mode)
    vertex_order = _check_order(digraph, vertex_order)
    _check_flame(digraph, flame)

    root = digraph.root
    grown = RootedDigraph(digraph.vertices,
                          flame.edges | digraph.out_edges(root), root=root)
    host = maximal_quasi_flame(digraph, grown)
    state = ExtensionState(digraph, grown, host)
    logger.info('Extending a flame of %d edges in %s mode; the host keeps %d '
                'of %d edges', len(flame.edges), mode, len(host.edges),
                len(digraph.edges))

    for vertex in vertex_order:
        target = _target(mode, state.host, state.flame, vertex, cap)
        system = covering_in_large(state.host, digraph, vertex, target)

        grown = state.flame.add_edges(system.edges)
        host = restrict_at(state.host, vertex, grown.in_edges(vertex))
        state.advance(vertex, system, grown, host)
        if debug:
            state.check(largeness=True)

    state.freeze()

    flame_star = state.flame
    flame_witnesses = is_flame(flame_star)
    largeness_witnesses = is_large(flame_star, digraph, all_vertices=True)
    if flame_witnesses is None or largeness_witnesses is None:
        raise InternalConsistencyError('The extended digraph is not a large '
                                       'flame')

    certificate = LargeFlameCertificate(digraph, flame_star, flame_witnesses,
                                        largeness_witnesses, mode,
                                        vertex_order, seed=seed, base=flame)
    return certificate.verify()


def lovasz(digraph, vertex_order=None, debug=False, seed=None):
    """
    A large flame grown from the edgeless flame. Its in-degrees equal the
    local connectivities of ``D`` from the root, which the certificate
    records and verifies.
    """
    edgeless = RootedDigraph(digraph.vertices, (), root=digraph.root)
    certificate = extend_flame(digraph, edgeless, mode='finite-direct',
                               vertex_order=vertex_order, debug=debug,
                               seed=seed)

    root = digraph.root
    connectivity = {}
    for vertex in digraph.non_root_vertices():
        expected = kappa(digraph, root, vertex)
        kept = kappa(certificate.flame, root, vertex)
        if expected != kept:
            raise InternalConsistencyError('kappa(%s) drops from %d to %d' %
                                           (vertex, expected, kept))
        connectivity[vertex] = expected

    certificate.kappa = connectivity
    return certificate.verify()
