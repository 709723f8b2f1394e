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

from flamekit.digraph import as_edge_set, restrict_at
from flamekit.menger import max_disjoint_paths
from flamekit.utils.pool import parallel_map
from .witnesses import GWitness


logger = logging.getLogger('flamekit.flames')


def is_in_G(digraph, vertex, edges):
    """
    Return a :class:`GWitness` if ``edges`` are the last edges of some
    internally disjoint (r, v)-path-system, otherwise None.

    Restricting ``v`` to ``edges`` leaves exactly those in-edges, so the
    restricted connectivity reaches ``|edges|`` iff every one of them is the
    last edge of a path.
    """
    edges = as_edge_set(edges)
    restricted = restrict_at(digraph, vertex, edges)
    system = max_disjoint_paths(restricted, digraph.root, vertex)
    if len(system) != len(edges):
        return None

    return GWitness(vertex, edges, system)


def _own_witness(flame):
    return lambda vertex: is_in_G(flame, vertex, flame.in_edges(vertex))


def is_flame(flame, jobs=None):
    """
    Return a map from every non-root vertex to the :class:`GWitness` of its
    in-edge set, or None if ``flame`` is not a flame.
    """
    vertices = flame.non_root_vertices()
    witnesses = parallel_map(_own_witness(flame), vertices, jobs=jobs)
    if any(w is None for w in witnesses):
        return None

    return dict(zip(vertices, witnesses))


def find_flame_violation(flame):
    """
    The first vertex, in canonical order, whose in-edges cannot all be last
    edges of one internally disjoint path-system. None for a flame.
    """
    check = _own_witness(flame)
    for vertex in flame.non_root_vertices():
        if check(vertex) is None:
            logger.debug('Flame property fails at %s', vertex)
            return vertex

    return None
