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


import os

from flamekit.digraph import RootedDigraph


DATA_DIR = os.path.join(os.path.dirname(__file__), 'dat')


def data_path(name):
    return os.path.join(DATA_DIR, name)


def rooted(edges, vertices=(), root='r'):
    """Build a rooted digraph from ``(tail, head)`` pairs."""
    return RootedDigraph.from_edges(edges, vertices=vertices, root=root)


# Two internally disjoint routes from the root to v
TWO_ROUTE = rooted([('r', 'a'), ('r', 'b'), ('a', 'v'), ('b', 'v')])

# Both routes to v pass through c
SHARED_VERTEX = rooted([('r', 'c'), ('c', 'a'), ('c', 'b'), ('a', 'v'),
                        ('b', 'v')])

CHAIN = rooted([('r', 'a'), ('a', 'b'), ('b', 'v')])
