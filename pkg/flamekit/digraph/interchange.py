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


import json
import re

from flamekit.errors import ParseError
from flamekit.utils.templates import render_template
from .core import RootedDigraph, edge_str, sort_vertices


VERTEX_ID = re.compile(r'^[A-Za-z0-9_.-]+$')

# ``# sources: a b c`` style annotations carried by generated instances
_ANNOTATION = re.compile(r'^#\s*(sources|sinks)\s*:(.*)$')


def _check_id(token, lineno):
    if not VERTEX_ID.match(token):
        raise ParseError('invalid vertex id %r' % token, lineno=lineno)
    return token


def parse_edge_list(text):
    """
    Parse the edge-list format.

    The first non-comment line is ``root <id>``. Every following line is either
    ``<tail> <head>`` or a lone ``<id>`` declaring an isolated vertex. ``#``
    starts a comment. Parallel edges are an error, never deduplicated.
    """
    root = None
    vertices = set()
    edges = {}

    for lineno, raw_line in enumerate(text.splitlines(), 1):
        line = raw_line.split('#', 1)[0].strip()
        if not line:
            continue

        tokens = line.split()
        if root is None:
            if len(tokens) != 2 or tokens[0] != 'root':
                raise ParseError('expected "root <id>" as the first line',
                                 lineno=lineno)
            root = _check_id(tokens[1], lineno)
            vertices.add(root)
            continue

        if len(tokens) == 1:
            vertices.add(_check_id(tokens[0], lineno))
        elif len(tokens) == 2:
            edge = (_check_id(tokens[0], lineno), _check_id(tokens[1], lineno))
            if edge in edges:
                raise ParseError('parallel edge %s (first seen on line %d)' %
                                 (edge_str(edge), edges[edge]), lineno=lineno)
            edges[edge] = lineno
            vertices.update(edge)
        else:
            raise ParseError('expected "<tail> <head>", got %d tokens' %
                             len(tokens), lineno=lineno)

    if root is None:
        raise ParseError('missing "root <id>" line', lineno=1)

    return RootedDigraph(vertices, edges, root=root)


def parse_annotations(text):
    """
    Return the ``sources``/``sinks`` annotations of an edge list as a dict of
    vertex lists.
    """
    annotations = {}
    for line in text.splitlines():
        match = _ANNOTATION.match(line.strip())
        if match:
            annotations[match.group(1)] = match.group(2).split()

    return annotations


def serialize_edge_list(digraph, annotations=None, header=None):
    """
    Serialize a rooted digraph into the canonical edge-list text: the root
    line, annotations, isolated vertices, then edges, all in canonical order.
    """
    lines = []
    if header:
        lines.extend('# %s' % line for line in header.splitlines())

    lines.append('root %s' % digraph.root)

    for name in ('sources', 'sinks'):
        if annotations and name in annotations:
            side = sort_vertices(annotations[name])
            lines.append('# %s: %s' % (name, ' '.join(side)))

    for vertex in digraph.non_root_vertices():
        if not digraph.in_edges(vertex) and not digraph.out_edges(vertex):
            lines.append(vertex)

    for tail, head in digraph.sorted_edges():
        lines.append('%s %s' % (tail, head))

    return '\n'.join(lines) + '\n'


def to_dot(digraph, name='flamekit', highlight=()):
    """
    Render a digraph as DOT. The root is drawn double-circled; ``highlight``
    edges are drawn bold.
    """
    highlight = frozenset(tuple(e) for e in highlight)
    context = {
        'name': name,
        'root': digraph.root,
        'vertices': [v for v in digraph.order if v != digraph.root],
        'edges': [(t, h, (t, h) in highlight)
                  for t, h in digraph.sorted_edges()],
    }

    return render_template(context, 'digraph.dot')


def certificate_digraph(certificate):
    """
    Rebuild F* from a certificate produced by ``extend`` or ``lovasz``.
    """
    try:
        root = certificate['root']
        vertices = set(certificate['vertex_map']) | {root}
        edges = [(tail, head) for tail, head in certificate['f_star_edges']]
    except (KeyError, TypeError, ValueError) as e:
        raise ParseError('not a flame certificate: %s' % e)

    return RootedDigraph(vertices, edges, root=root)


def load_digraph(text):
    """
    Load a rooted digraph from either an edge list or a certificate JSON
    document.
    """
    if text.lstrip().startswith('{'):
        try:
            certificate = json.loads(text)
        except ValueError as e:
            raise ParseError('invalid JSON: %s' % e)
        return certificate_digraph(certificate)

    return parse_edge_list(text)
