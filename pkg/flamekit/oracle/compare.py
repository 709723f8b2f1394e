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


import itertools
import logging

from flamekit import CONSTANTS
from flamekit.digraph import sort_edges
from flamekit.errors import DomainError
from flamekit.extend import MODES, default_mode, extend_flame, lovasz
from flamekit.flames import is_in_G, is_v_large
from flamekit.incompressibility import is_incompressible, is_joinable
from flamekit.linkage import pym_merge
from flamekit.menger import erdos_menger_pair, is_orthogonal, kappa, \
        leq_separation, max_separation, min_separation, separation_join, \
        separation_meet
from flamekit.utils.pool import parallel_map
from .brute import brute_G, brute_is_incompressible, brute_is_joinable, \
        brute_is_v_large, brute_leq, brute_max_paths, brute_separations, \
        brute_set_path_systems
from .generators import InstanceSpec, gen, random_flame
from .prng import SplitRandom


logger = logging.getLogger('flamekit.oracle')

# Suites whose brute-force side enumerates pairs of separations or systems
SMALL_N = 6


class Case(object):
    """
    One seeded comparison case. ``rng`` is private to the case.
    """

    def __init__(self, index, spec, rng, mode=None):
        self.index = index
        self.spec = spec
        self.rng = rng
        self.mode = mode
        self.instance = gen(spec)

    @property
    def digraph(self):
        return self.instance.digraph

    def mismatch(self, **details):
        details.update({'case': self.index, 'spec': self.spec.to_json()})
        return details


def _random_sides(case, overlap=False):
    """
    Two small disjoint (or, with ``overlap``, possibly meeting) vertex sets
    drawn from the non-root vertices.
    """
    rng = case.rng
    vertices = rng.shuffled(case.digraph.non_root_vertices())
    if len(vertices) < 2:
        return None

    size = 1 + rng.randbelow(min(2, len(vertices) // 2))
    sources = frozenset(vertices[:size])
    rest = vertices[size:]
    if overlap and rng.bernoulli('0.25'):
        rest = [vertices[0]] + rest
    sinks = frozenset(rest[:1 + rng.randbelow(min(2, len(rest)))])

    return sources, sinks


def check_menger(case):
    digraph = case.digraph
    root = digraph.root
    for vertex in digraph.non_root_vertices():
        fast = kappa(digraph, root, vertex)
        brute = brute_max_paths(digraph, root, vertex)
        if fast != brute:
            return case.mismatch(vertex=vertex, fast=fast, brute=brute)

        host = digraph.remove_edges([(root, vertex)])
        pair = erdos_menger_pair(digraph, vertex)
        smallest = len(brute_separations(host, root, vertex)[0])
        if len(pair.system) != smallest or \
                len(pair.separation) != smallest or \
                not is_orthogonal(pair.system, pair.separation.vertices):
            return case.mismatch(vertex=vertex, fast=pair.to_json(),
                                 brute=smallest)

    return None


def check_lattice(case):
    digraph = case.digraph
    root = digraph.root
    for vertex in digraph.non_root_vertices():
        host = digraph.remove_edges([(root, vertex)])
        separations = brute_separations(host, root, vertex)
        lowest = min_separation(host, root, vertex)
        highest = max_separation(host, root, vertex)
        if lowest not in separations or highest not in separations:
            return case.mismatch(vertex=vertex, fast='extreme separation',
                                 brute=[s.to_json() for s in separations])

        for separation in separations:
            if not brute_leq(host, root, lowest, separation) or \
                    not brute_leq(host, root, separation, highest):
                return case.mismatch(vertex=vertex, fast='not extreme',
                                     brute=separation.to_json())

        for first, second in itertools.combinations(separations, 2):
            if leq_separation(host, root, first, second) != \
                    brute_leq(host, root, first, second):
                return case.mismatch(vertex=vertex, fast='order',
                                     brute=[first.to_json(),
                                            second.to_json()])

            meet = separation_meet(host, root, vertex, first, second)
            join = separation_join(host, root, vertex, first, second)
            if meet not in separations or join not in separations or \
                    not brute_leq(host, root, meet, first) or \
                    not brute_leq(host, root, meet, second) or \
                    not brute_leq(host, root, first, join) or \
                    not brute_leq(host, root, second, join):
                return case.mismatch(vertex=vertex, fast=[meet.to_json(),
                                                          join.to_json()],
                                     brute=[first.to_json(),
                                            second.to_json()])

    return None


def check_pym(case):
    sides = _random_sides(case)
    if sides is None:
        return None

    sources, sinks = sides
    digraph = case.digraph
    systems = brute_set_path_systems(digraph, sources, sinks)
    for first, second in itertools.product(systems, repeat=2):
        merged = pym_merge(digraph, sources, sinks, first, second)
        if not (first.initial_vertices <= merged.initial_vertices and
                second.terminal_vertices <= merged.terminal_vertices and
                merged.edges <= first.edges | second.edges):
            return case.mismatch(fast=merged.to_json(),
                                 brute=[first.to_json(), second.to_json()])

    return None


def check_g(case):
    digraph = case.digraph
    for vertex in digraph.non_root_vertices():
        realizable = set(brute_G(digraph, vertex))
        in_edges = sort_edges(digraph.in_edges(vertex))
        for size in range(len(in_edges) + 1):
            for edges in itertools.combinations(in_edges, size):
                edges = frozenset(edges)
                fast = is_in_G(digraph, vertex, edges) is not None
                if fast != (edges in realizable):
                    return case.mismatch(vertex=vertex, fast=fast,
                                         edges=[list(e) for e in
                                                sort_edges(edges)])

    return None


def check_largeness(case):
    digraph = case.digraph
    kept = [e for e in digraph.sorted_edges() if not case.rng.bernoulli('0.2')]
    subgraph = digraph.remove_edges(digraph.edges - frozenset(kept))
    for vertex in digraph.non_root_vertices():
        fast = is_v_large(subgraph, digraph, vertex) is not None
        brute = brute_is_v_large(subgraph, digraph, vertex)
        if fast != brute:
            return case.mismatch(vertex=vertex, fast=fast, brute=brute)

    return None


def check_incompressible(case):
    if case.instance.sources is not None:
        sides = case.instance.sources, case.instance.sinks
    else:
        sides = _random_sides(case, overlap=True)
        if sides is None:
            return None

    sources, sinks = sides
    digraph = case.digraph
    for fast, brute in ((is_joinable(digraph, sources, sinks) is not None,
                         brute_is_joinable(digraph, sources, sinks)),
                        (is_incompressible(digraph, sources, sinks),
                         brute_is_incompressible(digraph, sources, sinks))):
        if fast != brute:
            return case.mismatch(sources=sorted(sources), sinks=sorted(sinks),
                                 fast=fast, brute=brute)

    return None


def _brute_flame_problems(flame, digraph):
    problems = []
    for vertex in digraph.non_root_vertices():
        if flame.in_edges(vertex) not in set(brute_G(flame, vertex)):
            problems.append('not a flame at %s' % vertex)
        if not brute_is_v_large(flame, digraph, vertex):
            problems.append('not large at %s' % vertex)

    return problems


def check_lovasz(case):
    digraph = case.digraph
    certificate = lovasz(digraph)
    flame = certificate.flame
    root = digraph.root
    for vertex in digraph.non_root_vertices():
        expected = brute_max_paths(digraph, root, vertex)
        if not expected == kappa(flame, root, vertex) == \
                len(flame.in_edges(vertex)):
            return case.mismatch(vertex=vertex, brute=expected,
                                 fast=len(flame.in_edges(vertex)))

    problems = _brute_flame_problems(flame, digraph)
    if problems:
        return case.mismatch(fast=certificate.to_json(), brute=problems)

    return None


def check_extend(case):
    digraph = case.digraph
    flame = random_flame(digraph, case.rng.raw(), case.spec.p)
    certificate = extend_flame(digraph, flame, mode=case.mode)

    problems = _brute_flame_problems(certificate.flame, digraph)
    if not flame.edges <= certificate.flame.edges:
        problems.append('F* does not contain F')
    if problems:
        return case.mismatch(fast=certificate.to_json(), brute=problems)

    return None


SUITES = {
    'menger': (check_menger, None),
    'lattice': (check_lattice, SMALL_N),
    'pym': (check_pym, SMALL_N),
    'g': (check_g, None),
    'largeness': (check_largeness, None),
    'incompressible': (check_incompressible, None),
    'lovasz': (check_lovasz, None),
    'extend': (check_extend, None),
}

SIDED_KINDS = ('figure2a', 'figure2b', 'figure2c', 'figure2d')


def case_spec(suite, index, seed, max_n, p_values):
    """
    The instance spec of case ``index``, and the case's private stream.
    Every fifth incompressibility case is a small two-sided instance.
    """
    rng = SplitRandom(seed).split(index)
    if suite == 'incompressible' and index % 5 == 4:
        kind = SIDED_KINDS[rng.randbelow(len(SIDED_KINDS))]
        return InstanceSpec(kind, n=1 + rng.randbelow(2)), rng

    n = 2 + rng.randbelow(max_n - 1)
    p = p_values[rng.randbelow(len(p_values))]
    return InstanceSpec('random', n=n, p=p, seed=rng.raw()), rng


def compare(suite, max_n=None, cases=None, seed=0, jobs=None, mode=None):
    """
    Run ``cases`` seeded cases of ``suite`` and count those where a fast
    routine disagrees with its brute-force oracle. ``mode`` is the extension
    mode of the ``extend`` suite.
    """
    if suite not in SUITES:
        raise DomainError('Unknown suite %r' % suite)
    mode = mode or default_mode()
    if mode not in MODES:
        raise DomainError('Unknown extension mode %r' % mode)

    settings = CONSTANTS['oracle']
    check, small = SUITES[suite]
    max_n = int(max_n or settings['max_n'])
    if small is not None:
        max_n = min(max_n, small)
    cases = int(settings['cases'] if cases is None else cases)
    if max_n < 2:
        raise DomainError('Instances need at least two vertices')
    if cases < 0 or seed < 0:
        raise DomainError('The seed and the case count must be non-negative')

    p_values = [str(p) for p in settings['p_values']]

    def run(index):
        spec, rng = case_spec(suite, index, seed, max_n, p_values)
        return check(Case(index, spec, rng, mode=mode))

    results = parallel_map(run, range(cases), jobs=jobs)
    mismatches = [r for r in results if r is not None]
    logger.info('Suite %s: %d of %d cases disagree', suite, len(mismatches),
                cases)

    report = {
        'suite': suite,
        'cases': cases,
        'mismatches': len(mismatches),
        'first_mismatch': mismatches[0] if mismatches else None,
    }
    if suite == 'extend':
        report['mode'] = mode

    return report
