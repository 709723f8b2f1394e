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

from flamekit.command import BaseCommand, CommandError, default_seed, \
        dot_or_json, read_input, split_ids
from flamekit.digraph import serialize_edge_list
from flamekit.oracle import KINDS, InstanceSpec, gen


class Command(BaseCommand):
    """
    Generates a seeded instance as an edge list.

    The ``figure2*`` kinds carry their designated sides as ``# sources:`` and
    ``# sinks:`` annotations.
    """

    help = 'Generates a reproducible instance.'

    def add_arguments(self, parser):
        super(Command, self).add_arguments(parser)

        parser.add_argument('--kind', choices=KINDS, default=None,
                            help='Instance family')
        parser.add_argument('--n', type=int, default=None,
                            help='Size parameter')
        parser.add_argument('--p', required=False, default=None,
                            help='Edge probability of random instances, '
                                 'e.g. 0.35 or 7/20')
        parser.add_argument('--sizes', required=False, default=None,
                            help='Comma-separated layer sizes of fig1')
        parser.add_argument('--seed', type=int, default=None,
                            help='Defaults to FLAMEKIT_SEED')
        parser.add_argument('--spec', required=False, default=None,
                            help='JSON instance spec file (- for stdin)')
        parser.add_argument('--dot', action='store_true',
                            help='Emit DOT instead of an edge list')

    def _spec(self, options):
        if options['spec']:
            try:
                return InstanceSpec.from_json(
                    json.loads(read_input(options['spec'])))
            except ValueError as e:
                raise CommandError('Invalid spec JSON: %s' % e)

        if not options['kind']:
            raise CommandError('gen needs --kind or --spec')

        try:
            sizes = [int(s) for s in split_ids(options['sizes'])] or None
        except ValueError:
            raise CommandError('--sizes takes integers')

        seed = options['seed']
        return InstanceSpec(options['kind'], n=options['n'], p=options['p'],
                            sizes=sizes,
                            seed=default_seed() if seed is None else seed)

    def handle(self, *args, **options):
        spec = self._spec(options)
        instance = gen(spec)

        text = serialize_edge_list(instance.digraph,
                                   annotations=instance.annotations,
                                   header='flamekit gen %s' %
                                   json.dumps(spec.to_json(), sort_keys=True))
        return dot_or_json(instance.digraph, text, options['dot'], spec.kind)
