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

from flamekit.command import BaseCommand, default_seed
from flamekit.extend import MODES
from flamekit.oracle import SUITES, compare


logger = logging.getLogger('oracle-compare')


class Command(BaseCommand):
    """
    Cross-checks the fast routines against the brute-force oracles on seeded
    random instances.
    """

    help = 'Runs an oracle comparison suite.'

    def add_arguments(self, parser):
        super(Command, self).add_arguments(parser)

        parser.add_argument('--suite', choices=sorted(SUITES),
                            default='menger', help='The comparison suite')
        parser.add_argument('--max-n', type=int, default=None,
                            help='Largest instance size')
        parser.add_argument('--cases', type=int, default=None,
                            help='Number of cases')
        parser.add_argument('--seed', type=int, default=None,
                            help='Defaults to FLAMEKIT_SEED')
        parser.add_argument('--mode', choices=MODES, default=None,
                            help='Extension mode of the extend suite')

    def handle(self, *args, **options):
        seed = options['seed']
        report = compare(options['suite'], max_n=options['max_n'],
                         cases=options['cases'],
                         seed=default_seed() if seed is None else seed,
                         jobs=self.jobs, mode=options['mode'])

        if report['mismatches']:
            logger.error('%d of %d cases disagree with the oracle',
                         report['mismatches'], report['cases'])
        else:
            logger.success('All %d cases agree', report['cases'])

        return report
