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
import multiprocessing.dummy
import os

from flamekit import CONSTANTS


logger = logging.getLogger('flamekit.pool')


def default_jobs():
    """
    Number of worker threads for per-vertex checks.

    ``FLAMEKIT_JOBS`` overrides the ``concurrency.jobs`` configuration value.
    """
    override = os.environ.get('FLAMEKIT_JOBS')
    if override:
        return max(1, int(override))

    return max(1, int(CONSTANTS['concurrency']['jobs']))


def parallel_map(func, items, jobs=None):
    """
    Apply ``func`` to every item and return the results in input order.

    With more than one job the calls are spread over a thread pool. Results
    never depend on the number of jobs.
    """
    items = list(items)
    if jobs is None:
        jobs = default_jobs()

    if jobs <= 1 or len(items) <= 1:
        return [func(item) for item in items]

    logger.debug('Mapping %d items over %d threads', len(items), jobs)

    pool = multiprocessing.dummy.Pool(min(jobs, len(items)))
    try:
        pending = [pool.apply_async(func, (item,)) for item in items]
        pool.close()

        return [result.get() for result in pending]
    finally:
        pool.terminate()
        pool.join()
