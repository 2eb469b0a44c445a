"""Strategies for evaluating independent work items.

Every runner returns results in input order, so anything reduced from them
is identical whichever runner produced it.

    runner = ThreadedRunner(4)
    values = runner.map(evaluate, points)
"""
from concurrent.futures import ThreadPoolExecutor

__all__ = ['SynchronousRunner', 'ThreadedRunner', 'get_runner']


class SynchronousRunner(object):
    threads = 1

    def map(self, fn, items):
        return [fn(item) for item in items]


class ThreadedRunner(object):
    """Fans work out over a thread pool; numpy and scipy release the GIL in
    their heavy kernels."""

    def __init__(self, threads):
        assert threads >= 1, 'A threaded runner needs at least one thread.'
        self.threads = threads

    def map(self, fn, items):
        items = list(items)
        if self.threads == 1 or len(items) < 2:
            return [fn(item) for item in items]
        with ThreadPoolExecutor(max_workers=self.threads) as pool:
            return list(pool.map(fn, items))


def get_runner(threads=None):
    if not threads or threads == 1:
        return SynchronousRunner()
    return ThreadedRunner(threads)
