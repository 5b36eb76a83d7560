from concurrent.futures import ThreadPoolExecutor

from dimwit.parameters import default_thread_count


class DelayedExecutor:
    """Collects function calls and executes them later, optionally on a thread pool. Results are returned in the
    order the calls were added, regardless of completion order."""

    def __init__(self, max_workers=None):
        self.funcs_and_args = []
        self.max_workers = max_workers

    def add_func(self, func, args):
        self.funcs_and_args.append((func, args))

    def execute(self):
        workers = self.max_workers if self.max_workers else default_thread_count()
        workers = min(workers, len(self.funcs_and_args))
        if workers <= 1:
            return [func(*args) for func, args in self.funcs_and_args]
        with ThreadPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(func, *args) for func, args in self.funcs_and_args]
            return [future.result() for future in futures]

    def reset(self):
        self.funcs_and_args = []
