"""Run a command body under a wall-clock budget."""

import threading
import time
from typing import Any, Callable, Optional

from ..infrastructure.logger import logger


class BudgetedThread(threading.Thread):
    """Daemon thread that records the result or exception of its target."""

    def __init__(
        self,
        target: Callable,
        args: tuple = (),
        kwargs: Optional[dict] = None,
        timeout: float = 300.0,
        name: str = "gghecke-command",
    ):
        """Initialize thread.

        Args:
            target: Function to run
            args: Positional arguments
            kwargs: Keyword arguments
            timeout: Budget in seconds
            name: Thread name
        """
        super().__init__(name=name, daemon=True)
        self.target = target
        self.args = args
        self.kwargs = kwargs or {}
        self.timeout = timeout
        self.result: Any = None
        self.exception: Optional[BaseException] = None
        self.elapsed: Optional[float] = None

    def run(self):
        started = time.perf_counter()
        try:
            self.result = self.target(*self.args, **self.kwargs)
        except BaseException as e:  # re-raised in the caller's thread
            self.exception = e
        finally:
            self.elapsed = time.perf_counter() - started

    def get_result(self) -> Any:
        """Wait for the target.

        Raises:
            TimeoutError: the budget ran out (the daemon thread is abandoned)
            Exception: whatever the target raised
        """
        self.join(timeout=self.timeout)
        if self.is_alive():
            raise TimeoutError(f"{self.name} exceeded its {self.timeout}s budget")
        if self.exception is not None:
            raise self.exception
        logger.debug(f"{self.name} finished in {self.elapsed:.2f}s")
        return self.result


def run_with_timeout(func: Callable, *args, timeout: float = 300.0, name: str = "gghecke-command", **kwargs) -> Any:
    """Run func(*args, **kwargs) in a worker thread with a time budget.

    Example:
        >>> report = run_with_timeout(verify_relations, params, timeout=60.0)
    """
    thread = BudgetedThread(target=func, args=args, kwargs=kwargs, timeout=timeout, name=name)
    thread.start()
    return thread.get_result()


__all__ = [
    "BudgetedThread",
    "run_with_timeout",
]
