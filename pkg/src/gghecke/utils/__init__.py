from .threading_utils import BudgetedThread, run_with_timeout

__all__ = ["BudgetedThread", "run_with_timeout"]
