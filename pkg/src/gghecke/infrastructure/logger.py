"""Logging configuration for gghecke.

Loguru-based logging. Reports are written to stdout by the CLI, so every
sink configured here writes to stderr or to files.
"""

import re
import sys
from pathlib import Path
from typing import Optional

from loguru import logger as loguru_logger

from ..constants import LOG_EXPRESSION_MAX_CHARS

# Remove default handler
loguru_logger.remove()

# Global logger instance
logger = loguru_logger

# A run of polynomial text: terms, exponents, parentheses and operators
_EXPRESSION_RUN = re.compile(r"[-+*/^()\w ]{%d,}" % LOG_EXPRESSION_MAX_CHARS)


def setup_logger(
    level: str = "WARNING",
    log_dir: Optional[Path] = None,
    retention_days: int = 7,
    max_file_size_mb: int = 10,
) -> None:
    """Configure loguru sinks.

    Args:
        level: Logging level (DEBUG, INFO, WARNING, ERROR)
        log_dir: Directory for rotating log files; console only when None
        retention_days: How many days to keep old logs
        max_file_size_mb: Max size of each log file before rotation
    """
    logger.remove()

    # Console handler (colored, human-readable)
    logger.add(
        sys.stderr,
        format=(
            "<green>{time:HH:mm:ss}</green> | "
            "<level>{level: <8}</level> | "
            "<cyan>{name}</cyan>:<cyan>{function}</cyan> - "
            "<level>{message}</level>"
        ),
        level=level,
        colorize=True,
        backtrace=False,
        diagnose=False,
        filter=abbreviate_log_record,
    )

    if log_dir is not None:
        log_dir.mkdir(parents=True, exist_ok=True)
        log_file = log_dir / "gghecke_{time:YYYY-MM-DD}.log"
        logger.add(
            log_file,
            rotation=f"{max_file_size_mb} MB",
            retention=f"{retention_days} days",
            compression="zip",
            level=level,
            format=(
                "{time:YYYY-MM-DD HH:mm:ss.SSS} | "
                "{level: <8} | "
                "{name}:{function}:{line} - "
                "{message}"
            ),
            enqueue=True,  # Thread-safe
            backtrace=True,
            diagnose=False,
            filter=abbreviate_log_record,
        )

    logger.info(
        f"Logger initialized: level={level}, log_dir={log_dir}, "
        f"retention={retention_days}d, max_size={max_file_size_mb}MB"
    )


def abbreviate_log_record(record: dict) -> bool:
    """Shorten oversized algebra expressions inside a log message.

    Args:
        record: Loguru log record dictionary

    Returns:
        True (records are never dropped)
    """
    message = record["message"]
    if len(message) > LOG_EXPRESSION_MAX_CHARS:
        keep = LOG_EXPRESSION_MAX_CHARS // 3
        message = _EXPRESSION_RUN.sub(
            lambda m: f"{m.group(0)[:keep]} ...[{len(m.group(0))} chars]... {m.group(0)[-keep:]}",
            message,
        )
        record["message"] = message
    return True


# Convenience functions for common logging patterns

def log_relation_event(relation: str, passed: bool, **kwargs):
    """Log the outcome of one relation check.

    Args:
        relation: Relation name, e.g. "quadratic_T2"
        passed: Whether the identity held exactly
        **kwargs: Additional context
    """
    if passed:
        logger.debug(f"Relation {relation}: pass", **kwargs)
    else:
        logger.warning(f"Relation {relation}: FAIL", **kwargs)


def log_solver_event(event: str, **kwargs):
    """Log a solver branch or shape event.

    Args:
        event: Event description
        **kwargs: Additional context
    """
    logger.debug(f"Solver event: {event}", **kwargs)


def log_error_with_context(error: Exception, context: str, **kwargs):
    """Log error with additional context.

    Args:
        error: Exception instance
        context: Context description
        **kwargs: Additional context
    """
    logger.exception(
        f"Error in {context}: {type(error).__name__}: {str(error)}",
        **kwargs
    )


__all__ = [
    "logger",
    "setup_logger",
    "abbreviate_log_record",
    "log_relation_event",
    "log_solver_event",
    "log_error_with_context",
]
