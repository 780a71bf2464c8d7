"""
Logging configuration for probcheck.

All logging goes through loguru and is written to stderr, never stdout, so
reports stay byte-identical between runs. Logging is controlled via the
verbose parameter and the PROBCHECK_LOG_LEVEL environment variable.
"""

import os
import sys

from loguru import logger


# Valid log levels for PROBCHECK_LOG_LEVEL environment variable
VALID_LOG_LEVELS = ["TRACE", "DEBUG", "INFO", "SUCCESS", "WARNING", "ERROR", "CRITICAL"]

# Default log level when verbose is enabled but PROBCHECK_LOG_LEVEL is not set
DEFAULT_LOG_LEVEL = "INFO"

LOG_LEVEL_ENV_VAR = "PROBCHECK_LOG_LEVEL"


def configure_logging(verbose: bool = False) -> None:
    """
    Configure logging for probcheck.

    When verbose is False, all logging is disabled. When verbose is True, a stderr
    handler is installed at the level given by:
    1. PROBCHECK_LOG_LEVEL environment variable (if set and valid)
    2. Default level (INFO) otherwise

    Parameters:
        verbose (bool): Whether to enable logging. Default: False.

    Example:
        ```python
        import os
        os.environ["PROBCHECK_LOG_LEVEL"] = "DEBUG"
        configure_logging(verbose=True)
        ```
    """
    logger.remove()

    if not verbose:
        logger.add(lambda _: None, level="CRITICAL")
        return

    logger.add(
        sys.stderr,
        format="<green>{time:YYYY-MM-DD HH:mm:ss.SSS}</green> | <level>{level: <8}</level> | <cyan>{name}</cyan>:<cyan>{function}</cyan>:<cyan>{line}</cyan> - <level>{message}</level>",
        level=_get_log_level_from_env(),
        colorize=True,
    )


def _get_log_level_from_env() -> str:
    """
    Get the log level from the PROBCHECK_LOG_LEVEL environment variable.

    Returns:
        str: The variable's value, upper-cased, if it names a valid level; otherwise DEFAULT_LOG_LEVEL.
    """
    env_level = os.environ.get(LOG_LEVEL_ENV_VAR, "").upper()
    if env_level in VALID_LOG_LEVELS:
        return env_level
    return DEFAULT_LOG_LEVEL
