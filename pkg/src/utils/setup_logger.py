from loguru import logger
from pathlib import Path
from rich.console import Console
from rich.logging import RichHandler
from typing import Optional, Union


def setup_logger(
    log_level: str = "INFO",
    log_file: Optional[Union[Path, str]] = None,
    file_log_level: Optional[str] = None,
) -> None:
    """
    Setup logger with Rich console output on stderr and optional file logging.

    Args:
        log_level: Console logging level
        log_file: Path to a log file. If None, file logging is disabled.
        file_log_level: File logging level. If None, uses same level as console.
    """

    logger.remove()

    # stdout carries edge lists and colorings
    logger.add(
        RichHandler(
            console=Console(stderr=True),
            rich_tracebacks=True,
            markup=True,
            show_time=True,
            show_level=True,
            show_path=True,
        ),
        level=log_level,
        format="{message}",
    )

    if log_file:
        log_file = Path(log_file).resolve()
        log_file.parent.mkdir(parents=True, exist_ok=True)

        logger.add(
            log_file,
            level=file_log_level or log_level,
            format="{time:YYYY-MM-DD HH:mm:ss} | {level} | {function}:{line} - {message}",
            rotation="100 MB",
            retention="30 days",
            encoding="utf-8",
            backtrace=True,
            diagnose=True,
        )
