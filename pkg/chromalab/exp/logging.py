"""One logging policy for the ``chroma`` CLI and the experiments.

Every logger reaches the console at INFO. DEBUG records pass only for loggers under
``chromalab`` and only in verbose runs, so ``-v`` shows colorer branches and oracle
search sizes without flooding the output with matplotlib internals.
"""

from __future__ import annotations

import logging
import sys
from collections.abc import Callable
from dataclasses import dataclass
from pathlib import Path
from typing import Literal, TextIO, override

# ------------------------------------------------------------------------------
LOG_FORMAT = "%(asctime)s [%(levelname)s] %(name)s: %(message)s"
DATE_FORMAT = "%Y-%m-%d %H:%M:%S"
QUIET_LIBRARIES: tuple[str, ...] = ("matplotlib", "PIL")


# ------------------------------------------------------------------------------
@dataclass(frozen=True, slots=True)
class LoggingConfig:
    """Configuration for chromalab logging.

    Args:
        package_prefix: Logger name prefix whose DEBUG records are kept when verbose.
        verbose: Keep DEBUG records from ``package_prefix``.
        log_file: Optional UTF-8 log file, overwritten each run, same policy as the console.
        stream: Console stream. ``chroma`` uses stderr so stdout stays parseable.
    """

    package_prefix: str = "chromalab"
    verbose: bool = False
    log_file: Path | None = None
    stream: Literal["stdout", "stderr"] = "stdout"


# ------------------------------------------------------------------------------
class _OwnDebugFilter(logging.Filter):
    """Pass DEBUG records from loggers under one prefix."""

    def __init__(self, prefix: str) -> None:
        super().__init__()
        self._prefix = prefix

    @override
    def filter(self, record: logging.LogRecord) -> bool:
        return record.levelno == logging.DEBUG and record.name.startswith(self._prefix)


# ------------------------------------------------------------------------------
def _install(
    root: logging.Logger,
    make_handler: Callable[[], logging.Handler],
    cfg: LoggingConfig,
    formatter: logging.Formatter,
) -> None:
    """Attach an INFO+ handler and, when verbose, a DEBUG twin restricted to our loggers."""
    levels = (logging.INFO, logging.DEBUG) if cfg.verbose else (logging.INFO,)
    for level in levels:
        handler = make_handler()
        handler.setLevel(level)
        handler.setFormatter(formatter)
        if level == logging.DEBUG:
            handler.addFilter(_OwnDebugFilter(cfg.package_prefix))
        root.addHandler(handler)


# ------------------------------------------------------------------------------
def setup_logging(*, config: LoggingConfig | None = None) -> None:
    """Replace the root handlers with the chromalab policy.

    Args:
        config: Logging configuration. If omitted, defaults are used.
    """
    cfg = config or LoggingConfig()
    root = logging.getLogger()
    root.handlers.clear()
    root.setLevel(logging.DEBUG)
    formatter = logging.Formatter(fmt=LOG_FORMAT, datefmt=DATE_FORMAT)

    console: TextIO = sys.stderr if cfg.stream == "stderr" else sys.stdout
    _install(root, lambda: logging.StreamHandler(console), cfg, formatter)

    if cfg.log_file is not None:
        log_file = cfg.log_file
        log_file.parent.mkdir(parents=True, exist_ok=True)
        log_file.write_text("", encoding="utf-8")
        _install(
            root,
            lambda: logging.FileHandler(log_file, mode="a", encoding="utf-8"),
            cfg,
            formatter,
        )

    for name in QUIET_LIBRARIES:
        logging.getLogger(name).setLevel(logging.WARNING)


# ------------------------------------------------------------------------------
def get_logger(name: str) -> logging.Logger:
    """Logger for a chromalab module; pass ``__name__``."""
    return logging.getLogger(name)
