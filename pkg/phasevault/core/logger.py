"""Console and session-file logging for the command-line front-end.

Library modules only call ``logging.getLogger(__name__)``; handlers are
attached here, once, by whoever owns the process (the CLI or a notebook).
"""

from __future__ import annotations

import logging
import os
from dataclasses import dataclass, field
from datetime import datetime
from pathlib import Path
from typing import Any, Dict

from rich.console import Console
from rich.logging import RichHandler
from rich.theme import Theme

from phasevault._types._sentinel import MISSING

FILE_LOG_FORMAT = "%(asctime)s [%(levelname)s] %(pathname)s %(funcName)s L%(lineno)d: %(message)s"
FILE_DATE_FORMAT = "%Y-%m-%d %H:%M:%S"

DEFAULT_CONSOLE = Console(
    stderr=True,
    theme=Theme(
        {
            "logging.level.debug": "magenta",
            "logging.level.info": "green",
            "logging.level.warning": "yellow",
            "logging.level.error": "red",
            "logging.level.critical": "bold red",
        }
    ),
)


class RelativePathFormatter(logging.Formatter):
    """Prints ``pathname`` relative to the working directory."""

    def format(self, record: logging.LogRecord) -> str:
        record.pathname = os.path.relpath(record.pathname)
        return super().format(record)


def _default_rich_handler_config() -> Dict[str, Any]:
    return {
        "level": "INFO",
        "console": MISSING,
        "show_level": True,
        "show_path": True,
        "show_time": True,
        "rich_tracebacks": True,
        "markup": True,
        "log_time_format": "[%Y-%m-%d %H:%M:%S]",
    }


@dataclass
class RichLogger:
    """Builds a logger with a rich console handler and an optional session file.

    When ``log_root_dir`` and ``log_file`` are both given, every construction
    opens a fresh timestamped session directory::

        <log_root_dir>/
        └── 2024-05-01T09:12:44/      # session_log_dir
            └── verify.log

    Parameters
    ----------
    log_file : str | None
        File name inside the session directory. Requires ``log_root_dir``.
    module_name : str | None
        Name passed to :func:`logging.getLogger`; defaults to ``"phasevault"``
        so that every ``phasevault.*`` module logger inherits the handlers.
    propagate : bool
        Forwarded to ``logger.propagate``.
    log_root_dir : str | None
        Parent of the session directories. Requires ``log_file``.
    rich_handler_config : Dict[str, Any]
        Keyword arguments for :class:`rich.logging.RichHandler`. A ``MISSING``
        console is replaced by :data:`DEFAULT_CONSOLE`.
    """

    log_file: str | None = None
    module_name: str | None = None
    propagate: bool = False
    log_root_dir: str | None = None
    rich_handler_config: Dict[str, Any] = field(default_factory=_default_rich_handler_config)

    session_log_dir: Path | None = field(default=None, init=False)
    logger: logging.Logger = field(init=False)

    def __post_init__(self) -> None:
        if (self.log_file is None) != (self.log_root_dir is None):
            raise ValueError("Both log_file and log_root_dir must be provided, or neither should be provided.")

        config = {**_default_rich_handler_config(), **self.rich_handler_config}
        if config.get("console") is None or config["console"] is MISSING:
            config["console"] = DEFAULT_CONSOLE
        self.rich_handler_config = config
        self.logger = self._init_logger()

    def _create_session_dir(self) -> Path:
        assert self.log_root_dir is not None
        session_log_dir = Path(self.log_root_dir) / datetime.now().strftime("%Y-%m-%dT%H:%M:%S")
        try:
            session_log_dir.mkdir(parents=True, exist_ok=True)
        except OSError as err:
            raise OSError(f"Failed to create log directory {session_log_dir}: {err}") from err
        return session_log_dir

    def _create_file_handler(self) -> logging.FileHandler | None:
        if self.log_root_dir is None or self.log_file is None:
            return None
        self.session_log_dir = self._create_session_dir()
        file_handler = logging.FileHandler(filename=str(self.session_log_dir / self.log_file), encoding="utf-8")
        file_handler.setFormatter(RelativePathFormatter(FILE_LOG_FORMAT, FILE_DATE_FORMAT))
        return file_handler

    def _init_logger(self) -> logging.Logger:
        logger = logging.getLogger(self.module_name or "phasevault")
        logger.setLevel(self.rich_handler_config["level"])

        # rebuilding a logger of the same name must not stack handlers
        for handler in list(logger.handlers):
            logger.removeHandler(handler)
            handler.close()

        logger.addHandler(RichHandler(**self.rich_handler_config))
        file_handler = self._create_file_handler()
        if file_handler is not None:
            logger.addHandler(file_handler)

        logger.propagate = self.propagate
        return logger
