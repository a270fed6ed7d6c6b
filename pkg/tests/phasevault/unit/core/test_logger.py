from __future__ import annotations

import logging
import shutil
from pathlib import Path
from typing import Generator, Union

import pytest

from phasevault.config.logger import LoggerConfig
from phasevault.core.logger import RichLogger


@pytest.fixture(scope="function")
def log_dir() -> Generator[str, None, None]:
    """
    Fixture to create and remove a test log folder for tests.

    Yields
    ------
    test_log_dir : str
        The path of the test log folder.
    """
    test_log_dir: str = "test_outputs"
    Path(test_log_dir).mkdir(parents=True, exist_ok=True)
    yield test_log_dir
    shutil.rmtree(test_log_dir)


@pytest.mark.parametrize(
    "module_name, propagate",
    [
        (None, False),
        ("phasevault.verification", True),
        ("phasevault.verification", False),
    ],
)
def test_logger_init(log_dir: str, module_name: Union[str, None], propagate: bool) -> None:
    logger_obj: RichLogger = RichLogger(
        log_file="verify.log",
        module_name=module_name,
        propagate=propagate,
        log_root_dir=log_dir,
    )

    expected_level = logging.getLevelName(logger_obj.rich_handler_config["level"])
    assert logger_obj.logger.level == expected_level
    assert logger_obj.logger.propagate == propagate
    assert logger_obj.logger.name == (module_name or "phasevault")

    assert logger_obj.session_log_dir is not None
    assert Path(logger_obj.session_log_dir).is_dir()
    assert logger_obj.log_file is not None
    assert (Path(logger_obj.session_log_dir) / logger_obj.log_file).exists()


def test_rebuilding_does_not_stack_handlers(log_dir: str) -> None:
    first = RichLogger(log_file="verify.log", log_root_dir=log_dir)
    second = RichLogger(log_file="verify.log", log_root_dir=log_dir)
    assert first.logger is second.logger
    assert len(second.logger.handlers) == 2


def test_log_file_and_root_go_together() -> None:
    with pytest.raises(ValueError):
        RichLogger(log_file="verify.log")


@pytest.mark.parametrize(
    "message",
    [
        "Field GF(3^3) built",
        "check composition_law passed",
        "Fiducial overlap below threshold",
    ],
)
def test_library_loggers_reach_the_session_file(log_dir: str, message: str) -> None:
    logger_obj: RichLogger = RichLogger(log_file="verify.log", propagate=False, log_root_dir=log_dir)

    logging.getLogger("phasevault.field.core").warning(message)

    assert logger_obj.session_log_dir is not None
    assert logger_obj.log_file is not None
    log_file_path: Path = Path(logger_obj.session_log_dir) / Path(logger_obj.log_file)
    with log_file_path.open("r") as log_file:
        assert message in log_file.read()


def test_logger_config_mirrors_rich_logger() -> None:
    config = LoggerConfig(rich_handler_config={"level": "debug"})
    assert config.rich_handler_config["level"] == "DEBUG"
    logger_obj = RichLogger(**config.model_dump())
    assert logger_obj.logger.level == logging.DEBUG
    with pytest.raises(ValueError):
        LoggerConfig(rich_handler_config={"level": "chatty"})


def test_logger_config_rejects_unpaired_log_file() -> None:
    with pytest.raises(ValueError, match="log_root_dir"):
        LoggerConfig(log_file="verify.log")
