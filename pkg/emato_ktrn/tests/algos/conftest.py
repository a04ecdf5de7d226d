import logging
import shutil

import pytest

from ...data_classes import ProblemSet
from ...globals import GLOBALS
from ...helpers import environment_reader
from ..test_helper import small_problem


@pytest.fixture()
def problem() -> ProblemSet:
    return small_problem()


@pytest.fixture(scope='session')
def full_scale() -> bool:
    """Statistical acceptance checks run at reduced scale unless EMATO_FULL_ACCEPTANCE=1."""
    return environment_reader.full_acceptance()

# ====================================== REDUNDANT FIXTURES IN ALL CONFTESTS ! ======================================


@pytest.fixture(autouse=True, scope='session')
def clear_loggers():
    """Remove handlers from all loggers"""
    # see https://github.com/pytest-dev/pytest/issues/5502
    yield

    loggers = [logging.getLogger()] + list(logging.Logger.manager.loggerDict.values())
    for logger in loggers:
        if not isinstance(logger, logging.Logger):
            continue
        handlers = getattr(logger, 'handlers', [])
        for handler in handlers:
            logger.removeHandler(handler)


@pytest.fixture(autouse=True, scope='function')
def output_folder(tmp_path):
    GLOBALS.output_folder = str(tmp_path / 'results')
    yield GLOBALS.output_folder
    shutil.rmtree(GLOBALS.output_folder, ignore_errors=True)
