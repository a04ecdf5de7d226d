import logging
import shutil

import pytest

from ...data_classes import AlgorithmId, ProblemSpec, RunConfig
from ...globals import GLOBALS
from ...helpers import environment_reader
from ..test_helper import small_config


@pytest.fixture()
def run_config(output_folder) -> RunConfig:
    return RunConfig(problem=ProblemSpec(set_id='P4', dim=5, seed=1, n_tasks=6),
                     algo=small_config(AlgorithmId.EMATO_MKT),
                     repeats=2,
                     max_evals_per_task=400,
                     output_dir=output_folder)


@pytest.fixture(autouse=True)
def single_worker():
    workers = GLOBALS.workers
    GLOBALS.workers = 1
    yield
    GLOBALS.workers = workers


@pytest.fixture(scope='session')
def full_scale() -> bool:
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
