import json
import logging
import os

from ..data_classes import ProblemSet
from .exceptions import BenchmarkError


def problem_to_json(problem: ProblemSet) -> str:
    return json.dumps(problem.to_dict())


def save_problem_set(problem: ProblemSet, file_path: str) -> None:
    folder = os.path.dirname(file_path)
    if folder:
        os.makedirs(folder, exist_ok=True)
    with open(file_path, 'w') as f:
        f.write(problem_to_json(problem))
    logging.info('wrote problem set %s to %s', problem.fingerprint(), file_path)


def load_problem_set(file_path: str) -> ProblemSet:
    if not os.path.exists(file_path):
        raise BenchmarkError(f'could not find problem set file {file_path}')
    with open(file_path, 'r') as f:
        try:
            content = json.load(f)
        except Exception as exc:
            raise BenchmarkError(f"could not read problem set from file '{file_path}'") from exc
    try:
        return ProblemSet.from_dict(content)
    except Exception as exc:
        raise BenchmarkError(f"could not parse problem set from file '{file_path}'. \n {str(exc)}") from exc
