import json
import logging
import os
from dataclasses import asdict, replace
from enum import Enum
from typing import Any, Dict, Optional

from dacite import Config, from_dict

from ..algos import ConfigurationError, validate_algo_config
from ..bench import BenchmarkError, generate_problem_set, load_problem_set
from ..data_classes import AlgoConfig, AlgorithmId, ProblemSet, ProblemSetId, ProblemSpec, RunConfig

DACITE_CONFIG = Config(cast=[Enum, tuple], strict=True)


def run_config_from_dict(data: Dict[str, Any]) -> RunConfig:
    return from_dict(data_class=RunConfig, data=data, config=DACITE_CONFIG)


def load_run_config(file_path: str) -> RunConfig:
    if not os.path.exists(file_path):
        raise ConfigurationError(f'could not find config file {file_path}')
    with open(file_path, 'r') as f:
        try:
            data = json.load(f)
        except json.JSONDecodeError as exc:
            raise ConfigurationError(f"config file '{file_path}' is not valid JSON") from exc
    return run_config_from_dict(data)


def config_to_dict(cfg: RunConfig) -> Dict[str, Any]:
    return json.loads(json.dumps(asdict(cfg)))


def default_run_config(algorithm: AlgorithmId = AlgorithmId.EMATO_MKT, seed: int = 0) -> RunConfig:
    return RunConfig(problem=ProblemSpec(), algo=AlgoConfig(algorithm=algorithm, seed=seed))


def apply_overrides(cfg: RunConfig, *,
                    problem: Optional[str] = None,
                    algo: Optional[str] = None,
                    seed: Optional[int] = None,
                    repeats: Optional[int] = None,
                    evals: Optional[int] = None,
                    out: Optional[str] = None,
                    k: Optional[int] = None,
                    n: Optional[int] = None,
                    rmp: Optional[float] = None,
                    dim: Optional[int] = None,
                    tasks: Optional[int] = None) -> RunConfig:
    """Returns a copy of `cfg` with every given command line value applied.
    `problem` is either a problem set id (P1..P10) or the path of a serialized problem set.
    """
    problem_spec = cfg.problem
    if problem is not None:
        if problem.endswith('.json'):
            problem_spec = replace(problem_spec, path=problem)
        else:
            problem_spec = replace(problem_spec, set_id=problem.upper(), path=None)
    if dim is not None:
        problem_spec = replace(problem_spec, dim=dim)
    if tasks is not None:
        problem_spec = replace(problem_spec, n_tasks=tasks)

    algo_cfg = cfg.algo
    if algo is not None:
        try:
            algo_cfg = replace(algo_cfg, algorithm=AlgorithmId(algo.upper()))
        except ValueError as exc:
            raise ConfigurationError(f'unknown algorithm {algo}') from exc
    algo_values = {'seed': seed, 'K': k, 'N': n, 'rmp': rmp}
    algo_cfg = replace(algo_cfg, **{key: value for key, value in algo_values.items() if value is not None})

    run_values = {'repeats': repeats, 'max_evals_per_task': evals, 'output_dir': out}
    return replace(cfg, problem=problem_spec, algo=algo_cfg,
                   **{key: value for key, value in run_values.items() if value is not None})


def effective_algo_config(cfg: RunConfig, repeat: int = 0) -> AlgoConfig:
    """Algorithm configuration of one repeat: the run budget applies and seeds count up from the master seed."""
    return replace(cfg.algo, max_evals_per_task=cfg.max_evals_per_task, seed=cfg.algo.seed + repeat)


def load_problem(spec: ProblemSpec) -> ProblemSet:
    if spec.path is not None:
        return load_problem_set(spec.path)
    return generate_problem_set(spec.set_id, spec.dim, spec.seed, spec.n_tasks)


def validate_run_config(cfg: RunConfig, problem: Optional[ProblemSet] = None) -> ProblemSet:
    """Checks the configuration before any compute and returns the problem set it refers to."""
    if cfg.repeats < 1:
        raise ConfigurationError(f'repeats must be at least 1, got {cfg.repeats}')
    if cfg.problem.path is not None:
        if not os.path.exists(cfg.problem.path):
            raise ConfigurationError(f'problem file {cfg.problem.path} does not exist')
    else:
        if cfg.problem.set_id not in [p.value for p in ProblemSetId]:
            raise ConfigurationError(f'unknown problem set {cfg.problem.set_id}')
        if cfg.problem.dim < 1 or cfg.problem.n_tasks < 1:
            raise ConfigurationError('problem dim and n_tasks must be positive')
    if problem is None:
        try:
            problem = load_problem(cfg.problem)
        except BenchmarkError as exc:
            raise ConfigurationError(str(exc)) from exc
    validate_algo_config(effective_algo_config(cfg), problem.n_tasks)
    logging.debug('configuration valid for %s on %s', cfg.algo.algorithm.value, problem.fingerprint())
    return problem
