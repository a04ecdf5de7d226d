import logging
import time
from abc import ABC, abstractmethod
from typing import List, Optional

import numpy as np

from ..data_classes import AlgoConfig, AlgorithmId, ProblemSet, RunResult
from ..eacore import TaskEvaluator
from ..ktrn import KtrnRecorder
from .exceptions import ConfigurationError

logger = logging.getLogger('emato_ktrn.algorithm_logic')

PROBABILITY_FIELDS = ['rmp', 'CR', 'elite_fraction', 'tp0', 'tp_min', 'tp_max', 'transfer_cr']


def validate_algo_config(cfg: AlgoConfig, n_tasks: int, expected: Optional[AlgorithmId] = None) -> None:
    """Raises ConfigurationError for every configuration a run could not honour."""
    if expected is not None and cfg.algorithm != expected:
        raise ConfigurationError(f'configuration is for {cfg.algorithm.value}, runner expects {expected.value}')
    for name in PROBABILITY_FIELDS:
        value = getattr(cfg, name)
        if not 0.0 <= value <= 1.0:
            raise ConfigurationError(f'{name} must be in [0, 1], got {value}')
    if cfg.CR == 0 or cfg.elite_fraction == 0:
        raise ConfigurationError('CR and elite_fraction must be positive')
    if not cfg.tp_min <= cfg.tp0 <= cfg.tp_max:
        raise ConfigurationError(f'tp0 must lie in [{cfg.tp_min}, {cfg.tp_max}], got {cfg.tp0}')
    if not 0.0 < cfg.shrink <= 1.0 or cfg.expand < 1.0:
        raise ConfigurationError(f'need 0 < shrink <= 1 <= expand, got {cfg.shrink} and {cfg.expand}')
    if cfg.pop_size_per_task < 4:
        raise ConfigurationError(f'pop_size_per_task must be at least 4, got {cfg.pop_size_per_task}')
    if cfg.F < 0 or cfg.eta_c <= 0 or cfg.eta_m <= 0 or cfg.kld_scale < 0:
        raise ConfigurationError('F and kld_scale must not be negative, eta_c and eta_m must be positive')
    if cfg.transfer_interval < 1 or cfg.archive_capacity < 1 or cfg.mfea_population_cap < 2:
        raise ConfigurationError('transfer_interval and archive_capacity must be positive, mfea cap at least 2')
    if n_tasks < 1:
        raise ConfigurationError('a problem set needs at least one task')

    needed = 2 * cfg.pop_size_per_task
    if cfg.algorithm == AlgorithmId.EMATO_MKT:
        if not 1 <= cfg.K <= n_tasks:
            raise ConfigurationError(f'K must be in [1, {n_tasks}], got {cfg.K}')
        if not 1 <= cfg.N <= max(n_tasks - 1, 1):
            raise ConfigurationError(f'N must be in [1, {n_tasks - 1}], got {cfg.N}')
        needed += cfg.N
    if cfg.max_evals_per_task < needed:
        raise ConfigurationError(
            f'max_evals_per_task={cfg.max_evals_per_task} does not pay for one generation (needs {needed})')


class AlgorithmLogic(ABC):
    """Shared run loop of every algorithm: seeding, budget, transfer recording and convergence traces.
    Subclasses implement `initialize`, `can_continue` and `evolve`.
    """
    algorithm: AlgorithmId

    def __init__(self, problem: ProblemSet, cfg: AlgoConfig, recorder: Optional[KtrnRecorder] = None) -> None:
        validate_algo_config(cfg, problem.n_tasks, self.algorithm)
        if recorder is not None and (recorder.n != problem.n_tasks or recorder.current_generation != 0):
            raise ConfigurationError('recorder must be fresh and sized to the problem set')
        self.problem = problem
        self.cfg = cfg
        self.recorder = recorder if recorder is not None else KtrnRecorder(problem.n_tasks)

        streams = np.random.SeedSequence(cfg.seed).spawn(problem.n_tasks + 1)
        self.rng = np.random.default_rng(streams[0])
        self.task_rngs = [np.random.default_rng(s) for s in streams[1:]]

        self.generation = 0
        self._evaluator: Optional[TaskEvaluator] = None
        self._traces: List[np.ndarray] = []
        self._evaluations: List[float] = []
        self._events: List[int] = []

    @property
    def evaluator(self) -> TaskEvaluator:
        assert self._evaluator is not None, 'evaluator must be created, call `run` first'
        return self._evaluator

    @property
    def n_tasks(self) -> int:
        return self.problem.n_tasks

    @property
    def pop_size(self) -> int:
        return self.cfg.pop_size_per_task

    def is_transfer_generation(self, generation: int) -> bool:
        return self.n_tasks > 1 and generation % self.cfg.transfer_interval == 0

    def create_evaluator(self) -> TaskEvaluator:
        return TaskEvaluator(self.problem, self.cfg.max_evals_per_task)

    def run(self) -> RunResult:
        start = time.perf_counter()
        self._evaluator = self.create_evaluator()
        self.initialize()
        while self.can_continue():
            self.evolve(self.generation)
            self._close_generation()
        assert self._traces, 'configuration validation guarantees at least one generation'

        wall_clock = time.perf_counter() - start
        logger.info('%s seed %s finished %s generations in %.2fs, mean best %.4g',
                    self.algorithm.value, self.cfg.seed, self.generation, wall_clock,
                    float(np.mean(self.evaluator.best)))
        return RunResult(algorithm=self.algorithm,
                         seed=self.cfg.seed,
                         traces=np.array(self._traces),
                         evaluations=np.array(self._evaluations),
                         events=np.array(self._events, dtype=np.int64),
                         eval_counts=self.evaluator.counts.copy(),
                         graphs=list(self.recorder.graphs),
                         wall_clock_s=wall_clock,
                         problem_fingerprint=self.problem.fingerprint())

    def _close_generation(self) -> None:
        graph = self.recorder.finalize(self.generation)
        self._traces.append(self.evaluator.best.copy())
        self._evaluations.append(float(self.evaluator.counts.mean()))
        self._events.append(graph.transfer_count)
        self.generation += 1

    @abstractmethod
    def initialize(self) -> None:
        """Creates and evaluates the initial population(s). Not a generation: nothing is recorded."""

    @abstractmethod
    def can_continue(self) -> bool:
        """True if the next generation fits into the evaluation budget."""

    @abstractmethod
    def evolve(self, generation: int) -> None:
        """Runs one generation and records its transfer events on `self.recorder`."""
