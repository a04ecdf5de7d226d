import logging
from typing import Optional

import numpy as np

from ..bench import evaluate_task
from ..data_classes import ProblemSet
from .encoding import decode
from .exceptions import BudgetExhaustedError

logger = logging.getLogger('emato_ktrn.evaluator')


class TaskEvaluator:
    def __init__(self, problem: ProblemSet, max_evals_per_task: int, hard_cap: Optional[int] = None) -> None:
        """Evaluates genomes of the unified space on the tasks of a problem set and counts every objective call.
        `hard_cap` is the number of calls per task that must never be exceeded (default: max_evals_per_task).
        """
        self.problem = problem
        self.max_evals_per_task = max_evals_per_task
        self.hard_cap = hard_cap if hard_cap is not None else max_evals_per_task
        self.counts = np.zeros(problem.n_tasks, dtype=np.int64)
        self.best = np.full(problem.n_tasks, np.inf)

    @property
    def n_tasks(self) -> int:
        return self.problem.n_tasks

    @property
    def genome_length(self) -> int:
        return self.problem.max_dim

    def remaining(self, task_id: int) -> int:
        return int(self.max_evals_per_task - self.counts[task_id])

    def can_afford(self, cost_per_task: int) -> bool:
        """True if every task can still pay `cost_per_task` evaluations within its budget."""
        return bool(np.all(self.counts + cost_per_task <= self.max_evals_per_task))

    def evaluate(self, task_id: int, genomes: np.ndarray) -> np.ndarray:
        genomes = np.atleast_2d(genomes)
        if self.counts[task_id] + genomes.shape[0] > self.hard_cap:
            raise BudgetExhaustedError(
                f'task {task_id} would use {self.counts[task_id] + genomes.shape[0]} evaluations (cap {self.hard_cap})')
        task = self.problem.tasks[task_id]
        values = np.atleast_1d(np.asarray(evaluate_task(task, decode(genomes, task)), dtype=np.float64))
        self.counts[task_id] += genomes.shape[0]
        self.best[task_id] = min(self.best[task_id], float(values.min()))
        return values

    def evaluate_one(self, task_id: int, genome: np.ndarray) -> float:
        return float(self.evaluate(task_id, genome[None, :])[0])
