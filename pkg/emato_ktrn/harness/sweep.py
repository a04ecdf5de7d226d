import logging
import sys
from dataclasses import dataclass, field, replace
from typing import List, Optional, Tuple

import numpy as np

from ..algos import ConfigurationError
from ..data_classes import AggregateSummary, AlgorithmId, RunConfig, RunResult
from ..helpers.misc import create_experiment_folder, write_csv
from ..netmetrics import METRIC_COLUMNS, aggregate, run_metrics
from .config import effective_algo_config, validate_run_config
from .experiment import Job, persist_experiment, run_jobs
from .run_io import run_id_for

KWONLY_SLOTS = {'kw_only': True, 'slots': True} if sys.version_info >= (3, 10) else {}

logger = logging.getLogger('emato_ktrn.sweep')


@dataclass(**KWONLY_SLOTS)
class SweepCell():
    K: int
    N: int
    results: List[RunResult] = field(default_factory=list)
    summary: Optional[AggregateSummary] = None

    @property
    def label(self) -> str:
        return f'K{self.K}_N{self.N}'

    def final_values(self) -> np.ndarray:
        """(repeats x tasks) final best values."""
        return np.array([r.final_best for r in self.results])


@dataclass(**KWONLY_SLOTS)
class SweepReport():
    cells: List[SweepCell]
    best_counts: np.ndarray = field(metadata={'description': 'tasks x cells'})
    worst_counts: np.ndarray = field(metadata={'description': 'tasks x cells'})

    @property
    def labels(self) -> List[str]:
        return [cell.label for cell in self.cells]

    def cell(self, K: int, N: int) -> SweepCell:
        return next(c for c in self.cells if c.K == K and c.N == N)

    def totals(self) -> Tuple[np.ndarray, np.ndarray]:
        return self.best_counts.sum(axis=0), self.worst_counts.sum(axis=0)

    def total_for(self, K: int, N: int) -> Tuple[int, int]:
        index = self.cells.index(self.cell(K, N))
        best, worst = self.totals()
        return int(best[index]), int(worst[index])

    def metrics_rows(self) -> List[List[str]]:
        return [[str(c.K), str(c.N)] + [c.summary[m].cell if c.summary else '~' for m in METRIC_COLUMNS]
                for c in self.cells]

    def count_rows(self) -> List[List[str]]:
        rows = [[f'task_{t}'] + [f'{b}-{w}' for b, w in zip(self.best_counts[t], self.worst_counts[t])]
                for t in range(self.best_counts.shape[0])]
        best, worst = self.totals()
        rows.append(['total'] + [f'{b}-{w}' for b, w in zip(best, worst)])
        return rows


def count_best_worst(final_values: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """`final_values` is (cells x repeats x tasks). For every repeat and task the cell with the lowest value
    scores a best and the one with the highest value a worst; ties go to the lower cell index.
    """
    n_cells, n_repeats, n_tasks = final_values.shape
    best = np.zeros((n_tasks, n_cells), dtype=np.int64)
    worst = np.zeros((n_tasks, n_cells), dtype=np.int64)
    for repeat in range(n_repeats):
        for task in range(n_tasks):
            values = final_values[:, repeat, task]
            best[task, int(np.argmin(values))] += 1
            worst[task, int(np.argmax(values))] += 1
    return best, worst


def sweep(base_cfg: RunConfig, K_values: List[int], N_values: List[int], output_folder: Optional[str] = None,
          workers: Optional[int] = None) -> SweepReport:
    """Runs every (K, N) combination of EMaTO-MKT with the same seeds and counts best and worst finals per task."""
    if not K_values or not N_values:
        raise ConfigurationError('sweep grids must not be empty')
    if base_cfg.algo.algorithm != AlgorithmId.EMATO_MKT:
        raise ConfigurationError(
            f'a K/N sweep runs {AlgorithmId.EMATO_MKT.value}, not {base_cfg.algo.algorithm.value}')

    cells = [SweepCell(K=K, N=N) for K in K_values for N in N_values]
    configs = [replace(base_cfg, algo=replace(base_cfg.algo, K=c.K, N=c.N)) for c in cells]
    problem = validate_run_config(configs[0])
    for cfg in configs[1:]:
        validate_run_config(cfg, problem)

    jobs: List[Job] = [(problem, effective_algo_config(cfg, repeat), run_id_for(repeat))
                       for cfg in configs for repeat in range(cfg.repeats)]
    results = run_jobs(jobs, workers, description='sweep')

    name = f'sweep_{problem.set_id.value}_s{base_cfg.algo.seed}'
    folder = output_folder or create_experiment_folder(base_cfg.output_dir, name)
    for index, (cell, cfg) in enumerate(zip(cells, configs)):
        cell.results = results[index * cfg.repeats:(index + 1) * cfg.repeats]
        records = persist_experiment(cfg, problem, cell.results, f'{folder}/{cell.label}')
        cell.summary = aggregate(records or [record for r in cell.results for record in run_metrics(r.graphs)])

    best, worst = count_best_worst(np.array([cell.final_values() for cell in cells]))
    report = SweepReport(cells=cells, best_counts=best, worst_counts=worst)
    write_csv(f'{folder}/sweep_metrics.csv', ['K', 'N'] + METRIC_COLUMNS, report.metrics_rows())
    write_csv(f'{folder}/sweep_counts.csv', ['task'] + report.labels, report.count_rows())
    logger.info('sweep over %s cells done, totals %s', len(cells),
                dict(zip(report.labels, [f'{b}-{w}' for b, w in zip(*report.totals())])))
    return report
