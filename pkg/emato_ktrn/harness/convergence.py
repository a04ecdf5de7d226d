"""Mean-best-over-tasks convergence curves on a shared evaluation grid."""
import logging
import os
import sys
from dataclasses import dataclass, field
from typing import Dict, List, Optional

import matplotlib
import numpy as np

from ..bench import load_problem_set
from ..data_classes import AlgorithmId, RunResult
from ..helpers.misc import format_value, write_csv
from .exceptions import HarnessError
from .run_io import ExperimentIO

matplotlib.use('Agg')
import matplotlib.pyplot as plt  # noqa: E402 pylint: disable=wrong-import-position

KWONLY_SLOTS = {'kw_only': True, 'slots': True} if sys.version_info >= (3, 10) else {}

GRID_POINTS = 41


@dataclass(**KWONLY_SLOTS)
class ConvergenceCurve():
    algorithm: str
    evaluations: np.ndarray
    mean_best: np.ndarray
    per_run: np.ndarray = field(metadata={'description': 'repeats x checkpoints'})


def evaluation_grid(budget: int, points: int = GRID_POINTS) -> np.ndarray:
    return np.linspace(0.0, float(budget), points)


def mean_best_curve(result: RunResult) -> np.ndarray:
    """Mean over tasks of the best-so-far values, one entry per generation."""
    return result.traces.mean(axis=1)


def step_values(result: RunResult, checkpoints: np.ndarray) -> np.ndarray:
    """Value of the last generation that used at most `checkpoint` evaluations per task.
    Checkpoints before the first generation take the first generation's value.
    """
    indices = np.searchsorted(result.evaluations, checkpoints, side='right') - 1
    return mean_best_curve(result)[np.clip(indices, 0, result.generations - 1)]


def value_at_fraction(result: RunResult, budget: int, fraction: float) -> float:
    return float(step_values(result, np.array([fraction * budget]))[0])


def convergence_curve(name: str, results: List[RunResult], checkpoints: np.ndarray) -> ConvergenceCurve:
    per_run = np.array([step_values(r, checkpoints) for r in results])
    return ConvergenceCurve(algorithm=name, evaluations=checkpoints, mean_best=per_run.mean(axis=0), per_run=per_run)


def save_chart(curves: List[ConvergenceCurve], file_path: str, title: str = '') -> None:
    """Self-contained SVG line chart, byte-reproducible for identical curves."""
    with matplotlib.rc_context({'svg.hashsalt': 'emato-ktrn', 'svg.fonttype': 'none'}):
        fig, ax = plt.subplots(figsize=(7, 4.5))
        for curve in curves:
            line, = ax.plot(curve.evaluations, curve.mean_best, label=curve.algorithm)
            line.set_gid(f'curve-{curve.algorithm}')
        if all(np.all(c.mean_best > 0) for c in curves):
            ax.set_yscale('log')
        ax.set_xlabel('evaluations per task')
        ax.set_ylabel('mean best objective over tasks')
        if title:
            ax.set_title(title)
        ax.legend()
        fig.tight_layout()
        fig.savefig(file_path, format='svg', metadata={'Date': None})
        plt.close(fig)


def compare_convergence(results: Dict[str, List[RunResult]], budget: int, output_folder: Optional[str] = None,
                        points: int = GRID_POINTS) -> List[ConvergenceCurve]:
    """Curves of several algorithms on the same problem; written as convergence.csv and convergence.svg."""
    if not results or any(not runs for runs in results.values()):
        raise HarnessError('every compared algorithm needs at least one run')
    fingerprints = {r.problem_fingerprint for runs in results.values() for r in runs}
    if len(fingerprints) != 1:
        raise HarnessError(f'cannot compare runs of different problems: {sorted(fingerprints)}')

    checkpoints = evaluation_grid(budget, points)
    curves = [convergence_curve(name, runs, checkpoints) for name, runs in results.items()]
    if output_folder is not None:
        os.makedirs(output_folder, exist_ok=True)
        rows = ([c.algorithm, format_value(e), format_value(v)]
                for c in curves for e, v in zip(c.evaluations, c.mean_best))
        write_csv(f'{output_folder}/convergence.csv', ['algorithm', 'evaluations', 'mean_best'], rows)
        save_chart(curves, f'{output_folder}/convergence.svg', title=fingerprints.pop())
        logging.info('wrote convergence of %s to %s', list(results.keys()), output_folder)
    return curves


def load_results(experiment_folder: str) -> List[RunResult]:
    """Rebuilds the results of an experiment from its trace and counter files."""
    experiment_io = ExperimentIO(experiment_folder)
    config = experiment_io.load_config()
    fingerprint = load_problem_set(experiment_io.problem_path).fingerprint()
    results = []
    for repeat, run_io in enumerate(experiment_io.run_ios()):
        evaluations, events, traces = run_io.load_trace()
        results.append(RunResult(algorithm=AlgorithmId(config['algo']['algorithm']),
                                 seed=int(config['algo']['seed']) + repeat,
                                 traces=traces,
                                 evaluations=evaluations,
                                 events=events,
                                 eval_counts=np.array(run_io.load_counters(), dtype=np.int64),
                                 run_id=run_io.run_id,
                                 problem_fingerprint=fingerprint,
                                 trace_path=run_io.trace_path))
    return results
