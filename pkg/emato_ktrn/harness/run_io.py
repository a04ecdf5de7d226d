import json
import os
from typing import Dict, List, Tuple

import numpy as np

from ..bench import save_problem_set
from ..data_classes import AggregateSummary, GenerationGraph, MetricsRecord, ProblemSet, RunConfig, RunResult
from ..helpers.misc import format_value, read_csv, write_csv
from ..ktrn import load_ktrn, save_ktrn
from ..netmetrics import load_metrics, save_aggregate, save_metrics
from .config import config_to_dict
from .exceptions import HarnessError


def run_id_for(repeat: int) -> str:
    return f'run_{repeat:03d}'


class RunIO:
    """Files of one run: best-so-far trace, transfer network, its metrics and the evaluation counters."""

    def __init__(self, run_folder: str) -> None:
        self.run_folder = run_folder
        self.run_id = os.path.basename(run_folder.rstrip('/'))
        self.trace_path = f'{run_folder}/trace.csv'
        self.ktrn_path = f'{run_folder}/ktrn.jsonl'
        self.metrics_path = f'{run_folder}/metrics.csv'
        self.counters_path = f'{run_folder}/counters.json'

    # trace

    def save_trace(self, result: RunResult) -> None:
        n_tasks = result.traces.shape[1]
        header = ['generation', 'evaluations', 'events'] + [f'task_{i}' for i in range(n_tasks)]
        rows = ([g, format_value(result.evaluations[g]), int(result.events[g])] +
                [format_value(v) for v in result.traces[g]]
                for g in range(result.generations))
        write_csv(self.trace_path, header, rows)
        result.trace_path = self.trace_path

    def load_trace(self) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
        """Returns (evaluations, events, traces) as stored."""
        if not os.path.exists(self.trace_path):
            raise HarnessError(f'could not find trace file {self.trace_path}')
        rows = read_csv(self.trace_path)
        task_columns = [c for c in rows[0].keys() if c.startswith('task_')] if rows else []
        evaluations = np.array([float(row['evaluations']) for row in rows])
        events = np.array([int(row['events']) for row in rows], dtype=np.int64)
        traces = np.array([[float(row[c]) for c in task_columns] for row in rows])
        return evaluations, events, traces

    # transfer network

    def save_ktrn(self, graphs: List[GenerationGraph], result: RunResult) -> None:
        save_ktrn(graphs, self.ktrn_path)
        result.ktrn_path = self.ktrn_path

    def load_ktrn(self) -> List[GenerationGraph]:
        return load_ktrn(self.ktrn_path)

    # metrics

    def save_metrics(self, graphs: List[GenerationGraph], records: List[MetricsRecord], result: RunResult) -> None:
        save_metrics([(self.run_id, g.generation, r) for g, r in zip(graphs, records)], self.metrics_path)
        result.metrics_path = self.metrics_path

    def load_metrics(self) -> List[MetricsRecord]:
        return [record for _, _, record in load_metrics(self.metrics_path)]

    # counters

    def save_counters(self, result: RunResult) -> None:
        with open(self.counters_path, 'w') as f:
            json.dump({'eval_counts': [int(c) for c in result.eval_counts]}, f)

    def load_counters(self) -> List[int]:
        with open(self.counters_path, 'r') as f:
            return json.load(f)['eval_counts']

    def exists(self) -> bool:
        return os.path.exists(self.trace_path)


class ExperimentIO:
    """Files shared by all repeats of one experiment."""

    def __init__(self, experiment_folder: str) -> None:
        self.experiment_folder = experiment_folder
        self.config_path = f'{experiment_folder}/config.json'
        self.problem_path = f'{experiment_folder}/problem.json'
        self.summary_path = f'{experiment_folder}/summary.csv'
        self.aggregate_path = f'{experiment_folder}/metrics_aggregate.csv'

    def run_io(self, repeat: int) -> RunIO:
        return RunIO(f'{self.experiment_folder}/{run_id_for(repeat)}')

    def run_ios(self) -> List[RunIO]:
        if not os.path.isdir(self.experiment_folder):
            raise HarnessError(f'experiment folder {self.experiment_folder} does not exist')
        return [RunIO(f'{self.experiment_folder}/{entry}') for entry in sorted(os.listdir(self.experiment_folder))
                if entry.startswith('run_')]

    def save_config(self, cfg: RunConfig) -> None:
        with open(self.config_path, 'w') as f:
            json.dump(config_to_dict(cfg), f, indent=2, sort_keys=True)

    def load_config(self) -> Dict:
        with open(self.config_path, 'r') as f:
            return json.load(f)

    def save_problem(self, problem: ProblemSet) -> None:
        save_problem_set(problem, self.problem_path)

    def save_summary(self, results: List[RunResult]) -> None:
        n_tasks = results[0].traces.shape[1]
        header = ['run_id', 'seed', 'mean_best', 'max_evals_used'] + [f'task_{i}' for i in range(n_tasks)]
        rows = ([r.run_id, r.seed, format_value(r.mean_best), int(r.eval_counts.max())] +
                [format_value(v) for v in r.final_best] for r in results)
        write_csv(self.summary_path, header, rows)

    def load_summary(self) -> List[Dict[str, str]]:
        if not os.path.exists(self.summary_path):
            raise HarnessError(f'could not find summary file {self.summary_path}')
        return read_csv(self.summary_path)

    def save_aggregate(self, summary: AggregateSummary) -> None:
        save_aggregate(summary, self.aggregate_path)
