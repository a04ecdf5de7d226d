import logging
import os
import time
from concurrent.futures import ProcessPoolExecutor, as_completed
from typing import List, Optional, Tuple

from tqdm import tqdm

from ..algos import run_algorithm
from ..data_classes import AlgoConfig, MetricsRecord, ProblemSet, RunConfig, RunResult
from ..globals import GLOBALS
from ..helpers import environment_reader
from ..helpers.misc import create_experiment_folder, delete_all_run_folders
from ..netmetrics import aggregate, run_metrics
from .config import effective_algo_config, validate_run_config
from .run_io import ExperimentIO, RunIO, run_id_for

logger = logging.getLogger('emato_ktrn.experiment')

# (problem, algorithm configuration, run label)
Job = Tuple[ProblemSet, AlgoConfig, str]


def execute_job(job: Job) -> RunResult:
    problem, algo_cfg, run_id = job
    result = run_algorithm(problem, algo_cfg)
    result.run_id = run_id
    return result


def run_jobs(jobs: List[Job], workers: Optional[int] = None, description: str = 'runs') -> List[RunResult]:
    """Runs the jobs in a process pool and returns the results in job order."""
    workers = min(workers or GLOBALS.workers, len(jobs))
    disable = not environment_reader.progress_enabled()
    if workers <= 1:
        return [execute_job(job) for job in tqdm(jobs, desc=description, disable=disable)]

    results: List[Optional[RunResult]] = [None] * len(jobs)
    with ProcessPoolExecutor(max_workers=workers) as executor:
        futures = {executor.submit(execute_job, job): index for index, job in enumerate(jobs)}
        for future in tqdm(as_completed(futures), total=len(jobs), desc=description, disable=disable):
            results[futures[future]] = future.result()
    return [r for r in results if r is not None]


def experiment_name(cfg: RunConfig) -> str:
    if cfg.problem.path is not None:
        problem = os.path.splitext(os.path.basename(cfg.problem.path))[0]
    else:
        problem = f'{cfg.problem.set_id}_d{cfg.problem.dim}_n{cfg.problem.n_tasks}'
    return f'{cfg.algo.algorithm.value}_{problem}_s{cfg.algo.seed}'


def persist_run(run_io: RunIO, result: RunResult, record_ktrn: bool) -> List[MetricsRecord]:
    os.makedirs(run_io.run_folder, exist_ok=True)
    run_io.save_trace(result)
    run_io.save_counters(result)
    if not record_ktrn:
        return []
    records = run_metrics(result.graphs)
    run_io.save_ktrn(result.graphs, result)
    run_io.save_metrics(result.graphs, records, result)
    return records


def persist_experiment(cfg: RunConfig, problem: ProblemSet, results: List[RunResult],
                       experiment_folder: str) -> List[MetricsRecord]:
    """Writes every file of an experiment and returns the network metrics of all its generations.
    Only deterministic content goes to disk.
    """
    os.makedirs(experiment_folder, exist_ok=True)
    experiment_io = ExperimentIO(experiment_folder)
    delete_all_run_folders(experiment_folder)
    experiment_io.save_config(cfg)
    experiment_io.save_problem(problem)
    all_records: List[MetricsRecord] = []
    for repeat, result in enumerate(results):
        all_records.extend(persist_run(experiment_io.run_io(repeat), result, cfg.record_ktrn))
    experiment_io.save_summary(results)
    if all_records:
        experiment_io.save_aggregate(aggregate(all_records))
    return all_records


def run_experiment(cfg: RunConfig, experiment_folder: Optional[str] = None,
                   workers: Optional[int] = None) -> List[RunResult]:
    """Runs `cfg.repeats` independent repeats with seeds seed, seed + 1, ... and writes their outputs."""
    problem = validate_run_config(cfg)
    folder = experiment_folder or create_experiment_folder(cfg.output_dir, experiment_name(cfg))
    os.makedirs(folder, exist_ok=True)

    start = time.perf_counter()
    jobs = [(problem, effective_algo_config(cfg, repeat), run_id_for(repeat)) for repeat in range(cfg.repeats)]
    results = run_jobs(jobs, workers, description=cfg.algo.algorithm.value)
    persist_experiment(cfg, problem, results, folder)

    logger.info('%s on %s: %s repeats in %.1fs, mean best %s', cfg.algo.algorithm.value, problem.fingerprint(),
                cfg.repeats, time.perf_counter() - start, [round(r.mean_best, 6) for r in results])
    return results
