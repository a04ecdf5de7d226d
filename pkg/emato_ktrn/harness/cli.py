import argparse
import logging
import os
import sys
from collections import Counter
from typing import List, Optional

from dacite import DaciteError

from ..algos import ConfigurationError
from ..bench import BenchmarkError, generate_problem_set, save_problem_set
from ..data_classes import AlgorithmId, RunConfig
from ..globals import GLOBALS
from ..helpers import log_conf  # noqa: F401 pylint: disable=unused-import
from ..ktrn import aggregate_graphs, load_ktrn
from ..netmetrics import aggregate, comparison_table, run_metrics, save_aggregate, save_metrics, save_table
from .config import apply_overrides, default_run_config, load_run_config
from .convergence import compare_convergence, load_results
from .experiment import run_experiment
from .run_io import ExperimentIO
from .sweep import sweep

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_CONFIGURATION = 2


def _add_experiment_arguments(parser: argparse.ArgumentParser, grid: bool = False) -> None:
    parser.add_argument('--config', help='RunConfig JSON document, flags override its fields')
    parser.add_argument('--problem', help='problem set id (P1..P10) or path of a problem set JSON file')
    parser.add_argument('--algo', choices=[a.value for a in AlgorithmId], type=str.upper)
    parser.add_argument('--seed', type=int, help='master seed, mandatory without --config')
    parser.add_argument('--repeats', type=int)
    parser.add_argument('--evals', type=int, help='evaluations per task')
    parser.add_argument('--out', help='output directory')
    parser.add_argument('--rmp', type=float)
    parser.add_argument('--dim', type=int)
    parser.add_argument('--tasks', type=int, help='number of tasks of a generated problem set')
    parser.add_argument('--workers', type=int, help='parallel processes (default: physical cores)')
    nargs = '+' if grid else None
    parser.add_argument('--k', type=int, nargs=nargs, help='cluster count K')
    parser.add_argument('--n', type=int, nargs=nargs, help='auxiliary task count N')


def create_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog='emato-ktrn',
                                     description='Many-task evolutionary optimization with transfer network analysis')
    commands = parser.add_subparsers(dest='command', required=True)

    gen = commands.add_parser('gen-problem', help='write a problem set as JSON')
    gen.add_argument('--problem', required=True, help='problem set id P1..P10')
    gen.add_argument('--dim', type=int, default=20)
    gen.add_argument('--seed', type=int, required=True)
    gen.add_argument('--tasks', type=int, default=50)
    gen.add_argument('--out', required=True, help='target JSON file')

    _add_experiment_arguments(commands.add_parser('run', help='run one experiment'))
    _add_experiment_arguments(commands.add_parser('sweep', help='EMaTO-MKT over a K x N grid'), grid=True)

    metrics = commands.add_parser('metrics', help='recompute metrics from a transfer network file')
    metrics.add_argument('ktrn', help='ktrn.jsonl file')
    metrics.add_argument('--out', help='metrics CSV (default: next to the input)')
    metrics.add_argument('--aggregate', action='store_true', help='also report the whole-run summed network')
    metrics.add_argument('--undirected-factor', action='store_true', help='density with the doubled edge count')

    compare = commands.add_parser('compare', help='convergence bundle of several experiments on one problem')
    compare.add_argument('experiments', nargs='+', help='experiment folders written by `run`')
    compare.add_argument('--out', required=True, help='output folder')
    return parser


def _run_config(args: argparse.Namespace) -> RunConfig:
    if args.config:
        cfg = load_run_config(args.config)
    elif args.seed is None:
        raise ConfigurationError('a master seed is required: pass --seed or --config')
    else:
        cfg = default_run_config(AlgorithmId(args.algo) if args.algo else AlgorithmId.EMATO_MKT)
    single = {} if isinstance(args.k, list) or isinstance(args.n, list) else {'k': args.k, 'n': args.n}
    return apply_overrides(cfg, problem=args.problem, algo=args.algo, seed=args.seed, repeats=args.repeats,
                           evals=args.evals, out=args.out or (None if args.config else GLOBALS.output_folder),
                           rmp=args.rmp, dim=args.dim, tasks=args.tasks, **single)


def gen_problem(args: argparse.Namespace) -> None:
    try:
        problem = generate_problem_set(args.problem.upper(), args.dim, args.seed, args.tasks)
    except (BenchmarkError, ValueError) as e:
        raise ConfigurationError(f'cannot generate problem set {args.problem}: {e}') from e
    save_problem_set(problem, args.out)


def run(args: argparse.Namespace) -> None:
    cfg = _run_config(args)
    results = run_experiment(cfg, workers=args.workers)
    for result in results:
        logging.info('%s seed %s: mean best %s (%.1fs)', result.run_id, result.seed, result.mean_best,
                     result.wall_clock_s)


def run_sweep(args: argparse.Namespace) -> None:
    cfg = _run_config(args)
    K_values = args.k or [cfg.algo.K]
    N_values = args.n or [cfg.algo.N]
    report = sweep(cfg, K_values, N_values, workers=args.workers)
    for label, best, worst in zip(report.labels, *report.totals()):
        logging.info('%s: %s best, %s worst', label, best, worst)


def metrics(args: argparse.Namespace) -> None:
    graphs = load_ktrn(args.ktrn)
    if args.aggregate:
        graphs = graphs + [aggregate_graphs(graphs)]
    records = run_metrics(graphs, args.undirected_factor)
    out = args.out or os.path.join(os.path.dirname(args.ktrn) or '.', 'metrics_recomputed.csv')
    run_id = os.path.basename(os.path.dirname(os.path.abspath(args.ktrn)))
    save_metrics([(run_id, g.generation, r) for g, r in zip(graphs, records)], out)
    per_generation = records[:-1] if args.aggregate else records
    if per_generation:
        save_aggregate(aggregate(per_generation), os.path.splitext(out)[0] + '_aggregate.csv')
    logging.info('wrote metrics of %s networks to %s', len(records), out)


def experiment_labels(folders: List[str], names: List[str]) -> List[str]:
    """Algorithm names label the curves; names shared by several folders all get their folder appended."""
    shared = Counter(names)
    labels = [f'{name}_{os.path.basename(folder.rstrip("/"))}' if shared[name] > 1 else name
              for folder, name in zip(folders, names)]
    if len(set(labels)) < len(labels):
        labels = [f'{label}_{index}' for index, label in enumerate(labels)]
    return labels


def compare(args: argparse.Namespace) -> None:
    runs_per_folder = [load_results(folder) for folder in args.experiments]
    names = [runs[0].algorithm.value if runs else os.path.basename(folder.rstrip('/'))
             for folder, runs in zip(args.experiments, runs_per_folder)]
    results = {}
    summaries = {}
    budget = 0
    for folder, name, runs in zip(args.experiments, experiment_labels(args.experiments, names), runs_per_folder):
        experiment_io = ExperimentIO(folder)
        config = experiment_io.load_config()
        results[name] = runs
        budget = max(budget, int(config['max_evals_per_task']))
        records = [record for run_io in experiment_io.run_ios() if os.path.exists(run_io.metrics_path)
                   for record in run_io.load_metrics()]
        if records:
            summaries[name] = aggregate(records)
    compare_convergence(results, budget, args.out)
    if summaries:
        save_table(comparison_table(summaries), f'{args.out}/ktrn_comparison.csv')


COMMANDS = {'gen-problem': gen_problem, 'run': run, 'sweep': run_sweep, 'metrics': metrics, 'compare': compare}


def main(argv: Optional[List[str]] = None) -> int:
    args = create_parser().parse_args(argv)
    try:
        COMMANDS[args.command](args)
    except (ConfigurationError, DaciteError) as e:
        logging.error('configuration error: %s', e)
        return EXIT_CONFIGURATION
    except Exception:  # pylint: disable=broad-except
        logging.exception('%s failed', args.command)
        return EXIT_FAILURE
    return EXIT_OK


if __name__ == '__main__':
    sys.exit(main())
