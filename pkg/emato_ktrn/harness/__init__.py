from .config import (apply_overrides, config_to_dict, default_run_config, effective_algo_config, load_problem,
                     load_run_config, run_config_from_dict, validate_run_config)
from .convergence import (ConvergenceCurve, compare_convergence, evaluation_grid, load_results, mean_best_curve,
                          step_values, value_at_fraction)
from .exceptions import HarnessError
from .experiment import execute_job, experiment_name, persist_experiment, run_experiment, run_jobs
from .run_io import ExperimentIO, RunIO, run_id_for
from .sweep import SweepCell, SweepReport, count_best_worst, sweep

__all__ = [
    'apply_overrides', 'config_to_dict', 'default_run_config', 'effective_algo_config', 'load_problem',
    'load_run_config', 'run_config_from_dict', 'validate_run_config',
    'ConvergenceCurve', 'compare_convergence', 'evaluation_grid', 'load_results', 'mean_best_curve',
    'step_values', 'value_at_fraction',
    'HarnessError',
    'execute_job', 'experiment_name', 'persist_experiment', 'run_experiment', 'run_jobs',
    'ExperimentIO', 'RunIO', 'run_id_for',
    'SweepCell', 'SweepReport', 'count_best_worst', 'sweep',
]
