import logging

from .algos import run_algorithm, run_emato_mkt, run_matde, run_mfea, run_st_de
from .bench import evaluate_base, evaluate_task, generate_problem_set
from .globals import GLOBALS
from .harness import compare_convergence, run_experiment, sweep
from .ktrn import KtrnRecorder

__all__ = ['run_algorithm', 'run_emato_mkt', 'run_matde', 'run_mfea', 'run_st_de',
           'evaluate_base', 'evaluate_task', 'generate_problem_set',
           'GLOBALS', 'compare_convergence', 'run_experiment', 'sweep', 'KtrnRecorder']

logging.debug('emato_ktrn %s workers, output folder %s', GLOBALS.workers, GLOBALS.output_folder)
