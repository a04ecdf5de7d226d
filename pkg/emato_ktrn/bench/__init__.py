from .exceptions import BenchmarkError
from .functions import BASE_FUNCTIONS, BaseFunction, base_function, evaluate_base
from .problem_io import load_problem_set, problem_to_json, save_problem_set
from .task_sets import COMPOSITION, STANDARD_TASK_COUNT, evaluate_task, generate_problem_set, random_rotation

__all__ = [
    'BenchmarkError',
    'BASE_FUNCTIONS', 'BaseFunction', 'base_function', 'evaluate_base',
    'load_problem_set', 'problem_to_json', 'save_problem_set',
    'COMPOSITION', 'STANDARD_TASK_COUNT', 'evaluate_task', 'generate_problem_set', 'random_rotation',
]
