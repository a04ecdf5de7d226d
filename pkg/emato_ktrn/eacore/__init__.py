from .encoding import decode, encode
from .evaluator import TaskEvaluator
from .exceptions import BudgetExhaustedError, OperatorError
from .operators import binomial_crossover, clamp, de_rand_1_bin, polynomial_mutation, sbx_crossover
from .population import (de_generation, factorial_ranks, init_subpopulation, mf_individuals, random_genomes,
                         scalar_fitness_and_skill, unevaluated_costs)

__all__ = [
    'decode', 'encode',
    'TaskEvaluator',
    'BudgetExhaustedError', 'OperatorError',
    'binomial_crossover', 'clamp', 'de_rand_1_bin', 'polynomial_mutation', 'sbx_crossover',
    'de_generation', 'factorial_ranks', 'init_subpopulation', 'mf_individuals', 'random_genomes',
    'scalar_fitness_and_skill', 'unevaluated_costs',
]
