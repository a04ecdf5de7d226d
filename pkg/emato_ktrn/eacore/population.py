from typing import List, Tuple

import numpy as np

from ..data_classes import UNEVALUATED, EliteArchive, MfIndividual, Subpopulation
from .evaluator import TaskEvaluator
from .operators import de_rand_1_bin


def random_genomes(count: int, length: int, rng: np.random.Generator) -> np.ndarray:
    return rng.random((count, length))


def init_subpopulation(task_id: int, size: int, evaluator: TaskEvaluator, rng: np.random.Generator,
                       archive_capacity: int = 300) -> Subpopulation:
    genomes = random_genomes(size, evaluator.genome_length, rng)
    return Subpopulation(task_id=task_id,
                         genomes=genomes,
                         fitness=evaluator.evaluate(task_id, genomes),
                         elite_archive=EliteArchive(archive_capacity))


def de_generation(pop: Subpopulation, evaluator: TaskEvaluator, F: float, CR: float,
                  rng: np.random.Generator) -> int:
    """One DE/rand/1/bin generation with one-to-one greedy replacement. Returns the number of replacements."""
    trials = np.array([de_rand_1_bin(pop, i, F, CR, rng) for i in range(pop.size)])
    trial_fitness = evaluator.evaluate(pop.task_id, trials)
    better = trial_fitness <= pop.fitness
    pop.genomes[better] = trials[better]
    pop.fitness[better] = trial_fitness[better]
    return int(np.count_nonzero(better))


def factorial_ranks(costs: np.ndarray) -> np.ndarray:
    """Ranks (1 = best) of every individual on every task.
    Unevaluated costs share the worst rank M + 1; ties between equal costs go to the lower index.
    """
    pool_size, n_tasks = costs.shape
    ranks = np.full((pool_size, n_tasks), pool_size + 1, dtype=np.int64)
    for task_id in range(n_tasks):
        evaluated = np.flatnonzero(np.isfinite(costs[:, task_id]))
        order = evaluated[np.argsort(costs[evaluated, task_id], kind='stable')]
        ranks[order, task_id] = np.arange(1, order.size + 1)
    return ranks


def scalar_fitness_and_skill(ranks: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    best_ranks = ranks.min(axis=1)
    return 1.0 / best_ranks, np.argmin(ranks, axis=1)


def mf_individuals(genomes: np.ndarray, costs: np.ndarray) -> List[MfIndividual]:
    ranks = factorial_ranks(costs)
    scalar_fitness, skill_factors = scalar_fitness_and_skill(ranks)
    return [MfIndividual(genome=genomes[i],
                         factorial_costs=costs[i],
                         factorial_ranks=ranks[i],
                         scalar_fitness=float(scalar_fitness[i]),
                         skill_factor=int(skill_factors[i])) for i in range(genomes.shape[0])]


def unevaluated_costs(count: int, n_tasks: int) -> np.ndarray:
    return np.full((count, n_tasks), UNEVALUATED)
