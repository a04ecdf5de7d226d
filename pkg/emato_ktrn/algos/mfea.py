import logging
from typing import List, Optional, Tuple

import numpy as np

from ..data_classes import AlgoConfig, AlgorithmId, MfIndividual, ProblemSet, RunResult
from ..eacore import (TaskEvaluator, factorial_ranks, mf_individuals, polynomial_mutation, random_genomes,
                      sbx_crossover, scalar_fitness_and_skill, unevaluated_costs)
from ..ktrn import KtrnRecorder
from .algorithm_logic import AlgorithmLogic

logger = logging.getLogger('emato_ktrn.mfea')

# (genome, skill factor, source task of a cross-task transfer or None)
Offspring = Tuple[np.ndarray, int, Optional[int]]


class Mfea(AlgorithmLogic):
    """Multi-factorial EA: one population, skill factors, assortative mating gated by rmp
    and selection on scalar fitness over the merged parent and offspring pool.
    """
    algorithm = AlgorithmId.MFEA

    @property
    def population_size(self) -> int:
        return min(self.pop_size * self.n_tasks, self.cfg.mfea_population_cap)

    def create_evaluator(self) -> TaskEvaluator:
        return TaskEvaluator(self.problem, self.cfg.max_evals_per_task,
                             hard_cap=self.cfg.max_evals_per_task + self.pop_size)

    def initialize(self) -> None:
        size = self.population_size
        self.genomes = random_genomes(size, self.evaluator.genome_length, self.rng)
        self.skill_factors = np.arange(size) % self.n_tasks
        self.costs = unevaluated_costs(size, self.n_tasks)
        for task_id in range(self.n_tasks):
            members = np.flatnonzero(self.skill_factors == task_id)
            if members.size:
                self.costs[members, task_id] = self.evaluator.evaluate(task_id, self.genomes[members])

    def can_continue(self) -> bool:
        budget = self.cfg.max_evals_per_task
        return bool(self.evaluator.counts.sum() + self.population_size <= self.n_tasks * budget
                    and np.all(self.evaluator.counts < budget))

    @property
    def individuals(self) -> List[MfIndividual]:
        return mf_individuals(self.genomes, self.costs)

    def mate(self, first: int, second: int) -> List[Offspring]:
        cfg = self.cfg
        p1, p2 = self.genomes[first], self.genomes[second]
        sf1, sf2 = int(self.skill_factors[first]), int(self.skill_factors[second])
        if sf1 == sf2:
            c1, c2 = sbx_crossover(p1, p2, cfg.eta_c, self.rng)
            return [(polynomial_mutation(c1, cfg.eta_m, None, self.rng), sf1, None),
                    (polynomial_mutation(c2, cfg.eta_m, None, self.rng), sf1, None)]
        if self.rng.random() < cfg.rmp:
            offspring: List[Offspring] = []
            for child in sbx_crossover(p1, p2, cfg.eta_c, self.rng):
                inherited, other = (sf1, sf2) if self.rng.random() < 0.5 else (sf2, sf1)
                offspring.append((child, inherited, other))
            return offspring
        return [(polynomial_mutation(p1, cfg.eta_m, None, self.rng), sf1, None),
                (polynomial_mutation(p2, cfg.eta_m, None, self.rng), sf2, None)]

    def make_offspring(self) -> List[Offspring]:
        size = self.population_size
        order = self.rng.permutation(size)
        if size % 2:
            order = np.append(order, order[0])
        offspring: List[Offspring] = []
        for k in range(0, order.size, 2):
            offspring.extend(self.mate(int(order[k]), int(order[k + 1])))
        return offspring[:size]

    def evolve(self, generation: int) -> None:
        offspring = self.make_offspring()
        kept: List[int] = []
        child_costs = unevaluated_costs(len(offspring), self.n_tasks)
        for task_id in range(self.n_tasks):
            indices = [k for k, (_, skill, _) in enumerate(offspring) if skill == task_id]
            affordable = indices[:max(0, self.evaluator.hard_cap - int(self.evaluator.counts[task_id]))]
            if len(affordable) < len(indices):
                logger.debug('task %s skips %s offspring at the evaluation cap', task_id, len(indices) - len(affordable))
            if affordable:
                genomes = np.array([offspring[k][0] for k in affordable])
                child_costs[affordable, task_id] = self.evaluator.evaluate(task_id, genomes)
                kept.extend(affordable)
        kept.sort()
        for k in kept:
            _, skill, source = offspring[k]
            if source is not None:
                self.recorder.transfer(generation, source, skill)

        pool_genomes = np.vstack([self.genomes] + [offspring[k][0][None, :] for k in kept])
        pool_costs = np.vstack([self.costs, child_costs[kept]])
        scalar_fitness, skill_factors = scalar_fitness_and_skill(factorial_ranks(pool_costs))
        survivors = np.argsort(-scalar_fitness, kind='stable')[:self.population_size]
        self.genomes = pool_genomes[survivors]
        self.costs = pool_costs[survivors]
        self.skill_factors = skill_factors[survivors]


def run_mfea(problem: ProblemSet, cfg: AlgoConfig, recorder: Optional[KtrnRecorder] = None) -> RunResult:
    return Mfea(problem, cfg, recorder).run()
