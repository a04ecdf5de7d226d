import logging
from typing import List, Optional

import numpy as np

from ..data_classes import AlgoConfig, AlgorithmId, GaussianSummary, ProblemSet, RunResult, Subpopulation
from ..eacore import binomial_crossover, de_generation, init_subpopulation
from ..ktrn import KtrnRecorder
from .algorithm_logic import AlgorithmLogic
from .gaussian import fit_summary, symmetric_kld

logger = logging.getLogger('emato_ktrn.matde')

COLD_DIVERGENCE = 1e6
MIN_REWARD = 1e-300
MAX_REWARD = 1e300
MIN_ARCHIVE_FOR_KLD = 2


class MaTde(AlgorithmLogic):
    """Many-task DE with per-task elite archives, adaptive transfer probabilities and rewarded source selection."""
    algorithm = AlgorithmId.MATDE

    def initialize(self) -> None:
        self.populations: List[Subpopulation] = [
            init_subpopulation(i, self.pop_size, self.evaluator, self.task_rngs[i], self.cfg.archive_capacity)
            for i in range(self.n_tasks)]
        self.transfer_probability = np.full(self.n_tasks, self.cfg.tp0)
        self.rewards = np.ones((self.n_tasks, self.n_tasks))
        self.attempts = 0
        self.successes = 0
        self.update_archives()

    def can_continue(self) -> bool:
        return self.evaluator.can_afford(self.pop_size)

    def update_archives(self) -> None:
        for pop in self.populations:
            pop.elite_archive.add(pop.genomes[pop.best_index])

    def archive_summaries(self) -> List[Optional[GaussianSummary]]:
        return [fit_summary(pop.elite_archive.as_array()) if len(pop.elite_archive) >= MIN_ARCHIVE_FOR_KLD else None
                for pop in self.populations]

    def divergence(self, summaries: List[Optional[GaussianSummary]], target: int, source: int) -> float:
        p, q = summaries[target], summaries[source]
        if p is None or q is None:
            return COLD_DIVERGENCE
        return symmetric_kld(p, q)

    def source_probabilities(self, target: int, summaries: List[Optional[GaussianSummary]]) -> np.ndarray:
        """Softmax over reward / (1 + kld_scale * KLD); the target itself gets probability 0."""
        sources = [j for j in range(self.n_tasks) if j != target]
        weights = np.array([self.rewards[target, j] / (1.0 + self.cfg.kld_scale * self.divergence(summaries, target, j))
                            for j in sources])
        exp = np.exp(weights - weights.max())
        probabilities = np.zeros(self.n_tasks)
        probabilities[sources] = exp / exp.sum()
        return probabilities

    def transfer(self, generation: int, target: int, summaries: List[Optional[GaussianSummary]]) -> None:
        rng = self.task_rngs[target]
        source = int(rng.choice(self.n_tasks, p=self.source_probabilities(target, summaries)))
        self.recorder.transfer(generation, source, target)
        self.attempts += 1

        pop = self.populations[target]
        member = int(rng.integers(pop.size))
        best_before = self.evaluator.best[target]
        offspring = binomial_crossover(pop.genomes[member], self.populations[source].elite_archive.pick(rng),
                                       self.cfg.transfer_cr, rng)
        fitness = self.evaluator.evaluate_one(target, offspring)
        if fitness <= pop.fitness[member]:
            pop.genomes[member] = offspring
            pop.fitness[member] = fitness

        if fitness < best_before:
            self.successes += 1
            self.rewards[target, source] = min(self.rewards[target, source] * self.cfg.expand, MAX_REWARD)
            self.transfer_probability[target] = min(self.cfg.tp_max, self.transfer_probability[target] * self.cfg.expand)
        else:
            self.rewards[target, source] = max(self.rewards[target, source] * self.cfg.shrink, MIN_REWARD)
            self.transfer_probability[target] = max(self.cfg.tp_min, self.transfer_probability[target] * self.cfg.shrink)

    def evolve(self, generation: int) -> None:
        transfer_round = self.is_transfer_generation(generation)
        summaries = self.archive_summaries() if transfer_round else []
        for target, pop in enumerate(self.populations):
            rng = self.task_rngs[target]
            if transfer_round and rng.random() < self.transfer_probability[target]:
                self.transfer(generation, target, summaries)
            else:
                de_generation(pop, self.evaluator, self.cfg.F, self.cfg.CR, rng)
        self.update_archives()
        logger.debug('generation %s: %s/%s successful transfers', generation, self.successes, self.attempts)


def run_matde(problem: ProblemSet, cfg: AlgoConfig, recorder: Optional[KtrnRecorder] = None) -> RunResult:
    return MaTde(problem, cfg, recorder).run()
