import logging
from typing import List, Optional

import numpy as np

from ..data_classes import AlgoConfig, AlgorithmId, GaussianSummary, ProblemSet, RunResult, Subpopulation
from ..eacore import de_generation, init_subpopulation
from ..ktrn import KtrnRecorder
from .algorithm_logic import AlgorithmLogic
from .gaussian import fit_summary, sample
from .kmeans import KMeansResult, kmeans

logger = logging.getLogger('emato_ktrn.emato_mkt')


class EmatoMkt(AlgorithmLogic):
    """Multi-population DE where transfer partners are drawn from the k-means cluster of each task.
    Each selected auxiliary task donates one sample of its elite distribution, which replaces the
    worst member of the target if strictly better.
    """
    algorithm = AlgorithmId.EMATO_MKT

    def initialize(self) -> None:
        self.populations: List[Subpopulation] = [
            init_subpopulation(i, self.pop_size, self.evaluator, self.task_rngs[i], self.cfg.archive_capacity)
            for i in range(self.n_tasks)]
        self.last_clustering: Optional[KMeansResult] = None
        self.accepted_transfers = 0

    def generation_cost(self, generation: int) -> int:
        return self.pop_size + (self.cfg.N if self.is_transfer_generation(generation) else 0)

    def can_continue(self) -> bool:
        return self.evaluator.can_afford(self.generation_cost(self.generation))

    def representations(self) -> np.ndarray:
        return np.array([pop.top_genomes(self.cfg.elite_fraction).mean(axis=0) for pop in self.populations])

    def cluster_tasks(self) -> KMeansResult:
        self.last_clustering = kmeans(self.representations(), self.cfg.K, self.rng)
        return self.last_clustering

    def select_auxiliaries(self, task_id: int, clustering: KMeansResult) -> np.ndarray:
        others = clustering.members(int(clustering.labels[task_id]))
        others = others[others != task_id]
        count = min(self.cfg.N, others.size)
        if count == 0:
            return np.array([], dtype=np.int64)
        return self.rng.choice(others, size=count, replace=False)

    def transfer(self, generation: int) -> None:
        clustering = self.cluster_tasks()
        summaries: List[GaussianSummary] = [fit_summary(pop.top_genomes(self.cfg.elite_fraction))
                                            for pop in self.populations]
        for target in range(self.n_tasks):
            pop = self.populations[target]
            for source in self.select_auxiliaries(target, clustering):
                source = int(source)
                self.recorder.transfer(generation, source, target)
                candidate = sample(summaries[source], self.task_rngs[target])
                value = self.evaluator.evaluate_one(target, candidate)
                worst = pop.worst_index
                if value < pop.fitness[worst]:
                    pop.genomes[worst] = candidate
                    pop.fitness[worst] = value
                    self.accepted_transfers += 1

    def evolve(self, generation: int) -> None:
        if self.is_transfer_generation(generation):
            self.transfer(generation)
        for pop in self.populations:
            de_generation(pop, self.evaluator, self.cfg.F, self.cfg.CR, self.task_rngs[pop.task_id])
        logger.debug('generation %s: %s accepted transfers so far', generation, self.accepted_transfers)


def run_emato_mkt(problem: ProblemSet, cfg: AlgoConfig, recorder: Optional[KtrnRecorder] = None) -> RunResult:
    return EmatoMkt(problem, cfg, recorder).run()
