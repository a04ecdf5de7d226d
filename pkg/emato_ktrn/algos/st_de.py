from typing import List, Optional

from ..data_classes import AlgoConfig, AlgorithmId, ProblemSet, RunResult, Subpopulation
from ..eacore import de_generation, init_subpopulation
from ..ktrn import KtrnRecorder
from .algorithm_logic import AlgorithmLogic


class StDe(AlgorithmLogic):
    """n independent DE/rand/1/bin runs sharing nothing."""
    algorithm = AlgorithmId.ST_DE

    def initialize(self) -> None:
        self.populations: List[Subpopulation] = [
            init_subpopulation(i, self.pop_size, self.evaluator, self.task_rngs[i], self.cfg.archive_capacity)
            for i in range(self.n_tasks)]

    def can_continue(self) -> bool:
        return self.evaluator.can_afford(self.pop_size)

    def evolve(self, generation: int) -> None:
        for pop in self.populations:
            de_generation(pop, self.evaluator, self.cfg.F, self.cfg.CR, self.task_rngs[pop.task_id])


def run_st_de(problem: ProblemSet, cfg: AlgoConfig, recorder: Optional[KtrnRecorder] = None) -> RunResult:
    return StDe(problem, cfg, recorder).run()
