import sys
from collections import deque
from dataclasses import dataclass, field
from typing import Deque, List, Optional

import numpy as np

KWONLY_SLOTS = {'kw_only': True, 'slots': True} if sys.version_info >= (3, 10) else {}

UNEVALUATED = float('inf')
VARIANCE_FLOOR = 1e-12


@dataclass(**KWONLY_SLOTS)
class Individual():
    genome: np.ndarray = field(metadata={'description': 'Values in the unified space [0,1]^D_max.'})
    fitness: float = UNEVALUATED
    task_id: Optional[int] = None

    @property
    def evaluated(self) -> bool:
        return np.isfinite(self.fitness)


@dataclass(**KWONLY_SLOTS)
class MfIndividual():
    """Member of the single multi-factorial population.
    Costs of tasks the individual was not evaluated on stay UNEVALUATED.
    """
    genome: np.ndarray
    factorial_costs: np.ndarray
    factorial_ranks: np.ndarray
    scalar_fitness: float
    skill_factor: int


class EliteArchive():
    """Bounded FIFO of good genomes; the oldest entry is dropped first."""

    def __init__(self, capacity: int = 300) -> None:
        assert capacity > 0, 'archive capacity must be positive'
        self.capacity = capacity
        self._entries: Deque[np.ndarray] = deque(maxlen=capacity)

    def add(self, genome: np.ndarray) -> None:
        self._entries.append(np.array(genome, dtype=np.float64))

    def __len__(self) -> int:
        return len(self._entries)

    def as_array(self) -> np.ndarray:
        return np.array(self._entries)

    def pick(self, rng: np.random.Generator) -> np.ndarray:
        assert self._entries, 'cannot pick from an empty archive'
        return self._entries[int(rng.integers(len(self._entries)))]


@dataclass(**KWONLY_SLOTS)
class Subpopulation():
    """Population of a single task in a multi-population algorithm.
    `genomes` holds one member per row, `fitness` the matching objective values.
    """
    task_id: int
    genomes: np.ndarray
    fitness: np.ndarray
    elite_archive: EliteArchive = field(default_factory=EliteArchive)

    @property
    def size(self) -> int:
        return int(self.genomes.shape[0])

    @property
    def best_index(self) -> int:
        return int(np.argmin(self.fitness))

    @property
    def worst_index(self) -> int:
        return int(np.argmax(self.fitness))

    @property
    def members(self) -> List[Individual]:
        return [Individual(genome=self.genomes[i], fitness=float(self.fitness[i]), task_id=self.task_id)
                for i in range(self.size)]

    def top_genomes(self, fraction: float = 0.2) -> np.ndarray:
        count = max(1, int(np.ceil(fraction * self.size)))
        order = np.argsort(self.fitness, kind='stable')
        return self.genomes[order[:count]]


@dataclass(**KWONLY_SLOTS)
class GaussianSummary():
    """Diagonal Gaussian over the unified space."""
    mean: np.ndarray
    variance: np.ndarray

    def __post_init__(self) -> None:
        self.variance = np.maximum(np.asarray(self.variance, dtype=np.float64), VARIANCE_FLOOR)
        self.mean = np.asarray(self.mean, dtype=np.float64)

    @staticmethod
    def fit(genomes: np.ndarray) -> 'GaussianSummary':
        genomes = np.atleast_2d(genomes)
        return GaussianSummary(mean=genomes.mean(axis=0), variance=genomes.var(axis=0))
