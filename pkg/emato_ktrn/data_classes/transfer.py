import sys
from dataclasses import dataclass, field
from typing import Any, Dict, List

import numpy as np

KWONLY_SLOTS = {'kw_only': True, 'slots': True} if sys.version_info >= (3, 10) else {}


@dataclass(**KWONLY_SLOTS)
class TransferEvent():
    generation: int = field(metadata={'description': 'Generation in which the transfer happened.'})
    source: int = field(metadata={'description': 'Task that provided the knowledge.'})
    target: int = field(metadata={'description': 'Task that received the knowledge.'})
    count: int = 1

    def __str__(self) -> str:
        return f'g{self.generation}: {self.source}->{self.target} x{self.count}'


@dataclass(**KWONLY_SLOTS)
class GenerationGraph():
    """Directed multigraph of one generation as an n x n count matrix.
    Entry [s][t] counts the transfers from task s to task t.
    """
    generation: int
    n: int
    adjacency: np.ndarray

    def __post_init__(self) -> None:
        adjacency = np.array(self.adjacency, dtype=np.int64)
        assert adjacency.shape == (self.n, self.n), f'adjacency must be {self.n}x{self.n}, got {adjacency.shape}'
        assert not np.any(np.diag(adjacency)), 'self transfers are not allowed'
        assert not np.any(adjacency < 0), 'transfer counts must be non-negative'
        adjacency.setflags(write=False)
        self.adjacency = adjacency

    @property
    def simple_view(self) -> np.ndarray:
        return self.adjacency > 0

    @property
    def edge_count(self) -> int:
        return int(np.count_nonzero(self.adjacency))

    @property
    def transfer_count(self) -> int:
        return int(self.adjacency.sum())

    def in_counts(self) -> np.ndarray:
        return self.adjacency.sum(axis=0)

    def edges(self) -> List[List[int]]:
        sources, targets = np.nonzero(self.adjacency)
        return [[int(s), int(t), int(self.adjacency[s, t])] for s, t in zip(sources, targets)]

    def to_record(self) -> Dict[str, Any]:
        return {'generation': self.generation, 'n': self.n, 'edges': self.edges()}

    @staticmethod
    def from_record(record: Dict[str, Any]) -> 'GenerationGraph':
        n = int(record['n'])
        adjacency = np.zeros((n, n), dtype=np.int64)
        for source, target, count in record['edges']:
            adjacency[int(source), int(target)] += int(count)
        return GenerationGraph(generation=int(record['generation']), n=n, adjacency=adjacency)

    @staticmethod
    def empty(generation: int, n: int) -> 'GenerationGraph':
        return GenerationGraph(generation=generation, n=n, adjacency=np.zeros((n, n), dtype=np.int64))
