import logging
from typing import List, Optional

import numpy as np

from ..data_classes import GenerationGraph, TransferEvent
from .exceptions import RecorderError

logger = logging.getLogger('emato_ktrn.ktrn')


class KtrnRecorder:
    def __init__(self, n: int, first_generation: int = 0) -> None:
        """Collects transfer events of the open generation and turns them into one graph per generation.
        Generations are recorded in order: `finalize(g)` closes generation g and opens g + 1.
        """
        if n < 1:
            raise RecorderError(f'a transfer network needs at least one task, got {n}')
        self.n = n
        self.current_generation = first_generation
        self.graphs: List[GenerationGraph] = []
        self.event_log: List[TransferEvent] = []
        self._counts = np.zeros((n, n), dtype=np.int64)

    @property
    def last_finalized(self) -> Optional[int]:
        return self.graphs[-1].generation if self.graphs else None

    def record(self, event: TransferEvent) -> None:
        if event.source == event.target:
            raise RecorderError(f'self transfer {event} is not a knowledge transfer')
        if not (0 <= event.source < self.n and 0 <= event.target < self.n):
            raise RecorderError(f'{event} references a task outside of 0..{self.n - 1}')
        if event.count < 1:
            raise RecorderError(f'{event} must count at least one transfer')
        if event.generation < self.current_generation:
            raise RecorderError(f'generation {event.generation} is already finalized')
        if event.generation > self.current_generation:
            raise RecorderError(
                f'generation {event.generation} is not open, finalize generation {self.current_generation} first')
        self._counts[event.source, event.target] += event.count
        self.event_log.append(event)

    def transfer(self, generation: int, source: int, target: int, count: int = 1) -> None:
        self.record(TransferEvent(generation=generation, source=source, target=target, count=count))

    def finalize(self, generation: int) -> GenerationGraph:
        if generation < self.current_generation:
            raise RecorderError(f'generation {generation} was already finalized')
        if generation > self.current_generation:
            raise RecorderError(f'generation {generation} is not open, current is {self.current_generation}')
        graph = GenerationGraph(generation=generation, n=self.n, adjacency=self._counts)
        self.graphs.append(graph)
        logger.debug('finalized generation %s with %s transfers on %s edges',
                     generation, graph.transfer_count, graph.edge_count)
        self._counts = np.zeros((self.n, self.n), dtype=np.int64)
        self.current_generation += 1
        return graph

    def events_of(self, generation: int) -> List[TransferEvent]:
        return [event for event in self.event_log if event.generation == generation]


def aggregate_graphs(graphs: List[GenerationGraph]) -> GenerationGraph:
    """Sums the per generation counts of a run into one whole-run graph (generation -1)."""
    if not graphs:
        raise RecorderError('cannot aggregate an empty graph sequence')
    n = graphs[0].n
    if any(graph.n != n for graph in graphs):
        raise RecorderError('all graphs of a run must have the same number of tasks')
    return GenerationGraph(generation=-1, n=n, adjacency=np.sum([graph.adjacency for graph in graphs], axis=0))
