import json
import os
from typing import List

from ..data_classes import GenerationGraph
from .exceptions import RecorderError


def save_ktrn(graphs: List[GenerationGraph], file_path: str) -> None:
    """Writes one JSON line per generation: {generation, n, edges: [[source, target, count], ...]}."""
    folder = os.path.dirname(file_path)
    if folder:
        os.makedirs(folder, exist_ok=True)
    with open(file_path, 'w') as f:
        for graph in graphs:
            f.write(json.dumps(graph.to_record()) + '\n')


def load_ktrn(file_path: str) -> List[GenerationGraph]:
    if not os.path.exists(file_path):
        raise RecorderError(f'could not find transfer network file {file_path}')
    graphs = []
    with open(file_path, 'r') as f:
        for line_number, line in enumerate(f, start=1):
            if not line.strip():
                continue
            try:
                graphs.append(GenerationGraph.from_record(json.loads(line)))
            except Exception as exc:
                raise RecorderError(f"could not parse line {line_number} of '{file_path}'") from exc
    return graphs
