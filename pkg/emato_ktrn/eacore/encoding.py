import numpy as np

from ..data_classes import TaskDef


def decode(genome: np.ndarray, task: TaskDef) -> np.ndarray:
    """Maps the first task.dim genes from the unified space [0,1] onto the task box.
    Works for one genome or a batch with one genome per row.
    """
    genome = np.asarray(genome, dtype=np.float64)
    assert genome.shape[-1] >= task.dim, f'genome of length {genome.shape[-1]} is too short for task {task.task_id}'
    values = genome[..., :task.dim]
    native = task.lower + values * (task.upper - task.lower)
    return np.clip(native, task.lower, task.upper)


def encode(x: np.ndarray, task: TaskDef, genome_length: int) -> np.ndarray:
    """Inverse of `decode`; genes beyond task.dim are set to the box center."""
    x = np.asarray(x, dtype=np.float64)
    genome = np.full(x.shape[:-1] + (genome_length,), 0.5)
    genome[..., :task.dim] = (x - task.lower) / (task.upper - task.lower)
    return np.clip(genome, 0.0, 1.0)
