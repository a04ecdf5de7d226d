import logging
from typing import Dict, List, Union

import numpy as np

from ..data_classes import BaseFunctionId, ProblemSet, ProblemSetId, TaskDef
from .exceptions import BenchmarkError
from .functions import base_function, evaluate_base

logger = logging.getLogger('emato_ktrn.bench')

STANDARD_TASK_COUNT = 50
SHIFT_MARGIN = 0.1  # shifts are drawn from the central 80% of the box
BOUNDS_TOLERANCE = 1e-9

S, A, RO, RA, G, W, SC = (BaseFunctionId.Sphere, BaseFunctionId.Ackley, BaseFunctionId.Rosenbrock,
                          BaseFunctionId.Rastrigin, BaseFunctionId.Griewank, BaseFunctionId.Weierstrass,
                          BaseFunctionId.Schwefel)

COMPOSITION: Dict[ProblemSetId, List[BaseFunctionId]] = {
    ProblemSetId.P1: [S],
    ProblemSetId.P2: [RO],
    ProblemSetId.P3: [A],
    ProblemSetId.P4: [S, RO, RA],
    ProblemSetId.P5: [RA, G],
    ProblemSetId.P6: [A, W, SC],
    ProblemSetId.P7: [A, RO, RA, G],
    ProblemSetId.P8: [RO, RA, G, W],
    ProblemSetId.P9: [A, RA, G, W, SC],
    ProblemSetId.P10: [S, RA, W, SC],
}


def random_rotation(dim: int, rng: np.random.Generator) -> np.ndarray:
    """Orthonormalizes a standard normal matrix; the sign fix makes the draw uniform over O(dim)."""
    q, r = np.linalg.qr(rng.standard_normal((dim, dim)))
    signs = np.sign(np.diag(r))
    signs[signs == 0] = 1.0
    return q * signs


def generate_problem_set(set_id: Union[ProblemSetId, str], dim: int, seed: int,
                         n_tasks: int = STANDARD_TASK_COUNT) -> ProblemSet:
    set_id = ProblemSetId(set_id)
    functions = COMPOSITION[set_id]
    if dim < 2:
        raise BenchmarkError(f'task dimension must be at least 2, got {dim}')
    if n_tasks < len(functions):
        raise BenchmarkError(f'{set_id.value} needs at least {len(functions)} tasks, got {n_tasks}')

    rng = np.random.default_rng([seed, int(set_id.value[1:]), dim, n_tasks])
    bases = [functions[i % len(functions)] for i in range(n_tasks)]
    order = rng.permutation(n_tasks)
    bases = [bases[i] for i in order]

    tasks = []
    for task_id, base in enumerate(bases):
        half_width = base_function(base).search_range
        lower = np.full(dim, -half_width)
        upper = np.full(dim, half_width)
        margin = SHIFT_MARGIN * (upper - lower)
        shift = rng.uniform(lower + margin, upper - margin)
        rotation = random_rotation(dim, rng)
        tasks.append(TaskDef(task_id=task_id, base=base, shift=shift, rotation=rotation, lower=lower, upper=upper))

    logger.debug('generated %s with %s tasks (dim=%s, seed=%s)', set_id.value, n_tasks, dim, seed)
    return ProblemSet(set_id=set_id, dim=dim, seed=seed, tasks=tasks)


def evaluate_task(task: TaskDef, x: np.ndarray) -> Union[float, np.ndarray]:
    """Evaluates a task in its native space. Accepts one point (D,) or a batch (m, D)."""
    x = np.asarray(x, dtype=np.float64)
    if x.ndim == 0 or x.shape[-1] != task.dim:
        raise BenchmarkError(f'task {task.task_id} expects {task.dim} dimensions, got shape {x.shape}')
    if not np.all(np.isfinite(x)):
        raise BenchmarkError(f'task {task.task_id} cannot be evaluated at non-finite points')
    tolerance = BOUNDS_TOLERANCE * (task.upper - task.lower)
    if np.any(x < task.lower - tolerance) or np.any(x > task.upper + tolerance):
        raise BenchmarkError(f'point outside of the bounds of task {task.task_id}, clamp before evaluating')
    z = (x - task.shift) @ task.rotation.T + base_function(task.base).optimum_coordinate
    return evaluate_base(task.base, z)
