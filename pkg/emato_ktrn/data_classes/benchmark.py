import sys
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List

import numpy as np

KWONLY_SLOTS = {'kw_only': True, 'slots': True} if sys.version_info >= (3, 10) else {}


class BaseFunctionId(str, Enum):
    Sphere = 'sphere'
    Ackley = 'ackley'
    Rosenbrock = 'rosenbrock'
    Rastrigin = 'rastrigin'
    Griewank = 'griewank'
    Weierstrass = 'weierstrass'
    Schwefel = 'schwefel'


class ProblemSetId(str, Enum):
    P1 = 'P1'
    P2 = 'P2'
    P3 = 'P3'
    P4 = 'P4'
    P5 = 'P5'
    P6 = 'P6'
    P7 = 'P7'
    P8 = 'P8'
    P9 = 'P9'
    P10 = 'P10'


def _readonly(values: Any) -> np.ndarray:
    array = np.array(values, dtype=np.float64)
    array.setflags(write=False)
    return array


@dataclass(**KWONLY_SLOTS)
class TaskDef():
    """One shifted and rotated single-objective task.
    The task is evaluated as base(rotation @ (x - shift) + base optimum), so its optimum sits at `shift`.
    """
    task_id: int = field(metadata={'description': 'Index of the task inside its problem set.'})
    base: BaseFunctionId = field(metadata={'description': 'The base function the task is built from.'})
    shift: np.ndarray = field(metadata={'description': 'Location of the optimum in native units.'})
    rotation: np.ndarray = field(metadata={'description': 'Orthogonal D x D rotation matrix.'})
    lower: np.ndarray = field(metadata={'description': 'Lower box bound per dimension.'})
    upper: np.ndarray = field(metadata={'description': 'Upper box bound per dimension.'})

    def __post_init__(self) -> None:
        self.base = BaseFunctionId(self.base)
        self.shift = _readonly(self.shift)
        self.rotation = _readonly(self.rotation)
        self.lower = _readonly(self.lower)
        self.upper = _readonly(self.upper)

    @property
    def dim(self) -> int:
        return int(self.shift.shape[0])

    @property
    def optimum(self) -> np.ndarray:
        return self.shift

    def to_dict(self) -> Dict[str, Any]:
        return {
            'task_id': self.task_id,
            'base': self.base.value,
            'shift': self.shift.tolist(),
            'rotation': self.rotation.tolist(),
            'lower': self.lower.tolist(),
            'upper': self.upper.tolist(),
        }

    @staticmethod
    def from_dict(data: Dict[str, Any]) -> 'TaskDef':
        return TaskDef(task_id=int(data['task_id']),
                       base=BaseFunctionId(data['base']),
                       shift=data['shift'],
                       rotation=data['rotation'],
                       lower=data['lower'],
                       upper=data['upper'])


@dataclass(**KWONLY_SLOTS)
class ProblemSet():
    set_id: ProblemSetId
    dim: int
    seed: int
    tasks: List[TaskDef] = field(default_factory=list)

    def __post_init__(self) -> None:
        self.set_id = ProblemSetId(self.set_id)

    @property
    def n_tasks(self) -> int:
        return len(self.tasks)

    @property
    def max_dim(self) -> int:
        return max(task.dim for task in self.tasks)

    def bases(self) -> List[BaseFunctionId]:
        return [task.base for task in self.tasks]

    def fingerprint(self) -> str:
        """Identifies the problem for comparisons between experiments."""
        return f'{self.set_id.value}/d{self.dim}/s{self.seed}/n{self.n_tasks}'

    def to_dict(self) -> Dict[str, Any]:
        return {
            'set_id': self.set_id.value,
            'dim': self.dim,
            'seed': self.seed,
            'tasks': [task.to_dict() for task in self.tasks],
        }

    @staticmethod
    def from_dict(data: Dict[str, Any]) -> 'ProblemSet':
        return ProblemSet(set_id=ProblemSetId(data['set_id']),
                          dim=int(data['dim']),
                          seed=int(data['seed']),
                          tasks=[TaskDef.from_dict(task) for task in data['tasks']])
