import sys
from dataclasses import dataclass, field
from enum import Enum
from typing import List, Optional

import numpy as np

from .transfer import GenerationGraph

KWONLY_SLOTS = {'kw_only': True, 'slots': True} if sys.version_info >= (3, 10) else {}


class AlgorithmId(str, Enum):
    MFEA = 'MFEA'
    EMATO_MKT = 'EMATO_MKT'
    MATDE = 'MATDE'
    ST_DE = 'ST_DE'


@dataclass(**KWONLY_SLOTS)
class AlgoConfig():
    algorithm: AlgorithmId
    seed: int = 0
    pop_size_per_task: int = 50
    max_evals_per_task: int = 20_000
    # MFEA
    rmp: float = 0.3
    mfea_population_cap: int = 1000
    eta_c: float = 2.0
    eta_m: float = 5.0
    # DE based algorithms
    F: float = 0.5
    CR: float = 0.9
    # EMaTO-MKT
    K: int = 3
    N: int = 5
    elite_fraction: float = 0.2
    # EMaTO-MKT and MaTDE
    transfer_interval: int = 1
    # MaTDE
    tp0: float = 0.1
    shrink: float = 0.8
    expand: float = 1.25
    tp_min: float = 0.05
    tp_max: float = 0.7
    kld_scale: float = 1.0
    archive_capacity: int = 300
    transfer_cr: float = 0.9


@dataclass(**KWONLY_SLOTS)
class ProblemSpec():
    set_id: str = 'P1'
    dim: int = 20
    seed: int = 0
    n_tasks: int = 50
    path: Optional[str] = field(default=None, metadata={'description': 'Serialized ProblemSet, wins over the rest'})


@dataclass(**KWONLY_SLOTS)
class RunConfig():
    problem: ProblemSpec
    algo: AlgoConfig
    repeats: int = 10
    max_evals_per_task: int = 20_000
    output_dir: str = './results'
    record_ktrn: bool = True


@dataclass(**KWONLY_SLOTS)
class RunResult():
    """Outcome of one run. `traces` has one row per generation with the best-so-far value of each task."""
    algorithm: AlgorithmId
    seed: int
    traces: np.ndarray
    evaluations: np.ndarray = field(metadata={'description': 'Mean evaluations per task after each generation'})
    events: np.ndarray = field(metadata={'description': 'Transfer events per generation'})
    eval_counts: np.ndarray = field(metadata={'description': 'Objective calls per task'})
    graphs: List[GenerationGraph] = field(default_factory=list)
    wall_clock_s: float = 0.0
    run_id: str = ''
    problem_fingerprint: str = ''
    ktrn_path: Optional[str] = None
    metrics_path: Optional[str] = None
    trace_path: Optional[str] = None

    @property
    def final_best(self) -> np.ndarray:
        return self.traces[-1]

    @property
    def mean_best(self) -> float:
        return float(np.mean(self.final_best))

    @property
    def generations(self) -> int:
        return int(self.traces.shape[0])
