from typing import Callable, Dict, Optional

from ..data_classes import AlgoConfig, AlgorithmId, ProblemSet, RunResult
from ..ktrn import KtrnRecorder
from .algorithm_logic import AlgorithmLogic, validate_algo_config
from .emato_mkt import EmatoMkt, run_emato_mkt
from .exceptions import ConfigurationError
from .gaussian import fit_summary, kl_divergence, sample, symmetric_kld
from .kmeans import KMeansResult, kmeans
from .matde import MaTde, run_matde
from .mfea import Mfea, run_mfea
from .st_de import StDe, run_st_de

RUNNERS: Dict[AlgorithmId, Callable[[ProblemSet, AlgoConfig, Optional[KtrnRecorder]], RunResult]] = {
    AlgorithmId.MFEA: run_mfea,
    AlgorithmId.EMATO_MKT: run_emato_mkt,
    AlgorithmId.MATDE: run_matde,
    AlgorithmId.ST_DE: run_st_de,
}


def run_algorithm(problem: ProblemSet, cfg: AlgoConfig, recorder: Optional[KtrnRecorder] = None) -> RunResult:
    return RUNNERS[cfg.algorithm](problem, cfg, recorder)


__all__ = [
    'AlgorithmLogic', 'validate_algo_config', 'ConfigurationError',
    'EmatoMkt', 'MaTde', 'Mfea', 'StDe',
    'run_emato_mkt', 'run_matde', 'run_mfea', 'run_st_de', 'run_algorithm', 'RUNNERS',
    'fit_summary', 'kl_divergence', 'sample', 'symmetric_kld',
    'KMeansResult', 'kmeans',
]
