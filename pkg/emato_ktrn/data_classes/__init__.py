from .benchmark import BaseFunctionId, ProblemSet, ProblemSetId, TaskDef
from .experiment import AlgoConfig, AlgorithmId, ProblemSpec, RunConfig, RunResult
from .metrics import NA_CELL, AggregateSummary, MetricsRecord, MetricSummary
from .population import (UNEVALUATED, EliteArchive, GaussianSummary, Individual, MfIndividual,
                         Subpopulation)
from .transfer import GenerationGraph, TransferEvent

__all__ = [
    'BaseFunctionId', 'ProblemSet', 'ProblemSetId', 'TaskDef',
    'AlgoConfig', 'AlgorithmId', 'ProblemSpec', 'RunConfig', 'RunResult',
    'NA_CELL', 'AggregateSummary', 'MetricsRecord', 'MetricSummary',
    'UNEVALUATED', 'EliteArchive', 'GaussianSummary', 'Individual', 'MfIndividual', 'Subpopulation',
    'GenerationGraph', 'TransferEvent',
]
