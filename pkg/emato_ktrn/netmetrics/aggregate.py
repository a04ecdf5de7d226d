from typing import Dict, List, Optional

import numpy as np

from ..data_classes import NA_CELL, AggregateSummary, MetricsRecord, MetricSummary
from .exceptions import MetricsError

METRIC_COLUMNS = ['D', 'C', 'DIA', 'A', 'SAC', 'H', 'components']


def format_cell(mean: Optional[float], std: Optional[float]) -> str:
    if mean is None or std is None:
        return NA_CELL
    return f'{mean:.3f} ({std:.3f})'


def summarize(column: str, values: List[Optional[float]]) -> MetricSummary:
    defined = np.array([v for v in values if v is not None], dtype=np.float64)
    na_fraction = 1.0 - defined.size / len(values)
    if defined.size == 0:
        return MetricSummary(metric=column, mean=None, std=None, na_fraction=na_fraction, count=0)
    return MetricSummary(metric=column,
                         mean=float(defined.mean()),
                         std=float(defined.std()),
                         na_fraction=na_fraction,
                         count=int(defined.size))


def aggregate(records: List[MetricsRecord]) -> AggregateSummary:
    """Mean and population std of every metric over the records on which it is defined."""
    if not records:
        raise MetricsError('cannot aggregate an empty list of metrics records')
    return AggregateSummary(summaries={column: summarize(column, [r.value(column) for r in records])
                                       for column in METRIC_COLUMNS})


def compatible_cell(summary: MetricSummary) -> str:
    """Cell of the published table layout: undefined assortativity is shown as zero."""
    if summary.metric == 'A' and summary.mean is None:
        return format_cell(0.0, 0.0)
    return summary.cell


def comparison_table(summaries: Dict[str, AggregateSummary], compatible: bool = True) -> List[List[str]]:
    """Rows = metrics, columns = algorithms (in insertion order). The first row is the header."""
    names = list(summaries.keys())
    rows = [['metric'] + names]
    for column in METRIC_COLUMNS:
        cells = [compatible_cell(summaries[name][column]) if compatible else summaries[name][column].cell
                 for name in names]
        rows.append([column] + cells)
    return rows
