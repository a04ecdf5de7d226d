from .aggregate import METRIC_COLUMNS, aggregate, comparison_table, compatible_cell, format_cell
from .exceptions import MetricsError
from .metrics import (assortativity, clustering_coefficient, compute_metrics, density, diameter, heterogeneity,
                      run_metrics, subgraph_average_connectivity, to_digraph, to_undirected, weak_components)
from .metrics_io import load_metrics, save_aggregate, save_metrics, save_table

__all__ = [
    'METRIC_COLUMNS', 'aggregate', 'comparison_table', 'compatible_cell', 'format_cell',
    'MetricsError',
    'assortativity', 'clustering_coefficient', 'compute_metrics', 'density', 'diameter', 'heterogeneity',
    'run_metrics', 'subgraph_average_connectivity', 'to_digraph', 'to_undirected', 'weak_components',
    'load_metrics', 'save_aggregate', 'save_metrics', 'save_table',
]
