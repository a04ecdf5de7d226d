"""Structural metrics of transfer networks.
Directed quantities (density, SAC, heterogeneity) use the simple digraph; diameter, clustering and
assortativity use its underlying undirected simple graph. Not applicable values are returned as None.
"""
from typing import List, Optional

import networkx as nx
import numpy as np

from ..data_classes import GenerationGraph, MetricsRecord
from .exceptions import MetricsError


def to_digraph(g: GenerationGraph) -> nx.DiGraph:
    return nx.from_numpy_array(g.simple_view.astype(int), create_using=nx.DiGraph)


def to_undirected(g: GenerationGraph) -> nx.Graph:
    return to_digraph(g).to_undirected()


def density(g: GenerationGraph, undirected_factor: bool = False) -> float:
    """Distinct directed edges over n(n-1).
    With `undirected_factor` the edge count is doubled (capped at 1.0) for comparison with the printed formula.
    """
    if g.n < 2:
        raise MetricsError(f'density needs at least two tasks, got {g.n}')
    value = g.edge_count / (g.n * (g.n - 1))
    if undirected_factor:
        return min(1.0, 2.0 * value)
    return value


def diameter(g: GenerationGraph) -> Optional[float]:
    graph = to_undirected(g)
    if g.n < 2 or not nx.is_connected(graph):
        return None
    return float(nx.diameter(graph))


def clustering_coefficient(g: GenerationGraph) -> float:
    return float(nx.average_clustering(to_undirected(g)))


def assortativity(g: GenerationGraph) -> Optional[float]:
    graph = to_undirected(g)
    if graph.number_of_edges() == 0:
        return None
    degrees = dict(graph.degree())
    endpoint_degrees = [degrees[node] for edge in graph.edges() for node in edge]
    if np.var(endpoint_degrees) == 0:  # regular
        return None
    return float(nx.degree_assortativity_coefficient(graph))


def weak_components(g: GenerationGraph) -> List[set]:
    """Weakly connected components with at least two nodes, ordered by their smallest node."""
    components = [c for c in nx.weakly_connected_components(to_digraph(g)) if len(c) >= 2]
    return sorted(components, key=min)


def subgraph_average_connectivity(g: GenerationGraph) -> Optional[float]:
    digraph = to_digraph(g)
    components = weak_components(g)
    if not components:
        return None
    densities = [digraph.subgraph(c).number_of_edges() / (len(c) * (len(c) - 1)) for c in components]
    return float(np.mean(densities))


def heterogeneity(g: GenerationGraph) -> Optional[float]:
    degrees = np.array([d for _, d in to_digraph(g).degree()], dtype=np.float64)
    mean = degrees.mean() if degrees.size else 0.0
    if mean == 0:
        return None
    return float(degrees.std() / mean)


def compute_metrics(g: GenerationGraph, undirected_factor: bool = False) -> MetricsRecord:
    return MetricsRecord(density=density(g, undirected_factor),
                         clustering=clustering_coefficient(g),
                         diameter=diameter(g),
                         assortativity=assortativity(g),
                         sac=subgraph_average_connectivity(g),
                         heterogeneity=heterogeneity(g),
                         components=len(weak_components(g)))


def run_metrics(graphs: List[GenerationGraph], undirected_factor: bool = False) -> List[MetricsRecord]:
    return [compute_metrics(g, undirected_factor) for g in graphs]
