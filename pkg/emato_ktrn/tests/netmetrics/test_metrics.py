import numpy as np
import pytest

from ...data_classes import GenerationGraph
from ...netmetrics import (MetricsError, assortativity, clustering_coefficient, compute_metrics, density, diameter,
                           heterogeneity, run_metrics, subgraph_average_connectivity, weak_components)
from ..test_helper import (complete_graph, graph_from_edges, oracle_assortativity, oracle_clustering,
                           oracle_components, oracle_density, oracle_diameter, oracle_heterogeneity, oracle_sac,
                           random_graph, undirected_graph)


def _ring_of_five_successors() -> GenerationGraph:
    return graph_from_edges(50, [(i, (i + k) % 50) for i in range(50) for k in range(1, 6)])


def test_density():
    assert density(_ring_of_five_successors()) == pytest.approx(0.10204, abs=1e-5)
    assert density(GenerationGraph.empty(0, 50)) == 0.0
    assert density(complete_graph(4)) == 1.0


def test_density_counts_distinct_edges():
    assert density(graph_from_edges(4, [(0, 1), (0, 1), (0, 1)])) == pytest.approx(1 / 12)
    assert density(graph_from_edges(4, [(0, 1), (1, 0)])) == pytest.approx(2 / 12)


def test_density_with_undirected_factor():
    graph = graph_from_edges(5, [(0, 1), (1, 2)])
    assert density(graph, undirected_factor=True) == pytest.approx(2 * density(graph))
    assert density(complete_graph(3), undirected_factor=True) == 1.0
    with pytest.raises(MetricsError):
        density(GenerationGraph.empty(0, 1))


def test_diameter():
    assert diameter(undirected_graph(3, [(0, 1), (1, 2)])) == 2.0
    assert diameter(complete_graph(5)) == 1.0
    assert diameter(undirected_graph(4, [(0, 1), (2, 3)])) is None
    assert diameter(GenerationGraph.empty(0, 3)) is None
    assert diameter(graph_from_edges(3, [(0, 1), (2, 1)])) == 2.0


def test_clustering():
    assert clustering_coefficient(undirected_graph(3, [(0, 1), (1, 2), (0, 2)])) == 1.0
    assert clustering_coefficient(undirected_graph(4, [(0, 1), (0, 2), (0, 3)])) == 0.0
    assert clustering_coefficient(GenerationGraph.empty(0, 4)) == 0.0


def test_assortativity():
    assert assortativity(undirected_graph(3, [(0, 1), (1, 2)])) == pytest.approx(-1.0)
    assert assortativity(undirected_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])) is None
    assert assortativity(complete_graph(4)) is None
    assert assortativity(undirected_graph(6, [(0, k) for k in range(1, 6)])) == pytest.approx(-1.0)
    assert assortativity(GenerationGraph.empty(0, 4)) is None


def test_subgraph_average_connectivity():
    assert subgraph_average_connectivity(complete_graph(3)) == 1.0
    two_components = graph_from_edges(5, [(0, 1), (1, 2), (3, 4)])
    assert subgraph_average_connectivity(two_components) == pytest.approx(0.4167, abs=1e-4)
    assert [sorted(c) for c in weak_components(two_components)] == [[0, 1, 2], [3, 4]]
    assert subgraph_average_connectivity(GenerationGraph.empty(0, 4)) is None

    cycle = graph_from_edges(5, [(i, (i + 1) % 5) for i in range(5)])
    assert subgraph_average_connectivity(cycle) == pytest.approx(density(cycle))


def test_heterogeneity():
    assert heterogeneity(graph_from_edges(3, [(0, 1), (1, 2), (2, 0)])) == 0.0
    assert heterogeneity(undirected_graph(4, [(0, 1), (0, 2), (0, 3)])) == pytest.approx(0.5774, abs=1e-4)
    assert heterogeneity(GenerationGraph.empty(0, 4)) is None


def test_empty_graph_record():
    record = compute_metrics(GenerationGraph.empty(3, 6))
    assert record.density == 0.0
    assert record.clustering == 0.0
    assert record.diameter is None
    assert record.assortativity is None
    assert record.sac is None
    assert record.heterogeneity is None
    assert record.components == 0


def _assert_same(value, expected):
    if expected is None:
        assert value is None
    else:
        assert value is not None
        assert abs(value - expected) <= 1e-9


def test_metrics_match_brute_force_oracles():
    rng = np.random.default_rng(2024)
    for _ in range(500):
        graph = random_graph(int(rng.integers(2, 13)), float(rng.uniform(0.0, 0.6)), rng)
        adjacency = graph.adjacency
        record = compute_metrics(graph)
        _assert_same(record.density, oracle_density(adjacency))
        _assert_same(record.diameter, oracle_diameter(adjacency))
        _assert_same(record.clustering, oracle_clustering(adjacency))
        _assert_same(record.assortativity, oracle_assortativity(adjacency))
        _assert_same(record.sac, oracle_sac(adjacency))
        _assert_same(record.heterogeneity, oracle_heterogeneity(adjacency))
        assert record.components == len(oracle_components(adjacency))


def test_metrics_do_not_depend_on_task_order():
    rng = np.random.default_rng(7)
    for _ in range(20):
        graph = random_graph(9, 0.3, rng)
        order = rng.permutation(9)
        permuted = GenerationGraph(generation=0, n=9, adjacency=graph.adjacency[np.ix_(order, order)])
        original, shuffled = compute_metrics(graph), compute_metrics(permuted)
        for column in ['D', 'C', 'DIA', 'A', 'SAC', 'H', 'components']:
            _assert_same(shuffled.value(column), original.value(column))


def test_density_grows_with_every_new_edge():
    rng = np.random.default_rng(8)
    edges = []
    previous = 0.0
    for source, target in rng.permutation([(s, t) for s in range(6) for t in range(6) if s != t]):
        edges.append((int(source), int(target)))
        current = density(graph_from_edges(6, edges))
        assert current > previous
        previous = current
    assert previous == 1.0


def test_run_metrics_keeps_generation_order():
    graphs = [GenerationGraph.empty(0, 4), complete_graph(4)]
    assert [record.density for record in run_metrics(graphs)] == [0.0, 1.0]
