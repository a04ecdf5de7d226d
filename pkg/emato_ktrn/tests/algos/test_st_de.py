import numpy as np

from ...algos import StDe, run_st_de
from ...data_classes import AlgorithmId, ProblemSet
from ...ktrn import KtrnRecorder
from ..test_helper import small_config


def test_independent_runs_record_empty_graphs(problem: ProblemSet):
    recorder = KtrnRecorder(problem.n_tasks)
    result = run_st_de(problem, small_config(AlgorithmId.ST_DE), recorder)
    assert recorder.event_log == []
    assert all(graph.edge_count == 0 for graph in result.graphs)
    assert result.events.tolist() == [0] * result.generations


def test_budget_is_spent_per_task(problem: ProblemSet):
    cfg = small_config(AlgorithmId.ST_DE, pop_size_per_task=12, max_evals_per_task=400)
    result = run_st_de(problem, cfg)
    assert np.all(result.eval_counts <= 400)
    assert np.all(result.eval_counts >= 400 - 12)
    assert result.generations == (400 - 12) // 12


def test_final_populations_are_reproducible(problem: ProblemSet):
    full = StDe(problem, small_config(AlgorithmId.ST_DE))
    full.run()
    again = StDe(problem, small_config(AlgorithmId.ST_DE))
    again.run()
    for first, second in zip(full.populations, again.populations):
        assert np.array_equal(first.genomes, second.genomes)


def test_search_improves_on_the_initial_population(problem: ProblemSet):
    result = run_st_de(problem, small_config(AlgorithmId.ST_DE, max_evals_per_task=1000))
    assert np.all(result.traces[-1] <= result.traces[0])
    assert np.any(result.traces[-1] < result.traces[0])
