import numpy as np
import pytest

from ...data_classes import UNEVALUATED, EliteArchive, GaussianSummary
from ...eacore import (BudgetExhaustedError, TaskEvaluator, de_generation, factorial_ranks, init_subpopulation,
                       mf_individuals, scalar_fitness_and_skill, unevaluated_costs)
from ..test_helper import small_problem


def test_evaluator_counts_and_tracks_best():
    evaluator = TaskEvaluator(small_problem(), 30)
    rng = np.random.default_rng(0)
    values = evaluator.evaluate(2, rng.random((10, 5)))
    assert values.shape == (10,)
    assert evaluator.counts.tolist() == [0, 0, 10, 0, 0, 0]
    assert evaluator.best[2] == values.min()
    assert np.all(np.isinf(np.delete(evaluator.best, 2)))

    single = evaluator.evaluate_one(2, rng.random(5))
    assert evaluator.counts[2] == 11
    assert evaluator.best[2] == min(values.min(), single)
    assert evaluator.remaining(2) == 19


def test_evaluator_budget():
    evaluator = TaskEvaluator(small_problem(), 20)
    rng = np.random.default_rng(1)
    assert evaluator.can_afford(20)
    evaluator.evaluate(0, rng.random((15, 5)))
    assert not evaluator.can_afford(10)
    assert evaluator.can_afford(5)
    with pytest.raises(BudgetExhaustedError):
        evaluator.evaluate(0, rng.random((6, 5)))
    assert evaluator.counts[0] == 15


def test_hard_cap_allows_overshoot_up_to_cap():
    evaluator = TaskEvaluator(small_problem(), 20, hard_cap=25)
    rng = np.random.default_rng(2)
    evaluator.evaluate(1, rng.random((25, 5)))
    assert not evaluator.can_afford(0)
    with pytest.raises(BudgetExhaustedError):
        evaluator.evaluate_one(1, rng.random(5))


def test_de_generation_never_worsens_a_member():
    evaluator = TaskEvaluator(small_problem(), 1000)
    rng = np.random.default_rng(3)
    pop = init_subpopulation(0, 12, evaluator, rng)
    for _ in range(10):
        before = pop.fitness.copy()
        replaced = de_generation(pop, evaluator, 0.5, 0.9, rng)
        assert np.all(pop.fitness <= before)
        assert replaced >= np.count_nonzero(pop.fitness < before)
    assert evaluator.counts[0] == 12 * 11
    assert np.all((pop.genomes >= 0) & (pop.genomes <= 1))


def test_factorial_ranks_and_skill():
    costs = np.array([[1.0, UNEVALUATED],
                      [3.0, 0.5],
                      [UNEVALUATED, 0.2],
                      [1.0, 0.9]])
    ranks = factorial_ranks(costs)
    assert ranks[:, 0].tolist() == [1, 3, 5, 2]
    assert ranks[:, 1].tolist() == [5, 2, 1, 3]

    scalar, skill = scalar_fitness_and_skill(ranks)
    assert scalar.tolist() == [1.0, 0.5, 1.0, 0.5]
    assert skill.tolist() == [0, 1, 1, 0]


def test_mf_individuals():
    genomes = np.random.default_rng(4).random((3, 4))
    costs = unevaluated_costs(3, 2)
    costs[0, 0], costs[1, 1], costs[2, 0] = 5.0, 1.0, 2.0
    individuals = mf_individuals(genomes, costs)
    assert [i.skill_factor for i in individuals] == [0, 1, 0]
    assert [i.scalar_fitness for i in individuals] == [0.5, 1.0, 1.0]
    assert np.array_equal(individuals[1].genome, genomes[1])


def test_elite_archive_drops_oldest():
    archive = EliteArchive(3)
    for value in range(5):
        archive.add(np.full(2, float(value)))
    assert len(archive) == 3
    assert archive.as_array()[:, 0].tolist() == [2.0, 3.0, 4.0]
    assert archive.pick(np.random.default_rng(0))[0] in (2.0, 3.0, 4.0)


def test_gaussian_summary_variance_floor():
    summary = GaussianSummary.fit(np.ones((4, 3)))
    assert np.array_equal(summary.mean, np.ones(3))
    assert np.all(summary.variance == 1e-12)
