import numpy as np
import pytest

from ...data_classes import EliteArchive, Subpopulation, TaskDef
from ...eacore import (OperatorError, binomial_crossover, de_rand_1_bin, decode, encode, polynomial_mutation,
                       sbx_crossover)


def _subpopulation(size: int = 10, length: int = 6, seed: int = 0) -> Subpopulation:
    rng = np.random.default_rng(seed)
    return Subpopulation(task_id=0, genomes=rng.random((size, length)), fitness=rng.random(size),
                         elite_archive=EliteArchive(5))


def _task(dim: int = 3, lower: float = -1.0, upper: float = 1.0) -> TaskDef:
    return TaskDef(task_id=0, base='sphere', shift=np.zeros(dim), rotation=np.eye(dim),
                   lower=np.full(dim, lower), upper=np.full(dim, upper))


def test_decode():
    task = _task()
    assert np.array_equal(decode(np.full(5, 0.5), task), np.zeros(3))
    assert np.array_equal(decode(np.zeros(5), task), task.lower)
    assert decode(np.random.default_rng(0).random((4, 5)), task).shape == (4, 3)


def test_decode_then_encode_reproduces_genome():
    task = _task(dim=4, lower=-600, upper=600)
    genome = np.random.default_rng(1).random(4)
    assert np.allclose(encode(decode(genome, task), task, 4), genome, atol=1e-12)


def test_de_with_zero_F_takes_genes_from_r1_or_target():
    pop = _subpopulation()
    trial = de_rand_1_bin(pop, 0, 0.0, 0.5, np.random.default_rng(2))
    r1 = np.random.default_rng(2).choice(np.delete(np.arange(pop.size), 0), size=3, replace=False)[0]
    assert np.all(np.isclose(trial, pop.genomes[0]) | np.isclose(trial, pop.genomes[r1]))


def test_de_with_full_crossover_uses_mutant_only():
    pop = _subpopulation()
    rng = np.random.default_rng(3)
    trial = de_rand_1_bin(pop, 0, 0.5, 1.0, rng)
    rng = np.random.default_rng(3)
    candidates = np.delete(np.arange(pop.size), 0)
    r1, r2, r3 = rng.choice(candidates, size=3, replace=False)
    expected = np.clip(pop.genomes[r1] + 0.5 * (pop.genomes[r2] - pop.genomes[r3]), 0, 1)
    assert np.allclose(trial, expected)


def test_de_is_deterministic_and_bounded():
    pop = _subpopulation()
    first = de_rand_1_bin(pop, 4, 0.9, 0.9, np.random.default_rng(4))
    second = de_rand_1_bin(pop, 4, 0.9, 0.9, np.random.default_rng(4))
    assert np.array_equal(first, second)
    assert np.all((first >= 0) & (first <= 1))


def test_de_errors():
    with pytest.raises(OperatorError):
        de_rand_1_bin(_subpopulation(size=3), 0, 0.5, 0.9, np.random.default_rng(0))
    with pytest.raises(OperatorError):
        de_rand_1_bin(_subpopulation(), 0, 0.5, 0.0, np.random.default_rng(0))
    with pytest.raises(OperatorError):
        de_rand_1_bin(_subpopulation(), 0, -0.1, 0.9, np.random.default_rng(0))


def test_binomial_crossover_takes_at_least_one_donor_gene():
    target, donor = np.zeros(10), np.ones(10)
    for seed in range(20):
        child = binomial_crossover(target, donor, 1e-9, np.random.default_rng(seed))
        assert child.sum() == 1.0
    with pytest.raises(OperatorError):
        binomial_crossover(np.zeros(3), np.zeros(4), 0.5, np.random.default_rng(0))


def test_sbx_identity_and_midpoint():
    rng = np.random.default_rng(5)
    parent = rng.random(8)
    c1, c2 = sbx_crossover(parent, parent.copy(), 2.0, rng)
    assert np.allclose(c1, parent) and np.allclose(c2, parent)

    p1, p2 = np.full(8, 0.4), np.full(8, 0.6)
    c1, c2 = sbx_crossover(p1, p2, 2.0, np.random.default_rng(6))
    inside = (c1 > 0) & (c1 < 1) & (c2 > 0) & (c2 < 1)
    assert np.allclose(((c1 + c2) / 2)[inside], 0.5)


def test_sbx_reproducible_and_checked():
    p1, p2 = np.random.default_rng(7).random((2, 6))
    first = sbx_crossover(p1, p2, 2.0, np.random.default_rng(8))
    second = sbx_crossover(p1, p2, 2.0, np.random.default_rng(8))
    assert np.array_equal(first[0], second[0]) and np.array_equal(first[1], second[1])
    with pytest.raises(OperatorError):
        sbx_crossover(np.zeros(3), np.zeros(4), 2.0, np.random.default_rng(0))


def test_polynomial_mutation():
    genome = np.random.default_rng(9).random(12)
    assert np.array_equal(polynomial_mutation(genome, 5.0, 0.0, np.random.default_rng(0)), genome)
    for seed in range(20):
        mutated = polynomial_mutation(genome, 5.0, 1.0, np.random.default_rng(seed))
        assert mutated.shape == genome.shape
        assert np.all((mutated >= 0) & (mutated <= 1))
    assert np.array_equal(polynomial_mutation(genome, 5.0, None, np.random.default_rng(1)),
                          polynomial_mutation(genome, 5.0, None, np.random.default_rng(1)))
