"""Variation operators on the unified space [0,1]^D.
Every operator draws only from the generator it is given and clamps its output to [0,1].
"""
from typing import Optional, Tuple

import numpy as np

from ..data_classes import Subpopulation
from .exceptions import OperatorError


def clamp(genome: np.ndarray) -> np.ndarray:
    return np.clip(genome, 0.0, 1.0)


def binomial_crossover(target: np.ndarray, donor: np.ndarray, CR: float, rng: np.random.Generator) -> np.ndarray:
    """Takes each gene from the donor with probability CR; one random gene always comes from the donor."""
    if target.shape != donor.shape:
        raise OperatorError(f'cannot cross genomes of shape {target.shape} and {donor.shape}')
    mask = rng.random(target.shape[-1]) < CR
    mask[rng.integers(target.shape[-1])] = True
    return np.where(mask, donor, target)


def de_rand_1_bin(pop: Subpopulation, target_index: int, F: float, CR: float,
                  rng: np.random.Generator) -> np.ndarray:
    """DE/rand/1/bin trial vector for the member at `target_index`."""
    if pop.size < 4:
        raise OperatorError(f'DE/rand/1 needs at least 4 members, task {pop.task_id} has {pop.size}')
    if not 0 < CR <= 1:
        raise OperatorError(f'CR must be in (0, 1], got {CR}')
    if F < 0:
        raise OperatorError(f'F must not be negative, got {F}')

    candidates = np.delete(np.arange(pop.size), target_index)
    r1, r2, r3 = rng.choice(candidates, size=3, replace=False)
    mutant = pop.genomes[r1] + F * (pop.genomes[r2] - pop.genomes[r3])
    return clamp(binomial_crossover(pop.genomes[target_index], mutant, CR, rng))


def sbx_crossover(p1: np.ndarray, p2: np.ndarray, eta_c: float, rng: np.random.Generator,
                  ) -> Tuple[np.ndarray, np.ndarray]:
    """Simulated binary crossover. The two children swap each gene with probability 0.5."""
    if p1.shape != p2.shape:
        raise OperatorError(f'cannot cross genomes of shape {p1.shape} and {p2.shape}')
    if eta_c <= 0:
        raise OperatorError(f'eta_c must be positive, got {eta_c}')

    u = rng.random(p1.shape[-1])
    beta = np.where(u <= 0.5,
                    (2.0 * u)**(1.0 / (eta_c + 1.0)),
                    (1.0 / (2.0 * (1.0 - u)))**(1.0 / (eta_c + 1.0)))
    c1 = 0.5 * ((1.0 + beta) * p1 + (1.0 - beta) * p2)
    c2 = 0.5 * ((1.0 - beta) * p1 + (1.0 + beta) * p2)
    swap = rng.random(p1.shape[-1]) < 0.5
    c1, c2 = np.where(swap, c2, c1), np.where(swap, c1, c2)
    return clamp(c1), clamp(c2)


def polynomial_mutation(genome: np.ndarray, eta_m: float, p_m: Optional[float],
                        rng: np.random.Generator) -> np.ndarray:
    """Bounded polynomial mutation; `p_m=None` mutates one gene per genome on average."""
    if eta_m <= 0:
        raise OperatorError(f'eta_m must be positive, got {eta_m}')
    n_vars = genome.shape[-1]
    p_m = 1.0 / n_vars if p_m is None else p_m
    if not 0 <= p_m <= 1:
        raise OperatorError(f'p_m must be in [0, 1], got {p_m}')

    mutate = rng.random(n_vars) < p_m
    u = rng.random(n_vars)
    x = np.array(genome, dtype=np.float64)
    exponent = 1.0 / (eta_m + 1.0)

    lower_side = 2.0 * u + (1.0 - 2.0 * u) * (1.0 - x)**(eta_m + 1.0)
    upper_side = 2.0 * (1.0 - u) + 2.0 * (u - 0.5) * x**(eta_m + 1.0)
    delta_q = np.where(u < 0.5, lower_side**exponent - 1.0, 1.0 - upper_side**exponent)

    return clamp(np.where(mutate, x + delta_q, x))
