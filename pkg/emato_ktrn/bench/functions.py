"""Base objective functions of the benchmark.
All functions take points along the last axis, so a single point (D,) and a batch (m, D) are both accepted.
"""
import sys
from dataclasses import dataclass
from typing import Callable, Dict, Union

import numpy as np

from ..data_classes import BaseFunctionId
from .exceptions import BenchmarkError

KWONLY_SLOTS = {'kw_only': True, 'slots': True} if sys.version_info >= (3, 10) else {}

SCHWEFEL_CONSTANT = 418.9828872724338
SCHWEFEL_OPTIMUM = 420.9687462275036
SCHWEFEL_BOUND = 500.0

WEIERSTRASS_A = 0.5
WEIERSTRASS_B = 3.0
WEIERSTRASS_K_MAX = 20


def sphere(x: np.ndarray) -> np.ndarray:
    return np.sum(x**2, axis=-1)


def ackley(x: np.ndarray, a: float = 20.0, b: float = 0.2, c: float = 2 * np.pi) -> np.ndarray:
    dim = x.shape[-1]
    term1 = -a * np.exp(-b * np.sqrt(np.sum(x**2, axis=-1) / dim))
    term2 = -np.exp(np.sum(np.cos(c * x), axis=-1) / dim)
    return term1 + term2 + a + np.e


def rosenbrock(x: np.ndarray) -> np.ndarray:
    if x.shape[-1] < 2:
        return (1.0 - x[..., 0])**2
    return np.sum(100.0 * (x[..., 1:] - x[..., :-1]**2)**2 + (1.0 - x[..., :-1])**2, axis=-1)


def rastrigin(x: np.ndarray) -> np.ndarray:
    dim = x.shape[-1]
    return 10.0 * dim + np.sum(x**2 - 10.0 * np.cos(2 * np.pi * x), axis=-1)


def griewank(x: np.ndarray) -> np.ndarray:
    i = np.arange(1, x.shape[-1] + 1)
    return 1.0 + np.sum(x**2, axis=-1) / 4000.0 - np.prod(np.cos(x / np.sqrt(i)), axis=-1)


def weierstrass(x: np.ndarray) -> np.ndarray:
    k = np.arange(WEIERSTRASS_K_MAX + 1)
    ak = WEIERSTRASS_A**k
    bk = WEIERSTRASS_B**k
    dim = x.shape[-1]
    # argument shaped (..., D, k)
    series = np.sum(ak * np.cos(2.0 * np.pi * bk * (x[..., None] + 0.5)), axis=-1)
    offset = dim * np.sum(ak * np.cos(2.0 * np.pi * bk * 0.5))
    return np.sum(series, axis=-1) - offset


def schwefel(x: np.ndarray) -> np.ndarray:
    """Coordinates beyond +-500 are mirrored back into the domain and pay a quadratic penalty,
    so no point scores below the optimum.
    """
    dim = x.shape[-1]
    inside = np.abs(x) <= SCHWEFEL_BOUND
    mirrored = np.sign(x) * (SCHWEFEL_BOUND - np.fmod(np.abs(x), SCHWEFEL_BOUND))
    y = np.where(inside, x, mirrored)
    penalty = np.where(inside, 0.0, (np.abs(x) - SCHWEFEL_BOUND)**2 / (1e4 * dim))
    return SCHWEFEL_CONSTANT * dim - np.sum(y * np.sin(np.sqrt(np.abs(y))) - penalty, axis=-1)


@dataclass(**KWONLY_SLOTS)
class BaseFunction():
    id: BaseFunctionId
    search_range: float
    optimum_value: float
    optimum_coordinate: float
    function: Callable[[np.ndarray], np.ndarray]

    def optimum_point(self, dim: int) -> np.ndarray:
        return np.full(dim, self.optimum_coordinate, dtype=np.float64)


# box half-widths follow the textbook conventions
BASE_FUNCTIONS: Dict[BaseFunctionId, BaseFunction] = {
    BaseFunctionId.Sphere: BaseFunction(id=BaseFunctionId.Sphere, search_range=5.12,
                                        optimum_value=0.0, optimum_coordinate=0.0, function=sphere),
    BaseFunctionId.Ackley: BaseFunction(id=BaseFunctionId.Ackley, search_range=32.0,
                                        optimum_value=0.0, optimum_coordinate=0.0, function=ackley),
    BaseFunctionId.Rosenbrock: BaseFunction(id=BaseFunctionId.Rosenbrock, search_range=2.048,
                                            optimum_value=0.0, optimum_coordinate=1.0, function=rosenbrock),
    BaseFunctionId.Rastrigin: BaseFunction(id=BaseFunctionId.Rastrigin, search_range=5.12,
                                           optimum_value=0.0, optimum_coordinate=0.0, function=rastrigin),
    BaseFunctionId.Griewank: BaseFunction(id=BaseFunctionId.Griewank, search_range=600.0,
                                          optimum_value=0.0, optimum_coordinate=0.0, function=griewank),
    BaseFunctionId.Weierstrass: BaseFunction(id=BaseFunctionId.Weierstrass, search_range=0.5,
                                             optimum_value=0.0, optimum_coordinate=0.0, function=weierstrass),
    BaseFunctionId.Schwefel: BaseFunction(id=BaseFunctionId.Schwefel, search_range=500.0,
                                          optimum_value=0.0, optimum_coordinate=SCHWEFEL_OPTIMUM,
                                          function=schwefel),
}


def base_function(function_id: BaseFunctionId) -> BaseFunction:
    return BASE_FUNCTIONS[BaseFunctionId(function_id)]


def evaluate_base(function_id: BaseFunctionId, x: np.ndarray) -> Union[float, np.ndarray]:
    """Evaluates a base function in its native coordinates. Returns a float for a single point."""
    x = np.asarray(x, dtype=np.float64)
    if x.ndim == 0 or x.shape[-1] < 1:
        raise BenchmarkError('points need at least one dimension')
    if not np.all(np.isfinite(x)):
        raise BenchmarkError(f'cannot evaluate {function_id} at non-finite point')
    values = base_function(function_id).function(x)
    if np.ndim(values) == 0:
        return float(values)
    return values
