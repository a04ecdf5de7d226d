import numpy as np

from ..data_classes import GaussianSummary
from ..eacore import clamp


def fit_summary(genomes: np.ndarray) -> GaussianSummary:
    return GaussianSummary.fit(genomes)


def sample(summary: GaussianSummary, rng: np.random.Generator) -> np.ndarray:
    """Draws one genome component-wise from the summary and clamps it to the unified space."""
    return clamp(rng.normal(summary.mean, np.sqrt(summary.variance)))


def kl_divergence(p: GaussianSummary, q: GaussianSummary) -> float:
    """KL(p || q) of two diagonal Gaussians."""
    ratio = p.variance / q.variance
    return float(0.5 * np.sum(ratio + (q.mean - p.mean)**2 / q.variance - 1.0 - np.log(ratio)))


def symmetric_kld(p: GaussianSummary, q: GaussianSummary) -> float:
    return kl_divergence(p, q) + kl_divergence(q, p)
