import sys
from dataclasses import dataclass
from typing import List

import numpy as np

from .exceptions import ConfigurationError

KWONLY_SLOTS = {'kw_only': True, 'slots': True} if sys.version_info >= (3, 10) else {}

MAX_ITERATIONS = 100
TOLERANCE = 1e-9


@dataclass(**KWONLY_SLOTS)
class KMeansResult():
    labels: np.ndarray
    centroids: np.ndarray
    empty: np.ndarray
    inertia: float

    def members(self, cluster: int) -> np.ndarray:
        return np.flatnonzero(self.labels == cluster)

    def clusters(self) -> List[np.ndarray]:
        return [self.members(c) for c in range(self.centroids.shape[0])]


def _squared_distances(points: np.ndarray, centroids: np.ndarray) -> np.ndarray:
    return np.sum((points[:, None, :] - centroids[None, :, :])**2, axis=2)


def kmeans_plusplus_init(points: np.ndarray, k: int, rng: np.random.Generator) -> np.ndarray:
    n_points = points.shape[0]
    centroids = np.empty((k, points.shape[1]))
    centroids[0] = points[rng.integers(n_points)]
    for i in range(1, k):
        dist_sq = _squared_distances(points, centroids[:i]).min(axis=1)
        total = dist_sq.sum()
        if total > 0:
            next_index = rng.choice(n_points, p=dist_sq / total)
        else:  # all points coincide with chosen centroids
            next_index = rng.integers(n_points)
        centroids[i] = points[next_index]
    return centroids


def _repair_empty_clusters(points: np.ndarray, labels: np.ndarray, centroids: np.ndarray, k: int) -> np.ndarray:
    """Every empty cluster steals the point farthest from its centroid out of the largest cluster."""
    labels = labels.copy()
    for cluster in range(k):
        if np.any(labels == cluster):
            continue
        sizes = np.bincount(labels, minlength=k)
        largest = int(np.argmax(sizes))
        if sizes[largest] < 2:
            continue
        members = np.flatnonzero(labels == largest)
        center = points[members].mean(axis=0)
        farthest = members[int(np.argmax(np.sum((points[members] - center)**2, axis=1)))]
        labels[farthest] = cluster
        centroids[cluster] = points[farthest]
    return labels


def kmeans(points: np.ndarray, k: int, rng: np.random.Generator) -> KMeansResult:
    """Lloyd's k-means with k-means++ seeding; deterministic for a given generator state.
    With more clusters than points every point gets its own cluster and the rest are flagged empty.
    """
    points = np.atleast_2d(np.asarray(points, dtype=np.float64))
    n_points = points.shape[0]
    if k < 1:
        raise ConfigurationError(f'k-means needs at least one cluster, got {k}')
    if n_points == 0:
        raise ConfigurationError('k-means needs at least one point')

    if k >= n_points:
        centroids = np.zeros((k, points.shape[1]))
        centroids[:n_points] = points
        empty = np.arange(k) >= n_points
        return KMeansResult(labels=np.arange(n_points), centroids=centroids, empty=empty, inertia=0.0)

    centroids = kmeans_plusplus_init(points, k, rng)
    labels = np.zeros(n_points, dtype=np.int64)
    for _ in range(MAX_ITERATIONS):
        labels = np.argmin(_squared_distances(points, centroids), axis=1)
        labels = _repair_empty_clusters(points, labels, centroids, k)
        new_centroids = np.array([points[labels == c].mean(axis=0) for c in range(k)])
        movement = np.max(np.linalg.norm(new_centroids - centroids, axis=1))
        centroids = new_centroids
        if movement < TOLERANCE:
            break

    inertia = float(np.sum((points - centroids[labels])**2))
    empty = np.bincount(labels, minlength=k) == 0
    return KMeansResult(labels=labels, centroids=centroids, empty=empty, inertia=inertia)
