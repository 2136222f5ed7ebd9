"""
Matrix distances between graphs: DeltaCon / root Euclidean distance over fast
belief propagation affinities, edit distance and shortest-path matrix distance.
"""
import logging
from typing import Optional, Tuple

import numpy as np

from src.exceptions import AffinityError
from src.models.affinity import AffinityMatrix, PairwiseDistanceMatrix
from src.models.graph import Graph
from src.services.properties import shortest_path_lengths

logger = logging.getLogger(__name__)

NEGATIVE_TOLERANCE = 1e-9


def fbp_epsilon(g: Graph) -> float:
    """``1 / (1 + max degree)``."""
    max_degree = int(g.degrees().max()) if g.n else 0
    return 1.0 / (1.0 + max_degree)


def fbp_matrix(g: Graph) -> AffinityMatrix:
    """
    Exact fast belief propagation matrix of the binarized graph.

    Solves ``(I + eps^2 D - eps A) S = I`` by LU with partial pivoting.

    Raises:
        AffinityError: If the graph is empty or the system is singular
    """
    if g.n == 0:
        raise AffinityError("affinity matrix of an empty graph")
    eps = fbp_epsilon(g)
    a = g.adjacency_matrix()
    system = np.eye(g.n) + eps * eps * np.diag(a.sum(axis=1)) - eps * a
    try:
        s = np.linalg.solve(system, np.eye(g.n))
    except np.linalg.LinAlgError as e:
        raise AffinityError(f"singular belief propagation system for '{g.name}': {e}") from None
    return AffinityMatrix(eps, s)


def fbp_series(g: Graph, order: int) -> np.ndarray:
    """
    Power-series approximation ``I + eps A + eps^2 (A^2 - D) + ...`` truncated at ``eps^order``.

    The coefficients follow ``C_k = A C_{k-1} - D C_{k-2}`` with ``C_0 = I``.
    """
    if order < 1:
        raise AffinityError(f"series order must be at least 1, got {order}")
    eps = fbp_epsilon(g)
    a = g.adjacency_matrix()
    d = np.diag(a.sum(axis=1))
    prev = np.zeros_like(a)
    current = np.eye(g.n)
    total = current.copy()
    for k in range(1, order + 1):
        prev, current = current, a @ current - d @ prev
        total += eps ** k * current
    return total


def _sqrt_affinity(s: np.ndarray) -> np.ndarray:
    """Entrywise square root, clamping round-off negatives."""
    low = float(s.min()) if s.size else 0.0
    if low < -NEGATIVE_TOLERANCE:
        raise AffinityError(f"negative affinity {low:.3e}")
    return np.sqrt(np.clip(s, 0.0, None))


def _aligned(g1: Graph, g2: Graph) -> Tuple[Graph, Graph]:
    n = max(g1.n, g2.n)
    return g1.padded_to(n), g2.padded_to(n)


def root_euclidean_from_roots(root1: np.ndarray, root2: np.ndarray) -> float:
    """Root Euclidean distance given entrywise square roots of two affinity matrices."""
    diff = root1 - root2
    return float(np.sqrt(np.sum(diff * diff)))


def sqrt_affinity(g: Graph) -> np.ndarray:
    """Entrywise square root of the graph's affinity matrix."""
    return _sqrt_affinity(fbp_matrix(g).entries)


def root_euclidean_distance(g1: Graph, g2: Graph) -> float:
    """
    Matsusita difference between the affinity matrices of two graphs.

    The smaller graph is padded with isolated nodes when node counts differ.

    Raises:
        AffinityError: If an affinity entry is substantially negative
    """
    g1, g2 = _aligned(g1, g2)
    return root_euclidean_from_roots(sqrt_affinity(g1), sqrt_affinity(g2))


def similarity_from_distance(d_root: float) -> float:
    """DeltaCon similarity ``1 / (1 + d_rootED)``."""
    return 1.0 / (1.0 + d_root)


def deltacon_similarity(g1: Graph, g2: Graph) -> float:
    """DeltaCon similarity in ``(0, 1]``; 1 iff the affinity matrices coincide."""
    return similarity_from_distance(root_euclidean_distance(g1, g2))


def _same_order(g1: Graph, g2: Graph) -> None:
    if g1.n != g2.n:
        raise AffinityError(f"node counts differ ({g1.n} vs {g2.n})")


def edit_distance(g1: Graph, g2: Graph) -> float:
    """
    Number of node pairs whose adjacency differs (half the entrywise L1 norm of ``A - A'``).

    Raises:
        AffinityError: If node counts differ
    """
    _same_order(g1, g2)
    return float(np.abs(g1.adjacency_matrix() - g2.adjacency_matrix()).sum() / 2.0)


def pairwise_distance_matrix(g: Graph, unreachable_value: Optional[float] = None) -> PairwiseDistanceMatrix:
    """Hop-distance matrix with ``inf`` replaced by ``unreachable_value`` (default ``n``)."""
    value = float(g.n) if unreachable_value is None else float(unreachable_value)
    if not value > 0:
        raise AffinityError(f"unreachable value must be positive, got {value}")
    dist = shortest_path_lengths(g)
    return PairwiseDistanceMatrix(value, np.where(np.isinf(dist), value, dist))


def shortest_path_matrix_distance(
    g1: Graph, g2: Graph, unreachable_value: Optional[float] = None
) -> float:
    """
    Frobenius norm of the difference of the hop-distance matrices.

    Args:
        g1: First graph
        g2: Second graph, same node count
        unreachable_value: Stand-in for infinite distances (default ``n``)

    Raises:
        AffinityError: If node counts differ or ``unreachable_value`` is not positive
    """
    _same_order(g1, g2)
    m1 = pairwise_distance_matrix(g1, unreachable_value).entries
    m2 = pairwise_distance_matrix(g2, unreachable_value).entries
    return float(np.linalg.norm(m1 - m2, ord="fro"))
