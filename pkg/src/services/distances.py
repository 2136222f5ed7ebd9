"""
Single entry point over every graph distance.
"""
from typing import Optional, Union

from src.exceptions import ConfigError
from src.models.graph import Graph
from src.models.spectrum import MatrixKind
from src.schemas import MetricName
from src.services.affinity import (
    deltacon_similarity,
    edit_distance,
    root_euclidean_distance,
    shortest_path_matrix_distance,
)
from src.services.spectral import spectral_distance

_SPECTRAL = {
    MetricName.D_A: MatrixKind.ADJACENCY,
    MetricName.D_L: MatrixKind.LAPLACIAN,
    MetricName.D_NL: MatrixKind.NORMALIZED_LAPLACIAN,
}


def graph_distance(
    g1: Graph,
    g2: Graph,
    metric: Union[MetricName, str],
    k: Optional[int] = None,
    unreachable_value: Optional[float] = None,
) -> float:
    """
    Distance (or DeltaCon similarity) between two graphs.

    Args:
        g1: First graph
        g2: Second graph
        metric: One of dA, dL, dNL, dRootED, simDC, edit, spd
        k: Eigenvalue count for the spectral metrics
        unreachable_value: Stand-in for infinite hop distances (spd only)

    Raises:
        ConfigError: If ``k`` or ``unreachable_value`` is given for a metric that ignores it
    """
    metric = MetricName(metric)
    if k is not None and metric not in _SPECTRAL:
        raise ConfigError(f"k applies to spectral metrics only, not {metric.value}")
    if unreachable_value is not None and metric is not MetricName.SPD:
        raise ConfigError(f"unreachable value applies to spd only, not {metric.value}")

    if metric in _SPECTRAL:
        return spectral_distance(g1, g2, _SPECTRAL[metric], k)
    if metric is MetricName.D_ROOT_ED:
        return root_euclidean_distance(g1, g2)
    if metric is MetricName.SIM_DC:
        return deltacon_similarity(g1, g2)
    if metric is MetricName.EDIT:
        return edit_distance(g1, g2)
    return shortest_path_matrix_distance(g1, g2, unreachable_value)
