"""
Structural properties of a graph: degrees, clustering, components, hop distances.
"""
import logging
from collections import Counter
from typing import List, Set

import networkx as nx
import numpy as np
import pandas as pd

from src.exceptions import GraphError
from src.models.graph import DegreeDistribution, Graph, GraphProperties, NodeId

logger = logging.getLogger(__name__)

UNREACHABLE = np.inf


def degree(g: Graph, v: NodeId) -> int:
    """
    Number of edges incident to ``v``.

    Raises:
        GraphError: If ``v`` is not a node of ``g``
    """
    return len(g.neighbours(g.index_of(v)))


def degree_distribution(g: Graph) -> DegreeDistribution:
    """
    Normalised degree histogram ``p_k = n_k / n``; keys are the degrees present.

    Raises:
        GraphError: If the graph has no nodes
    """
    if g.n == 0:
        raise GraphError("degree distribution of an empty graph")
    counts = Counter(int(k) for k in g.degrees())
    return DegreeDistribution(dict(sorted(counts.items())), g.n)


def degree_histogram(g: Graph) -> pd.DataFrame:
    """Degree distribution as a frame with ``degree``, ``count`` and ``probability`` columns."""
    dist = degree_distribution(g)
    frame = pd.DataFrame(
        {"degree": list(dist.counts.keys()), "count": list(dist.counts.values())}
    )
    frame["probability"] = frame["count"] / dist.n
    return frame


def clustering_coefficient(g: Graph, v: NodeId) -> float:
    """
    Local clustering coefficient ``2 L_v / (k_v (k_v - 1))``; 0 when ``k_v < 2``.

    Raises:
        GraphError: If ``v`` is not a node of ``g``
    """
    i = g.index_of(v)
    return float(nx.clustering(g.to_networkx(), i))


def average_clustering(g: Graph) -> float:
    """Mean local clustering coefficient over all nodes, isolates counted as 0."""
    if g.n == 0:
        raise GraphError("average clustering of an empty graph")
    return float(nx.average_clustering(g.to_networkx()))


def connected_components(g: Graph) -> List[Set[NodeId]]:
    """
    Partition of the node set into connected components.

    Isolates are singleton components. Components are ordered by their smallest
    node id.
    """
    parts = [{g.node_ids[i] for i in part} for part in nx.connected_components(g.to_networkx())]
    return sorted(parts, key=min)


def shortest_path_lengths(g: Graph) -> np.ndarray:
    """
    Hop-count distance matrix computed by breadth-first search.

    Returns:
        np.ndarray: Symmetric ``n x n`` float matrix, ``inf`` for unreachable pairs
    """
    dist = np.full((g.n, g.n), UNREACHABLE)
    for source, lengths in nx.all_pairs_shortest_path_length(g.to_networkx()):
        targets = np.fromiter(lengths.keys(), dtype=np.int64, count=len(lengths))
        dist[source, targets] = np.fromiter(lengths.values(), dtype=float, count=len(lengths))
    return dist


def _max_component_average_path(g: Graph, dist: np.ndarray) -> float:
    """Largest per-component mean hop distance over unordered pairs."""
    best = 0.0
    for part in nx.connected_components(g.to_networkx()):
        if len(part) < 2:
            continue
        members = np.fromiter(part, dtype=np.int64)
        sub = dist[np.ix_(members, members)]
        upper = sub[np.triu_indices(len(members), k=1)]
        best = max(best, float(upper.mean()))
    return best


def graph_properties(g: Graph) -> GraphProperties:
    """
    Compute the full property report of a graph.

    Args:
        g: Graph with at least one node

    Returns:
        GraphProperties: Node/edge counts, components, path lengths, density,
        degree statistics and average clustering

    Raises:
        GraphError: If the graph has no nodes
    """
    if g.n == 0:
        raise GraphError("properties of an empty graph")

    degrees = g.degrees()
    dist = shortest_path_lengths(g)
    finite = dist[np.isfinite(dist)]
    n_components = len(connected_components(g))

    props = GraphProperties(
        n=g.n,
        n_isolated=int(np.count_nonzero(degrees == 0)),
        m=g.m,
        n_components=n_components,
        max_avg_path_length=_max_component_average_path(g, dist),
        max_shortest_path=int(finite.max()) if finite.size else 0,
        density=2.0 * g.m / (g.n * (g.n - 1)) if g.n >= 2 else 0.0,
        avg_degree=2.0 * g.m / g.n,
        max_degree=int(degrees.max()),
        avg_clustering=average_clustering(g),
        connected=n_components == 1,
        weighted=g.is_weighted,
    )
    logger.debug(f"Properties of '{g.name}': {props}")
    return props


def strip_isolates(g: Graph) -> Graph:
    """Copy of ``g`` without degree-0 nodes; edges unchanged."""
    degrees = g.degrees()
    keep = [i for i in range(g.n) if degrees[i] > 0]
    if len(keep) == g.n:
        return g
    return g.induced(keep)
