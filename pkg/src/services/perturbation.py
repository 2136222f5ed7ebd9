"""
Pruning scenarios: random edge removal and random node isolation.

Selection always runs over elements in sorted index order, shuffled by a
seeded PCG64 stream, so results depend only on (graph, spec).
"""
import logging
from decimal import ROUND_HALF_UP, Decimal

import numpy as np

from src.exceptions import PerturbationError
from src.models.graph import Graph
from src.models.prune import PruneResult
from src.schemas import PruneMode, PruneSpec

logger = logging.getLogger(__name__)


def make_rng(seed: int) -> np.random.Generator:
    """
    Deterministic random stream for a 64-bit seed.

    PCG64 (128-bit state) seeded through ``SeedSequence`` produces the same
    sequence on every platform for the same seed.
    """
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed)))


def realized_count(fraction: float, total: int) -> int:
    """``fraction * total`` rounded half up in decimal arithmetic, at least 1."""
    count = (Decimal(str(fraction)) * total).quantize(Decimal(1), rounding=ROUND_HALF_UP)
    return max(1, int(count))


def remove_random_edges(g: Graph, spec: PruneSpec) -> PruneResult:
    """
    Delete a uniformly sampled set of edges; the node set is unchanged.

    Args:
        g: Graph to prune
        spec: Edge-removal spec; ``round_half_up(fraction * m)`` edges are removed

    Returns:
        PruneResult: Pruned copy and the removed edges in selection order

    Raises:
        PerturbationError: On a wrong mode, an edgeless graph or too many edges requested
    """
    if spec.mode is not PruneMode.EDGE_REMOVAL:
        raise PerturbationError(f"expected an edge-removal spec, got {spec.mode.value}")
    if g.m == 0:
        raise PerturbationError(f"graph '{g.name}' has no edges to remove")
    count = realized_count(spec.fraction, g.m)
    if count > g.m:
        raise PerturbationError(f"cannot remove {count} of {g.m} edges")

    edges = g.sorted_edges()
    order = make_rng(spec.seed).permutation(len(edges))[:count]
    removed = tuple(edges[k] for k in order)
    return PruneResult(g.without_edges(removed), removed, (), spec)


def isolate_random_nodes(g: Graph, spec: PruneSpec) -> PruneResult:
    """
    Strip every incident edge from a uniformly sampled set of non-isolated nodes.

    The isolated nodes stay in the graph. ``round_half_up(fraction * n)`` nodes
    are drawn from the nodes that currently have at least one edge.

    Raises:
        PerturbationError: On a wrong mode or when fewer non-isolated nodes exist than requested
    """
    if spec.mode is not PruneMode.NODE_ISOLATION:
        raise PerturbationError(f"expected a node-isolation spec, got {spec.mode.value}")
    degrees = g.degrees()
    universe = [i for i in range(g.n) if degrees[i] > 0]
    if not universe:
        raise PerturbationError(f"graph '{g.name}' has no non-isolated nodes")
    count = realized_count(spec.fraction, g.n)
    if count > len(universe):
        raise PerturbationError(
            f"cannot isolate {count} nodes, only {len(universe)} have edges"
        )

    order = make_rng(spec.seed).permutation(len(universe))[:count]
    chosen = tuple(universe[k] for k in order)
    targets = set(chosen)
    removed = tuple(e for e in g.sorted_edges() if e[0] in targets or e[1] in targets)
    return PruneResult(g.without_edges(removed), removed, chosen, spec)


def prune(g: Graph, spec: PruneSpec) -> PruneResult:
    """Apply the scenario named by ``spec.mode``."""
    if spec.mode is PruneMode.NODE_ISOLATION:
        return isolate_random_nodes(g, spec)
    return remove_random_edges(g, spec)
