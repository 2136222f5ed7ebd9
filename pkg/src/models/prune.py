"""
Result of pruning a graph.
"""
from dataclasses import dataclass
from typing import List, Tuple

from src.models.graph import Edge, Graph, NodeId
from src.schemas import PruneSpec


@dataclass(frozen=True)
class PruneResult:
    """A pruned graph plus what was taken out of it."""

    pruned: Graph
    removed_edges: Tuple[Edge, ...]
    isolated_nodes: Tuple[int, ...]
    spec: PruneSpec

    def removed_edge_ids(self) -> List[Tuple[NodeId, NodeId]]:
        ids = self.pruned.node_ids
        return [(ids[i], ids[j]) for i, j in self.removed_edges]

    def isolated_node_ids(self) -> List[NodeId]:
        return [self.pruned.node_ids[i] for i in self.isolated_nodes]
