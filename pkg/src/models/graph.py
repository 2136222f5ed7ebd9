"""
Graph data model.

A ``Graph`` is an immutable undirected simple graph over a declared, ordered
node set. Edges are stored as index pairs ``(i, j)`` with ``i < j`` into
``node_ids``, which keeps matrix construction and seeded sampling independent
of hashing order. Weights are carried along for reporting only; every metric
works on the binarized edge set.
"""
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

import networkx as nx
import numpy as np

from src.exceptions import GraphError

NodeId = Union[str, int]
Edge = Tuple[int, int]


def canonical_edge(i: int, j: int) -> Edge:
    """Return the ordered ``(min, max)`` form of an undirected index pair."""
    return (i, j) if i < j else (j, i)


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph with a declared node set."""

    node_ids: Tuple[NodeId, ...]
    edges: FrozenSet[Edge]
    weights: Mapping[Edge, float] = field(default_factory=dict)
    name: str = ""
    _index: Dict[NodeId, int] = field(init=False, repr=False, compare=False)
    _adjacency: Tuple[Tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        n = len(self.node_ids)
        index = {node: i for i, node in enumerate(self.node_ids)}
        if len(index) != n:
            raise GraphError(f"duplicate node identifiers in graph '{self.name}'")

        neighbours: List[List[int]] = [[] for _ in range(n)]
        for i, j in self.edges:
            if not (0 <= i < j < n):
                raise GraphError(f"invalid edge ({i}, {j}) for a graph with {n} nodes")
            neighbours[i].append(j)
            neighbours[j].append(i)
        for edge in self.weights:
            if edge not in self.edges:
                raise GraphError(f"weight given for missing edge {edge}")

        object.__setattr__(self, "_index", index)
        object.__setattr__(self, "_adjacency", tuple(tuple(sorted(nb)) for nb in neighbours))

    @classmethod
    def from_id_pairs(
        cls,
        node_ids: Sequence[NodeId],
        pairs: Iterable[Tuple[NodeId, NodeId]],
        weights: Optional[Mapping[Tuple[NodeId, NodeId], float]] = None,
        name: str = "",
    ) -> "Graph":
        """
        Build a graph from node-id pairs.

        Args:
            node_ids: Ordered node identifiers
            pairs: Edges as identifier pairs; (a, b) and (b, a) collapse
            weights: Optional weight per identifier pair
            name: Graph label

        Returns:
            Graph: The constructed graph

        Raises:
            GraphError: On self-loops or endpoints outside ``node_ids``
        """
        index = {node: i for i, node in enumerate(node_ids)}
        edges = set()
        edge_weights: Dict[Edge, float] = {}
        for a, b in pairs:
            if a not in index or b not in index:
                raise GraphError(f"edge ({a}, {b}) references an unknown node")
            if a == b:
                raise GraphError(f"self-loop on node {a}")
            edge = canonical_edge(index[a], index[b])
            edges.add(edge)
            if weights is not None and (a, b) in weights:
                edge_weights[edge] = float(weights[(a, b)])
        return cls(tuple(node_ids), frozenset(edges), edge_weights, name)

    @property
    def n(self) -> int:
        return len(self.node_ids)

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def is_weighted(self) -> bool:
        """True when any stored weight differs from 1."""
        return any(w != 1.0 for w in self.weights.values())

    @property
    def is_connected(self) -> bool:
        return self.n > 0 and nx.is_connected(self.to_networkx())

    def index_of(self, node: NodeId) -> int:
        """
        Position of a node identifier in ``node_ids``.

        Raises:
            GraphError: If the node is not part of the graph
        """
        try:
            return self._index[node]
        except KeyError:
            raise GraphError(f"unknown node id {node!r} in graph '{self.name}'") from None

    def has_node(self, node: NodeId) -> bool:
        return node in self._index

    def neighbours(self, i: int) -> Tuple[int, ...]:
        """Sorted neighbour indices of node index ``i``."""
        return self._adjacency[i]

    def degrees(self) -> np.ndarray:
        """Degree of every node, in ``node_ids`` order."""
        return np.fromiter((len(nb) for nb in self._adjacency), dtype=np.int64, count=self.n)

    def sorted_edges(self) -> List[Edge]:
        return sorted(self.edges)

    def edge_id_pairs(self) -> List[Tuple[NodeId, NodeId]]:
        """Edges as identifier pairs, in sorted index order."""
        return [(self.node_ids[i], self.node_ids[j]) for i, j in self.sorted_edges()]

    def adjacency_matrix(self) -> np.ndarray:
        """Dense binarized adjacency matrix."""
        a = np.zeros((self.n, self.n), dtype=float)
        if self.edges:
            rows, cols = np.array(self.sorted_edges()).T
            a[rows, cols] = 1.0
            a[cols, rows] = 1.0
        return a

    def to_networkx(self) -> nx.Graph:
        """networkx view of the binarized graph, nodes labelled by index."""
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges)
        return g

    def binarized(self) -> "Graph":
        """Same graph with stored weights dropped."""
        return Graph(self.node_ids, self.edges, {}, self.name)

    def without_edges(self, removed: Iterable[Edge]) -> "Graph":
        """Copy with the given index edges deleted; node set unchanged."""
        drop = set(removed)
        edges = self.edges - drop
        weights = {e: w for e, w in self.weights.items() if e in edges}
        return Graph(self.node_ids, frozenset(edges), weights, self.name)

    def isolating(self, nodes: Iterable[int]) -> "Graph":
        """Copy where the given node indices lose all incident edges."""
        targets = set(nodes)
        drop = [e for e in self.edges if e[0] in targets or e[1] in targets]
        return self.without_edges(drop)

    def induced(self, keep: Sequence[int]) -> "Graph":
        """Subgraph induced by the given node indices (kept in the given order)."""
        remap = {old: new for new, old in enumerate(keep)}
        edges = set()
        weights: Dict[Edge, float] = {}
        for i, j in self.edges:
            if i in remap and j in remap:
                edge = canonical_edge(remap[i], remap[j])
                edges.add(edge)
                if (i, j) in self.weights:
                    weights[edge] = self.weights[(i, j)]
        return Graph(tuple(self.node_ids[k] for k in keep), frozenset(edges), weights, self.name)

    def padded_to(self, n: int) -> "Graph":
        """Copy extended with isolated nodes up to ``n`` nodes."""
        if n <= self.n:
            return self
        extra = []
        k = 0
        while len(extra) < n - self.n:
            candidate = f"__pad{k}"
            if candidate not in self._index:
                extra.append(candidate)
            k += 1
        return Graph(self.node_ids + tuple(extra), self.edges, self.weights, self.name)


@dataclass(frozen=True)
class GraphProperties:
    """Structural statistics of one graph (one column of the property tables)."""

    n: int
    n_isolated: int
    m: int
    n_components: int
    max_avg_path_length: float
    max_shortest_path: int
    density: float
    avg_degree: float
    max_degree: int
    avg_clustering: float
    connected: bool
    weighted: bool

    def as_dict(self) -> Dict[str, Union[int, float, bool]]:
        return {
            "n": self.n,
            "n_isolated": self.n_isolated,
            "m": self.m,
            "n_components": self.n_components,
            "max_avg_path_length": self.max_avg_path_length,
            "max_shortest_path": self.max_shortest_path,
            "density": self.density,
            "avg_degree": self.avg_degree,
            "max_degree": self.max_degree,
            "avg_clustering": self.avg_clustering,
            "connected": self.connected,
            "weighted": self.weighted,
        }


@dataclass(frozen=True)
class DegreeDistribution:
    """Normalised degree histogram: ``p_k = n_k / n``."""

    counts: Mapping[int, int]
    n: int

    @property
    def entries(self) -> Dict[int, float]:
        return {k: c / self.n for k, c in sorted(self.counts.items())}

    def __getitem__(self, k: int) -> float:
        return self.counts[k] / self.n

    def __len__(self) -> int:
        return len(self.counts)
