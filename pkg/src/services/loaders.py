"""
Graph ingestion: edge lists, 1-mode adjacency matrices and 2-mode incidence matrices.
"""
import enum
import logging
import os
from typing import Dict, List, Optional, Tuple

import numpy as np
import pandas as pd

from src.exceptions import GraphLoadError
from src.models.graph import Edge, Graph, NodeId, canonical_edge

logger = logging.getLogger(__name__)

SYMMETRY_TOLERANCE = 1e-9


class GraphFormat(enum.Enum):
    """Supported input formats."""
    EDGE_LIST = "edgelist"
    MATRIX = "matrix"
    TWO_MODE = "two-mode"


def _separator(delimiter: str) -> str:
    return r"\s+" if delimiter.isspace() else delimiter


def _cell(value: object) -> Optional[str]:
    """Normalise a raw pandas cell; ``None`` for missing or blank fields."""
    if value is None or (isinstance(value, float) and np.isnan(value)):
        return None
    text = str(value).strip()
    return text or None


def _is_number(value: object) -> bool:
    text = _cell(value)
    if text is None:
        return False
    try:
        float(text)
    except ValueError:
        return False
    return True


def _check_file(path: str) -> None:
    if not os.path.isfile(path):
        raise GraphLoadError(f"no such file: {path}")


def _read_raw(path: str, delimiter: str, width: Optional[int] = None) -> pd.DataFrame:
    """
    Read a delimited text file as a frame of strings.

    With ``width``, rows may be ragged: short rows are padded with missing
    cells, and a frame indexed by anything but row position means the first
    row was wider than ``width``.
    """
    _check_file(path)
    try:
        frame = pd.read_csv(
            path,
            sep=_separator(delimiter),
            header=None,
            names=list(range(width)) if width else None,
            comment="#",
            dtype=str,
            keep_default_na=False,
            skip_blank_lines=True,
            engine="python",
        )
    except pd.errors.EmptyDataError:
        raise GraphLoadError(f"empty file: {path}") from None
    except pd.errors.ParserError as e:
        raise GraphLoadError(f"malformed input in {path}: {e}") from None
    except UnicodeDecodeError as e:
        raise GraphLoadError(f"{path} is not valid UTF-8: {e}") from None
    if frame.empty:
        raise GraphLoadError(f"empty file: {path}")
    return frame


def load_edge_list(path: str, delimiter: str = ",", name: Optional[str] = None) -> Graph:
    """
    Load an undirected graph from an edge list.

    Each data row is ``source<delim>target[<delim>weight]``; ``#`` lines are
    comments. Node identifiers are kept verbatim, in order of first appearance.

    Args:
        path: Edge list file
        delimiter: Field separator (whitespace delimiters match any run of blanks)
        name: Graph label (defaults to the file stem)

    Returns:
        Graph: The loaded graph

    Raises:
        GraphLoadError: On malformed rows, self-loops, non-positive weights or an empty file
    """
    frame = _read_raw(path, delimiter, width=4)
    if not isinstance(frame.index, pd.RangeIndex):
        raise GraphLoadError("expected 2 or 3 fields", row=1)
    extra = [row for row, v in enumerate(frame[3], 1) if _cell(v) is not None]
    if extra:
        raise GraphLoadError("expected 2 or 3 fields", row=extra[0])
    frame = frame[[0, 1, 2]]

    node_ids: List[NodeId] = []
    index: Dict[NodeId, int] = {}
    edges = set()
    weights: Dict[Edge, float] = {}
    duplicates = 0

    for row, (source, target, weight) in enumerate(frame.itertuples(index=False, name=None), 1):
        a, b, w = _cell(source), _cell(target), _cell(weight)
        if a is None or b is None:
            raise GraphLoadError("expected 2 or 3 fields", row=row)
        if a == b:
            raise GraphLoadError(f"self-loop on node {a}", row=row)
        value = None
        if w is not None:
            try:
                value = float(w)
            except ValueError:
                raise GraphLoadError(f"weight {w!r} is not a number", row=row) from None
            if not value > 0:
                raise GraphLoadError(f"weight {w} is not positive", row=row)

        for node in (a, b):
            if node not in index:
                index[node] = len(node_ids)
                node_ids.append(node)
        edge = canonical_edge(index[a], index[b])
        if edge in edges:
            duplicates += 1
            continue
        edges.add(edge)
        if value is not None:
            weights[edge] = value

    if duplicates:
        logger.warning(f"Collapsed {duplicates} duplicate edge rows in {path}")

    graph = Graph(tuple(node_ids), frozenset(edges), weights, name or _stem(path))
    logger.info(f"Loaded edge list {path}: n={graph.n}, m={graph.m}")
    return graph


def write_edge_list(graph: Graph, path: str, delimiter: str = ",") -> None:
    """
    Write a graph as an edge list, with a weight column when weights are stored.

    Isolated nodes are not representable in this format and are dropped.
    """
    rows = []
    for (i, j), (a, b) in zip(graph.sorted_edges(), graph.edge_id_pairs()):
        row = [a, b]
        if graph.weights:
            row.append(repr(graph.weights.get((i, j), 1.0)))
        rows.append(row)
    pd.DataFrame(rows).to_csv(path, sep=delimiter, header=False, index=False)


def _split_headers(raw: pd.DataFrame) -> Tuple[Optional[List[str]], Optional[List[str]], pd.DataFrame]:
    """
    Detect an optional header row and header column by a non-numeric first token.

    Returns:
        tuple: (column labels or None, row labels or None, numeric body as strings)
    """
    header_row = not _is_number(raw.iat[0, 0])
    body = raw.iloc[1:] if header_row else raw
    if body.empty:
        raise GraphLoadError("matrix has a header but no data rows")
    header_col = not _is_number(body.iat[0, 0])

    col_labels = None
    row_labels = None
    if header_row:
        labels = [_cell(v) for v in raw.iloc[0]]
        col_labels = [str(v) for v in (labels[1:] if header_col else labels)]
    if header_col:
        row_labels = [str(_cell(v)) for v in body.iloc[:, 0]]
        body = body.iloc[:, 1:]
    if header_row or header_col:
        logger.warning(f"Detected matrix headers (row={header_row}, column={header_col})")
    return col_labels, row_labels, body


def _to_numeric(body: pd.DataFrame) -> np.ndarray:
    try:
        matrix = body.apply(lambda col: pd.to_numeric(col.str.strip())).to_numpy(dtype=float)
    except (ValueError, AttributeError) as e:
        raise GraphLoadError(f"non-numeric matrix entry: {e}") from None
    if np.isnan(matrix).any():
        raise GraphLoadError("matrix rows have unequal lengths")
    return matrix


def _stem(path: str) -> str:
    return os.path.splitext(os.path.basename(path))[0]


def load_adjacency_matrix(
    path: str,
    delimiter: str = ",",
    symmetrize: bool = False,
    name: Optional[str] = None,
) -> Graph:
    """
    Load an undirected graph from a square 1-mode matrix.

    Nodes with all-zero rows are kept as isolates; a non-zero entry is an edge
    and its value is stored as the edge weight.

    Args:
        path: Matrix file
        delimiter: Field separator
        symmetrize: Fold a directed matrix into an undirected graph
            (edge iff a_ij or a_ji is non-zero, weight a_ij + a_ji)
        name: Graph label (defaults to the file stem)

    Returns:
        Graph: The loaded graph

    Raises:
        GraphLoadError: If the matrix is not square, not symmetric or has a non-zero diagonal
    """
    col_labels, row_labels, body = _split_headers(_read_raw(path, delimiter))
    matrix = _to_numeric(body)
    rows, cols = matrix.shape
    if rows != cols:
        raise GraphLoadError(f"adjacency matrix is not square ({rows}x{cols})")
    if np.any(np.diag(matrix) != 0):
        raise GraphLoadError("adjacency matrix has a non-zero diagonal")
    if symmetrize:
        matrix = matrix + matrix.T
    elif not np.allclose(matrix, matrix.T, rtol=0.0, atol=SYMMETRY_TOLERANCE):
        raise GraphLoadError("adjacency matrix is not symmetric")

    node_ids = _node_labels(rows, row_labels or col_labels)
    upper_i, upper_j = np.nonzero(np.triu(matrix, k=1))
    edges = {(int(i), int(j)) for i, j in zip(upper_i, upper_j)}
    weights = {(int(i), int(j)): float(matrix[i, j]) for i, j in zip(upper_i, upper_j)}

    graph = Graph(node_ids, frozenset(edges), weights, name or _stem(path))
    logger.info(f"Loaded adjacency matrix {path}: n={graph.n}, m={graph.m}")
    return graph


def project_two_mode(path: str, delimiter: str = ",", name: Optional[str] = None) -> Graph:
    """
    Project an actor-by-event incidence matrix onto the actors.

    Two actors are linked iff they share at least one event; the edge weight
    is the number of shared events.

    Args:
        path: Incidence matrix file, rows = actors, columns = events
        delimiter: Field separator
        name: Graph label (defaults to the file stem)

    Returns:
        Graph: Co-attendance graph on the actors

    Raises:
        GraphLoadError: On non-binary entries or an empty matrix
    """
    _, row_labels, body = _split_headers(_read_raw(path, delimiter))
    incidence = _to_numeric(body)
    if incidence.size == 0:
        raise GraphLoadError("two-mode matrix is empty")
    if not np.isin(incidence, (0.0, 1.0)).all():
        raise GraphLoadError("two-mode matrix has non-binary entries")

    shared = incidence @ incidence.T
    upper_i, upper_j = np.nonzero(np.triu(shared, k=1))
    edges = {(int(i), int(j)) for i, j in zip(upper_i, upper_j)}
    weights = {(int(i), int(j)): float(shared[i, j]) for i, j in zip(upper_i, upper_j)}

    graph = Graph(_node_labels(incidence.shape[0], row_labels), frozenset(edges), weights,
                  name or _stem(path))
    logger.info(f"Projected two-mode matrix {path}: n={graph.n}, m={graph.m}")
    return graph


def _node_labels(n: int, labels: Optional[List[str]]) -> Tuple[NodeId, ...]:
    if labels is not None and len(labels) == n and len(set(labels)) == n:
        return tuple(labels)
    return tuple(str(i) for i in range(n))


def load_graph(path: str, fmt: GraphFormat = GraphFormat.EDGE_LIST, delimiter: str = ",",
               name: Optional[str] = None, symmetrize: bool = False) -> Graph:
    """Load a graph in any supported format; ``symmetrize`` applies to 1-mode matrices."""
    fmt = GraphFormat(fmt)
    if fmt is GraphFormat.MATRIX:
        return load_adjacency_matrix(path, delimiter, symmetrize=symmetrize, name=name)
    if fmt is GraphFormat.TWO_MODE:
        return project_two_mode(path, delimiter, name=name)
    return load_edge_list(path, delimiter, name=name)
