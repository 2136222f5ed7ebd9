"""
Representation matrices, spectra and spectral distances between graphs.
"""
import logging
from typing import List, Optional, Tuple, Union

import numpy as np

from src.exceptions import SpectralError
from src.models.graph import Graph
from src.models.spectrum import MatrixKind, RepresentationMatrix, SortOrder, Spectrum
from src.services.eigensolver import eigvals_symmetric

logger = logging.getLogger(__name__)

CLAMP_TOLERANCE = 1e-9


def build_matrix(g: Graph, kind: Union[MatrixKind, str]) -> RepresentationMatrix:
    """
    Dense representation matrix of the binarized graph, nodes in ``node_ids`` order.

    Args:
        g: Graph with at least one node
        kind: Adjacency ``A``, degree ``D``, Laplacian ``L = D - A`` or normalised
            Laplacian ``D^-1/2 L D^-1/2`` (zero rows/columns for isolates)

    Returns:
        RepresentationMatrix: The requested matrix
    """
    kind = MatrixKind(kind)
    if g.n == 0:
        raise SpectralError("cannot build a matrix for an empty graph")
    a = g.adjacency_matrix()
    degrees = a.sum(axis=1)

    if kind is MatrixKind.ADJACENCY:
        entries = a
    elif kind is MatrixKind.DEGREE:
        entries = np.diag(degrees)
    elif kind is MatrixKind.LAPLACIAN:
        entries = np.diag(degrees) - a
    else:
        inv_sqrt = np.zeros_like(degrees)
        nonzero = degrees > 0
        inv_sqrt[nonzero] = 1.0 / np.sqrt(degrees[nonzero])
        entries = inv_sqrt[:, None] * (np.diag(degrees) - a) * inv_sqrt[None, :]
    return RepresentationMatrix(kind, entries)


def eigenvalues_symmetric(mat: RepresentationMatrix) -> Spectrum:
    """
    Spectrum of a representation matrix, sorted in the kind's declared order.

    Round-off negatives above ``-1e-9`` are clamped to 0 for both Laplacians.
    """
    values = eigvals_symmetric(mat.entries)
    if mat.kind in (MatrixKind.LAPLACIAN, MatrixKind.NORMALIZED_LAPLACIAN):
        values = np.where((values < 0) & (values > -CLAMP_TOLERANCE), 0.0, values)
    return Spectrum.from_unsorted(mat.kind, values)


def graph_spectrum(g: Graph, kind: Union[MatrixKind, str]) -> Spectrum:
    """Spectrum of one representation matrix of ``g``."""
    return eigenvalues_symmetric(build_matrix(g, kind))


def pad_spectra(s1: Spectrum, s2: Spectrum) -> Tuple[Spectrum, Spectrum]:
    """
    Zero-pad the shorter spectrum to the longer length and re-sort it.

    Raises:
        SpectralError: If the spectra belong to different matrix kinds
    """
    if s1.kind is not s2.kind:
        raise SpectralError(f"cannot compare {s1.kind.value} and {s2.kind.value} spectra")
    size = max(len(s1), len(s2))

    def padded(s: Spectrum) -> Spectrum:
        if len(s) == size:
            return s
        return Spectrum.from_unsorted(s.kind, np.concatenate([s.values, np.zeros(size - len(s))]))

    return padded(s1), padded(s2)


def spectrum_distance(s1: Spectrum, s2: Spectrum, k: Optional[int] = None) -> float:
    """
    Euclidean distance between two spectra over their first ``k`` values.

    With the declared sort orders, the prefix holds the ``k`` largest adjacency
    eigenvalues and the ``k`` smallest Laplacian ones.

    Raises:
        SpectralError: If ``k`` is not positive or exceeds the spectrum length
    """
    p1, p2 = pad_spectra(s1, s2)
    if k is not None:
        if k <= 0:
            raise SpectralError(f"k must be positive, got {k}")
        if k > min(len(s1), len(s2)):
            raise SpectralError(f"k={k} exceeds the spectrum length {min(len(s1), len(s2))}")
    size = len(p1) if k is None else k
    diff = p1.values[:size] - p2.values[:size]
    return float(np.sqrt(np.sum(diff * diff)))


def spectral_distance(
    g1: Graph, g2: Graph, kind: Union[MatrixKind, str], k: Optional[int] = None
) -> float:
    """
    Spectral distance ``d_A``, ``d_L`` or ``d_NL`` between two graphs.

    Args:
        g1: First graph
        g2: Second graph
        kind: Representation matrix
        k: Number of leading eigenvalues to compare (full padded spectra if omitted)

    Returns:
        float: Euclidean distance between the (prefixes of the) spectra
    """
    kind = MatrixKind(kind)
    if g1.n == 0 or g2.n == 0:
        raise SpectralError("spectral distance needs non-empty graphs")
    return spectrum_distance(graph_spectrum(g1, kind), graph_spectrum(g2, kind), k)


def spectral_radius(g: Graph) -> float:
    """Largest absolute adjacency eigenvalue."""
    values = graph_spectrum(g, MatrixKind.ADJACENCY).values
    return float(np.abs(values).max())


def algebraic_connectivity(g: Graph) -> float:
    """Second smallest Laplacian eigenvalue (0 for disconnected graphs)."""
    if g.n < 2:
        raise SpectralError("algebraic connectivity needs at least two nodes")
    return float(graph_spectrum(g, MatrixKind.LAPLACIAN).values[1])


def spectrum_to_csv_row(spectrum: Spectrum) -> List[str]:
    """Spectrum as a CSV row: the kind, then the values in declared order."""
    return [spectrum.kind.value] + [f"{v:.12g}" for v in spectrum.values]


def is_sorted(spectrum: Spectrum) -> bool:
    """Whether the values follow the kind's declared order."""
    diffs = np.diff(spectrum.values)
    if spectrum.order is SortOrder.DESCENDING:
        return bool(np.all(diffs <= 0))
    return bool(np.all(diffs >= 0))
