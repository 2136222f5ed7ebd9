"""
Matrix representations of a graph and their spectra.
"""
import enum
from dataclasses import dataclass

import numpy as np


class MatrixKind(enum.Enum):
    """Representation matrices of a graph."""
    ADJACENCY = "A"
    LAPLACIAN = "L"
    NORMALIZED_LAPLACIAN = "NL"
    DEGREE = "D"


class SortOrder(enum.Enum):
    """Sort order of a spectrum."""
    ASCENDING = "ascending"
    DESCENDING = "descending"


def sort_order_for(kind: MatrixKind) -> SortOrder:
    """Adjacency spectra run from the largest eigenvalue down; the others ascend."""
    return SortOrder.DESCENDING if kind is MatrixKind.ADJACENCY else SortOrder.ASCENDING


@dataclass(frozen=True)
class RepresentationMatrix:
    """Dense symmetric matrix representation of a graph."""

    kind: MatrixKind
    entries: np.ndarray

    @property
    def order(self) -> int:
        return int(self.entries.shape[0])


@dataclass(frozen=True, eq=False)
class Spectrum:
    """Sorted eigenvalues of one representation matrix."""

    kind: MatrixKind
    values: np.ndarray

    @property
    def order(self) -> SortOrder:
        return sort_order_for(self.kind)

    def __len__(self) -> int:
        return int(self.values.shape[0])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Spectrum):
            return NotImplemented
        return self.kind is other.kind and np.array_equal(self.values, other.values)

    @classmethod
    def from_unsorted(cls, kind: MatrixKind, values: np.ndarray) -> "Spectrum":
        ordered = np.sort(np.asarray(values, dtype=float))
        if sort_order_for(kind) is SortOrder.DESCENDING:
            ordered = ordered[::-1]
        return cls(kind, np.ascontiguousarray(ordered))
