"""
Node-affinity and pairwise-distance matrices.
"""
from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True, eq=False)
class AffinityMatrix:
    """Fast belief propagation matrix ``S = (I + eps^2 D - eps A)^-1``."""

    epsilon: float
    entries: np.ndarray

    @property
    def order(self) -> int:
        return int(self.entries.shape[0])


@dataclass(frozen=True, eq=False)
class PairwiseDistanceMatrix:
    """Hop distances ``M_ij = d_ij`` with unreachable pairs replaced by a finite value."""

    unreachable_value: float
    entries: np.ndarray

    @property
    def order(self) -> int:
        return int(self.entries.shape[0])
