"""
Exception hierarchy for netprune.
"""
from typing import Optional


class NetpruneError(Exception):
    """Base exception for netprune errors."""
    pass


class GraphLoadError(NetpruneError):
    """Exception raised when a graph file cannot be ingested."""

    def __init__(self, message: str, row: Optional[int] = None):
        self.row = row
        if row is not None:
            message = f"row {row}: {message}"
        super().__init__(message)


class GraphError(NetpruneError):
    """Exception raised for invalid graph queries (unknown node, empty graph)."""
    pass


class SpectralError(NetpruneError):
    """Base exception for spectral computation errors."""
    pass


class EigenConvergenceError(SpectralError):
    """Exception raised when the QL iteration does not converge."""
    pass


class AffinityError(NetpruneError):
    """Exception raised by the affinity / matrix distance family."""
    pass


class PerturbationError(NetpruneError):
    """Exception raised when a pruning request cannot be realized."""
    pass


class ExperimentError(NetpruneError):
    """Exception raised when an experiment run aborts."""
    pass


class ConfigError(NetpruneError):
    """Exception raised for invalid experiment configuration."""
    pass
