"""
Tests for the dense symmetric eigensolver.
"""
import itertools

import numpy as np
import pytest

from conftest import make_graph, random_graph
from src.exceptions import EigenConvergenceError, SpectralError
from src.models.spectrum import MatrixKind
from src.services import eigensolver
from src.services.eigensolver import (
    eigh_symmetric,
    eigvals_symmetric,
    householder_tridiagonalize,
    tridiagonal_ql,
)
from src.services.properties import connected_components
from src.services.spectral import build_matrix

KINDS = [MatrixKind.ADJACENCY, MatrixKind.LAPLACIAN, MatrixKind.NORMALIZED_LAPLACIAN]


def all_graphs(max_n: int):
    """Every labelled simple graph with 1..max_n nodes."""
    for n in range(1, max_n + 1):
        pairs = list(itertools.combinations(range(n), 2))
        for mask in range(2 ** len(pairs)):
            yield make_graph(n, [p for k, p in enumerate(pairs) if mask >> k & 1])


def test_small_graphs_against_oracles():
    """Test every graph with n <= 4 against eigvalsh and the characteristic polynomial."""
    count = 0
    for g in all_graphs(4):
        for kind in KINDS:
            m = build_matrix(g, kind).entries
            values = eigvals_symmetric(m)

            assert np.allclose(values, np.linalg.eigvalsh(m), rtol=0.0, atol=1e-8)
            for lam in values:
                assert abs(np.linalg.det(m - lam * np.eye(g.n))) <= 1e-8
            count += 1
    # 1 + 2 + 8 + 64 graphs
    assert count == 75 * len(KINDS)


def test_random_graphs_against_eigvalsh():
    """Test 200 random graphs with n <= 64."""
    rng = np.random.default_rng(11)
    for trial in range(200):
        n = int(rng.integers(2, 65))
        g = random_graph(n, float(rng.uniform(0.02, 0.3)), seed=trial)
        kind = KINDS[trial % len(KINDS)]
        m = build_matrix(g, kind).entries

        values = eigvals_symmetric(m)
        assert np.allclose(values, np.linalg.eigvalsh(m), rtol=0.0, atol=1e-8)

        if kind is MatrixKind.LAPLACIAN:
            zeros = int(np.count_nonzero(np.abs(values) < 1e-6))
            assert zeros == len(connected_components(g))
        elif kind is MatrixKind.NORMALIZED_LAPLACIAN:
            assert values.min() >= -1e-9
            assert values.max() <= 2 + 1e-9


def test_trace_identities(graph_factory):
    """Test eigenvalue sums match traces."""
    for seed in range(10):
        g = graph_factory(30, 0.15, seed)
        tol = g.n * 1e-9
        assert abs(eigvals_symmetric(build_matrix(g, "A").entries).sum()) <= tol
        assert abs(eigvals_symmetric(build_matrix(g, "L").entries).sum() - g.degrees().sum()) <= tol


@pytest.mark.parametrize("n", [1, 2, 8, 64, 256])
def test_eigenbasis_orthonormal(n):
    """Test the accumulated eigenbasis is orthonormal and reconstructs the matrix."""
    rng = np.random.default_rng(n)
    x = rng.standard_normal((n, n))
    a = (x + x.T) / 2.0

    values, vectors = eigh_symmetric(a)

    assert np.abs(vectors.T @ vectors - np.eye(n)).max() <= 1e-8
    assert np.allclose(vectors @ np.diag(values) @ vectors.T, a, atol=1e-8)
    assert np.all(np.diff(values) >= 0)


def test_householder_tridiagonal_form():
    """Test Q^T A Q is tridiagonal with the reported bands."""
    rng = np.random.default_rng(3)
    x = rng.standard_normal((7, 7))
    a = x + x.T

    diagonal, off, q = householder_tridiagonalize(a, compute_q=True)
    t = q.T @ a @ q

    assert np.allclose(np.diag(t), diagonal, atol=1e-10)
    assert np.allclose(np.diag(t, 1), off[:-1], atol=1e-10)
    assert np.allclose(np.triu(t, 2), 0.0, atol=1e-10)
    assert off[-1] == 0.0


def test_tridiagonal_ql_known_values():
    """Test the QL step on the path-graph adjacency (eigenvalues 2 cos(k pi / (n+1)))."""
    n = 6
    values, _ = tridiagonal_ql(np.zeros(n), np.ones(n))
    expected = 2 * np.cos(np.arange(1, n + 1) * np.pi / (n + 1))

    assert np.allclose(np.sort(values), np.sort(expected), atol=1e-12)


def test_diagonal_input():
    """Test an already diagonal matrix needs no sweeps."""
    values = eigvals_symmetric(np.diag([3.0, -1.0, 2.0]))

    assert values.tolist() == [-1.0, 2.0, 3.0]


def test_rejects_non_symmetric():
    """Test input validation."""
    with pytest.raises(SpectralError, match="not symmetric"):
        eigvals_symmetric(np.array([[0.0, 1.0], [0.0, 0.0]]))
    with pytest.raises(SpectralError, match="square"):
        eigvals_symmetric(np.zeros((2, 3)))


def test_convergence_budget(monkeypatch):
    """Test the sweep budget raises when exhausted."""
    monkeypatch.setattr(eigensolver, "SWEEPS_PER_ORDER", 0)

    with pytest.raises(EigenConvergenceError):
        eigvals_symmetric(np.array([[0.0, 1.0], [1.0, 0.0]]))
