"""
Dense symmetric eigensolver.

Householder reduction to tridiagonal form followed by the implicit-shift QL
iteration with Wilkinson-style shifts. Only eigenvalues are needed on the
metric path; the orthonormal eigenbasis can be accumulated for verification.
"""
import logging
import math
from typing import List, Optional, Tuple

import numpy as np

from src.exceptions import EigenConvergenceError, SpectralError

logger = logging.getLogger(__name__)

SWEEPS_PER_ORDER = 50
SYMMETRY_TOLERANCE = 1e-12


def householder_tridiagonalize(
    a: np.ndarray, compute_q: bool = False
) -> Tuple[np.ndarray, np.ndarray, Optional[np.ndarray]]:
    """
    Reduce a symmetric matrix to tridiagonal form ``T = Q^T A Q``.

    Args:
        a: Symmetric ``n x n`` matrix (not modified)
        compute_q: Whether to accumulate the orthogonal transform ``Q``

    Returns:
        tuple: (diagonal of T, off-diagonal of T padded with a trailing 0, Q or None)
    """
    t = np.array(a, dtype=float, copy=True)
    n = t.shape[0]
    q = np.eye(n) if compute_q else None

    for k in range(n - 2):
        x = t[k + 1:, k]
        alpha = math.sqrt(float(x @ x))
        if alpha == 0.0 or not np.any(x[1:]):
            continue
        if x[0] > 0:
            alpha = -alpha
        v = x.copy()
        v[0] -= alpha
        beta = 2.0 / float(v @ v)

        block = t[k + 1:, k + 1:]
        p = beta * (block @ v)
        w = p - (0.5 * beta * float(v @ p)) * v
        t[k + 1:, k + 1:] = block - np.outer(v, w) - np.outer(w, v)

        t[k + 1, k] = t[k, k + 1] = alpha
        t[k + 2:, k] = 0.0
        t[k, k + 2:] = 0.0

        if q is not None:
            q[:, k + 1:] -= beta * np.outer(q[:, k + 1:] @ v, v)

    diagonal = np.diag(t).copy()
    off = np.zeros(n)
    if n > 1:
        off[:-1] = np.diag(t, 1)
    return diagonal, off, q


def tridiagonal_ql(
    diagonal: np.ndarray, off: np.ndarray, z: Optional[np.ndarray] = None
) -> Tuple[np.ndarray, Optional[np.ndarray]]:
    """
    Eigenvalues of a symmetric tridiagonal matrix by implicit-shift QL.

    Args:
        diagonal: Diagonal entries ``d[0..n-1]``
        off: Sub-diagonal, ``off[i]`` couples ``i`` and ``i+1``; ``off[n-1]`` unused
        z: Optional matrix whose columns receive the accumulated rotations

    Returns:
        tuple: (unsorted eigenvalues, rotated z or None)

    Raises:
        EigenConvergenceError: If more than ``50 n`` QL sweeps are needed
    """
    d: List[float] = [float(x) for x in diagonal]
    e: List[float] = [float(x) for x in off]
    n = len(d)
    if n:
        e[n - 1] = 0.0
    budget = SWEEPS_PER_ORDER * max(n, 1)
    sweeps = 0

    for l in range(n):
        while True:
            m = l
            while m < n - 1:
                dd = abs(d[m]) + abs(d[m + 1])
                if abs(e[m]) + dd == dd:
                    break
                m += 1
            if m == l:
                break
            sweeps += 1
            if sweeps > budget:
                raise EigenConvergenceError(
                    f"QL iteration did not converge within {budget} sweeps (n={n})"
                )

            g = (d[l + 1] - d[l]) / (2.0 * e[l])
            r = math.hypot(g, 1.0)
            g = d[m] - d[l] + e[l] / (g + math.copysign(r, g))
            s = c = 1.0
            p = 0.0
            deflated = False
            i = m - 1
            while i >= l:
                f = s * e[i]
                b = c * e[i]
                r = math.hypot(f, g)
                e[i + 1] = r
                if r == 0.0:
                    d[i + 1] -= p
                    e[m] = 0.0
                    deflated = True
                    break
                s = f / r
                c = g / r
                g = d[i + 1] - p
                r = (d[i] - g) * s + 2.0 * c * b
                p = s * r
                d[i + 1] = g + p
                g = c * r - b
                if z is not None:
                    right = z[:, i + 1].copy()
                    z[:, i + 1] = s * z[:, i] + c * right
                    z[:, i] = c * z[:, i] - s * right
                i -= 1
            if deflated:
                continue
            d[l] -= p
            e[l] = g
            e[m] = 0.0

    logger.debug(f"QL converged after {sweeps} sweeps (n={n})")
    return np.array(d), z


def _checked(a: np.ndarray) -> np.ndarray:
    a = np.asarray(a, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise SpectralError(f"expected a square matrix, got shape {a.shape}")
    scale = max(1.0, float(np.abs(a).max())) if a.size else 1.0
    if not np.allclose(a, a.T, rtol=0.0, atol=SYMMETRY_TOLERANCE * scale):
        raise SpectralError("matrix is not symmetric")
    return a


def eigvals_symmetric(a: np.ndarray) -> np.ndarray:
    """
    All eigenvalues of a real symmetric matrix, ascending.

    Raises:
        SpectralError: If the matrix is not square and symmetric
        EigenConvergenceError: If the QL iteration fails to converge
    """
    a = _checked(a)
    diagonal, off, _ = householder_tridiagonalize(a)
    values, _ = tridiagonal_ql(diagonal, off)
    return np.sort(values)


def eigh_symmetric(a: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """
    Eigenvalues (ascending) and orthonormal eigenvectors (columns) of a symmetric matrix.

    Raises:
        SpectralError: If the matrix is not square and symmetric
        EigenConvergenceError: If the QL iteration fails to converge
    """
    a = _checked(a)
    diagonal, off, q = householder_tridiagonalize(a, compute_q=True)
    values, vectors = tridiagonal_ql(diagonal, off, q)
    order = np.argsort(values, kind="stable")
    return values[order], vectors[:, order]
