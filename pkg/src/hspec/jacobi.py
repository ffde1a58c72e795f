"""Cyclic Jacobi eigenvalue iteration for small dense symmetric matrices."""

from __future__ import annotations

import math

import numba
import numpy as np

MAX_SWEEPS = 100
REL_TOL = 1e-12


class ConvergenceError(ArithmeticError):
    pass


@numba.njit(cache=True)
def _off_norm(a):
    n = a.shape[0]
    s = 0.0
    for i in range(n):
        for j in range(n):
            if i != j:
                s += a[i, j] * a[i, j]
    return math.sqrt(s)


@numba.njit(cache=True)
def _jacobi_inplace(a, tol, max_sweeps):
    """Row-cyclic sweeps of plane rotations; returns sweeps used or -1."""
    n = a.shape[0]
    for sweep in range(max_sweeps + 1):
        if _off_norm(a) < tol:
            return sweep
        if sweep == max_sweeps:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = 1.0 / (abs(theta) + math.sqrt(theta * theta + 1.0))
                if theta < 0.0:
                    t = -t
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                for k in range(n):
                    akp = a[k, p]
                    akq = a[k, q]
                    a[k, p] = c * akp - s * akq
                    a[k, q] = s * akp + c * akq
                for k in range(n):
                    apk = a[p, k]
                    aqk = a[q, k]
                    a[p, k] = c * apk - s * aqk
                    a[q, k] = s * apk + c * aqk
                a[p, q] = 0.0
                a[q, p] = 0.0
    return -1


def sym_eigenvalues(M) -> np.ndarray:
    """All eigenvalues of a real symmetric matrix, descending.

    Stops once the off-diagonal Frobenius norm drops below
    ``1e-12 * (1 + ||M||_F)``; raises :class:`ConvergenceError` after 100 sweeps.
    """
    a = np.array(M, dtype=np.float64, copy=True)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if a.shape[0] == 0:
        return np.zeros(0)
    if not np.array_equal(a, a.T):
        raise ValueError("matrix is not symmetric")
    tol = REL_TOL * (1.0 + np.linalg.norm(a))
    sweeps = _jacobi_inplace(a, tol, MAX_SWEEPS)
    if sweeps < 0:
        raise ConvergenceError(f"Jacobi iteration did not converge in {MAX_SWEEPS} sweeps")
    return np.sort(np.diag(a))[::-1].copy()
