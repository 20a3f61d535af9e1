"""Small dense linear algebra: cyclic Jacobi eigenvalues and rank/nullspace.

Complex scalars, 8x8 matrices and 8x8x8 tensors are plain numpy
``complex128``/``float64`` arrays; only the two algorithms below are
implemented here.
"""
from __future__ import annotations

import math

import numpy as np

from .errors import SymmetryError

DEFAULT_TOL = 1e-9
MAX_SWEEPS = 100


def symmetric_eigenvalues(m, tol: float = DEFAULT_TOL) -> list[float]:
    """Eigenvalues of a real symmetric matrix, sorted descending.

    Cyclic Jacobi rotations are applied sweep by sweep until the Frobenius
    norm of the off-diagonal part drops below ``tol`` and below rounding
    level relative to ``|M|_F`` (so tiny matrices are still diagonalized).
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    a = np.array(m, dtype=float)
    n = a.shape[0]
    if a.shape != (n, n):
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    asym = np.abs(a - a.T).max() if n else 0.0
    if asym > tol:
        raise SymmetryError(f"matrix is not symmetric (max |M - M^T| = {asym:.3g})")
    a = 0.5 * (a + a.T)
    stop = min(tol, 1e-15 * float(np.linalg.norm(a)))

    for _ in range(MAX_SWEEPS):
        off = float(np.linalg.norm(a - np.diag(np.diag(a))))
        if off <= stop:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                # rotation angle chosen to annihilate a[p, q]
                with np.errstate(over="ignore"):
                    tau = (a[q, q] - a[p, p]) / (2.0 * apq)
                if abs(tau) > 1e150:
                    t = 0.5 / tau
                else:
                    t = math.copysign(1.0, tau) / (abs(tau) + math.sqrt(1.0 + tau * tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                ap = a[:, p].copy()
                aq = a[:, q].copy()
                a[:, p] = c * ap - s * aq
                a[:, q] = s * ap + c * aq
                rp = a[p, :].copy()
                rq = a[q, :].copy()
                a[p, :] = c * rp - s * rq
                a[q, :] = s * rp + c * rq
                a[p, q] = a[q, p] = 0.0
    else:
        raise ArithmeticError("Jacobi iteration did not converge")

    return sorted((float(x) for x in np.diag(a)), reverse=True)


def rank_and_nullspace(a, tol: float = DEFAULT_TOL) -> tuple[int, list[np.ndarray]]:
    """Rank and a nullspace basis of a real ``m x n`` matrix.

    Gauss-Jordan elimination with the largest remaining entry of each column
    as pivot. Entries below ``tol`` in magnitude count as zero.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    r = np.array(a, dtype=float)
    if r.ndim != 2:
        raise ValueError("expected a 2-D matrix")
    m, n = r.shape
    pivots: list[int] = []
    row = 0
    for col in range(n):
        if row >= m:
            break
        best = row + int(np.argmax(np.abs(r[row:, col])))
        if abs(r[best, col]) < tol:
            r[row:, col] = 0.0
            continue
        if best != row:
            r[[row, best]] = r[[best, row]]
        r[row] /= r[row, col]
        for other in range(m):
            if other != row and r[other, col] != 0.0:
                r[other] -= r[other, col] * r[row]
        pivots.append(col)
        row += 1

    rank = len(pivots)
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        v = np.zeros(n)
        v[f] = 1.0
        for i, p in enumerate(pivots):
            v[p] = -r[i, f]
        basis.append(v)
    return rank, basis
