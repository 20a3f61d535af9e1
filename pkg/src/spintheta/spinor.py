"""Connecting operators between the vector space R^8 and the spinor space.

Operators are stored scaled by sqrt(2): ``mats[i] = sqrt(2) * eta_i^{AB}``,
an ``(8, 8, 8)`` complex array indexed ``[i, A, B]``. The seed is given in
the "old" spinor basis, where the metric spin-tensor is ``[[0, E], [E, 0]]``;
:func:`change_spinor_basis` moves it to the "new" basis where the metric is
the identity and every operator becomes real (``M_0 = I``, the rest
antisymmetric).
"""
from __future__ import annotations

import functools
from dataclasses import dataclass

import numpy as np

from .errors import RealnessError, SymmetryError
from .numerics import DEFAULT_TOL

DIM = 8

# (i, A, B, value) with 1-based labels, value = sqrt(2) * eta_i^{AB}.
# For i in ANTISYMMETRIC_COMPLETION the (B, A) entry is the negative.
_SEED = [
    (2, 1, 2, -1), (2, 3, 4, -1), (2, 7, 8, -1), (2, 5, 6, -1),
    (4, 1, 2, 1j), (4, 3, 4, -1j), (4, 7, 8, 1j), (4, 5, 6, -1j),
    (5, 1, 4, 1j), (5, 2, 3, -1j), (5, 6, 7, 1j), (5, 5, 8, -1j),
    (7, 1, 4, -1), (7, 2, 3, -1), (7, 6, 7, -1), (7, 5, 8, -1),
    (6, 1, 3, -1j), (6, 2, 4, -1j), (6, 6, 8, 1j), (6, 5, 7, 1j),
    (8, 1, 3, 1), (8, 2, 4, -1), (8, 6, 8, -1), (8, 5, 7, 1),
    (1, 1, 5, 1), (1, 5, 1, 1), (1, 2, 6, 1), (1, 6, 2, 1),
    (1, 3, 7, 1), (1, 7, 3, 1), (1, 4, 8, 1), (1, 8, 4, 1),
    (3, 1, 5, -1j), (3, 5, 1, 1j), (3, 2, 6, -1j), (3, 6, 2, 1j),
    (3, 3, 7, -1j), (3, 7, 3, 1j), (3, 4, 8, -1j), (3, 8, 4, 1j),
]
ANTISYMMETRIC_COMPLETION = (2, 4, 5, 6, 7, 8)

# adjoint used by clifford_diagnostic; conjugate transpose holds on the seed
ADJOINT = "conjugate-transpose"


@dataclass(frozen=True)
class ConnectingOperators:
    mats: np.ndarray
    basis: str = "old"

    def __post_init__(self):
        if self.mats.shape != (DIM, DIM, DIM):
            raise ValueError(f"expected (8, 8, 8) operators, got {self.mats.shape}")
        if self.basis not in ("old", "new"):
            raise ValueError("basis must be 'old' or 'new'")


def _frozen(a):
    a = np.array(a)
    a.setflags(write=False)
    return a


def build_seed_operators() -> ConnectingOperators:
    m = np.zeros((DIM, DIM, DIM), dtype=complex)
    for i, a, b, v in _SEED:
        m[i - 1, a - 1, b - 1] = v
        if i in ANTISYMMETRIC_COMPLETION:
            m[i - 1, b - 1, a - 1] = -v
    return ConnectingOperators(_frozen(m), "old")


def basis_change_matrix() -> np.ndarray:
    """U = (1/sqrt 2) [[E, E], [-iE, iE]] with E the 4x4 identity."""
    e = np.eye(4)
    return np.block([[e, e], [-1j * e, 1j * e]]) / np.sqrt(2.0)


def old_metric() -> np.ndarray:
    """Metric spin-tensor in the old basis: the unique form with U eps U^T = I."""
    e = np.eye(4)
    z = np.zeros((4, 4))
    return np.block([[z, e], [e, z]]).astype(complex)


def change_spinor_basis(ops: ConnectingOperators, u=None) -> ConnectingOperators:
    """Transform both spinor indices: ``M'_i = U M_i U^T``."""
    if ops.basis != "old":
        raise ValueError("operators are already in the new basis")
    u = basis_change_matrix() if u is None else np.asarray(u, dtype=complex)
    mats = np.einsum("ac,icd,bd->iab", u, ops.mats, u)
    return ConnectingOperators(_frozen(mats), "new")


@functools.cache
def new_basis_operators() -> ConnectingOperators:
    """The seed operators transformed to the working basis (cached)."""
    return change_spinor_basis(build_seed_operators())


def epsilon_residual() -> float:
    u = basis_change_matrix()
    return float(np.abs(u @ old_metric() @ u.T - np.eye(DIM)).max())


def clifford_diagnostic(ops: ConnectingOperators, adjoint: str = ADJOINT) -> float:
    """max over i, j of |M_i M_j* + M_j M_i* - 2 delta_ij I|."""
    if adjoint == "conjugate-transpose":
        adj = np.conj(np.swapaxes(ops.mats, 1, 2))
    elif adjoint == "transpose":
        adj = np.swapaxes(ops.mats, 1, 2)
    else:
        raise ValueError(f"unknown adjoint convention {adjoint!r}")
    prod = np.einsum("iab,jbc->ijac", ops.mats, adj)
    anti = prod + np.swapaxes(prod, 0, 1)
    target = 2.0 * np.einsum("ij,ac->ijac", np.eye(DIM), np.eye(DIM))
    return float(np.abs(anti - target).max())


def vector_to_spinor_generator(t, ops: ConnectingOperators | None = None,
                               tol: float = DEFAULT_TOL) -> np.ndarray:
    """Map an antisymmetric vector generator T^{ij} to its spinor image T_C^A.

    ``T_C^A = 1/2 T^{ij} eta_j^{AB} eta_{iCB}``; with the sqrt(2) scaling of
    the stored operators this is ``1/4 sum T[i,j] M_j[A,B] M_i[C,B]``. The
    result is a real antisymmetric 8x8 matrix indexed ``[C, A]``.
    """
    ops = new_basis_operators() if ops is None else ops
    t = np.asarray(t, dtype=float)
    if t.shape != (DIM, DIM):
        raise ValueError("T must be 8x8")
    if np.abs(t + t.T).max() > tol:
        raise SymmetryError("vector generator is not antisymmetric")
    m = ops.mats
    out = 0.25 * np.einsum("ij,jab,icb->ca", t, m, m)
    if np.abs(out.imag).max() > tol:
        raise RealnessError("spinor generator has an imaginary part")
    out = out.real
    if np.abs(out + out.T).max() > tol:
        raise SymmetryError("spinor generator is not antisymmetric")
    return out
