"""Controlling spin-tensor: forward construction and reverse reconstruction."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import MultiplicationTable, strip_identity_components, to_structural_constants
from .errors import RealnessError, SymmetryError
from .numerics import DEFAULT_TOL
from .spinor import ConnectingOperators, new_basis_operators

N = 8
# 4 / (3 sqrt2 N) against the (sqrt2)^3 carried by the stored operators
ALGEBRA_FACTOR = 1.0 / 24.0
# 2 / N
IDENTITY_FACTOR = 2.0 / N
# sqrt2 against (sqrt2)^3
RECONSTRUCT_FACTOR = 0.5


@dataclass(frozen=True)
class ThetaTensor:
    mat: np.ndarray
    has_identity: bool = True

    @property
    def real(self) -> np.ndarray:
        return np.asarray(self.mat).real


def _require_new(ops: ConnectingOperators):
    if ops.basis != "new":
        raise ValueError("connecting operators must be in the new spinor basis")


def theta_from_constants(c, ops: ConnectingOperators | None = None,
                         has_identity: bool = True,
                         tol: float = DEFAULT_TOL) -> ThetaTensor:
    """Build theta^{CD} from identity-stripped structural constants.

    theta[C, D] = 1/24 sum c[l,m,r] M_l[A,B] M_m[C,A] M_r[D,B]
                  + 1/4 delta_CD   (only when the algebra has an identity)
    """
    ops = new_basis_operators() if ops is None else ops
    _require_new(ops)
    m = ops.mats
    c = np.asarray(c, dtype=float)
    pair = np.einsum("lab,mca->lmcb", m, m)
    partial = np.einsum("lmr,lmcb->rcb", c, pair)
    mat = ALGEBRA_FACTOR * np.einsum("rcb,rdb->cd", partial, m)
    if has_identity:
        mat = mat + IDENTITY_FACTOR * np.eye(8)
    imag = np.abs(mat.imag).max()
    if imag > tol:
        raise RealnessError(f"theta has imaginary part {imag:.3g}; seed/basis inconsistent")
    asym = np.abs(mat - mat.T).max()
    if asym > tol:
        raise SymmetryError(f"theta is not symmetric (max deviation {asym:.3g})")
    return ThetaTensor(mat, has_identity)


def theta_for_table(table: MultiplicationTable, ops: ConnectingOperators | None = None,
                    tol: float = DEFAULT_TOL) -> ThetaTensor:
    c = strip_identity_components(to_structural_constants(table))
    return theta_from_constants(c, ops, table.has_identity, tol)


def reconstruct_constants(theta: ThetaTensor, ops: ConnectingOperators | None = None,
                          tol: float = DEFAULT_TOL) -> np.ndarray:
    """Recover the full structural constants from theta.

    c[i, j, k] = 1/2 sum M_j[C,A] M_i[A,B] M_k[D,B] theta[C,D]
    """
    ops = new_basis_operators() if ops is None else ops
    _require_new(ops)
    m = ops.mats
    th = np.asarray(theta.mat, dtype=complex)
    pair = np.einsum("jca,iab->ijcb", m, m)
    lowered = np.einsum("cd,kdb->kcb", th, m)
    c = RECONSTRUCT_FACTOR * np.einsum("ijcb,kcb->ijk", pair, lowered)
    imag = np.abs(c.imag).max()
    if imag > tol:
        raise RealnessError(f"reconstructed constants have imaginary part {imag:.3g}")
    return c.real


def _diag(*values):
    return np.diag(np.array(values, dtype=float))


def _noncanonical():
    m = np.zeros((8, 8))
    m[:2, :2] = 1.0
    return m


# Reference theta matrices, keyed by builtin name.
REFERENCE_THETA = {
    "octonion": _diag(2, 0, 0, 0, 0, 0, 0, 0),
    "gen-octonion-e1": _diag(1, 1, 0, 0, 0, 0, 0, 0),
    "quaternion-analog": _diag(0.5, 0.5, 0, 0, 0.5, 0.5, 0, 0),
    "carcass": _diag(1, 0, 0, 0, 0, 0, 0, -1),
    "gen-octonion-e4": _diag(1, 0, 0, 0, 0, 0, 0, 1),
    "octonion-noncanonical": _noncanonical(),
}


def format_theta(theta: ThetaTensor) -> str:
    rows = []
    for row in theta.real:
        # +0.0 folds negative zeros so output is byte-stable
        rows.append(" ".join(f"{v + 0.0:9.4f}" for v in np.round(row, 12)))
    return "\n".join(rows) + "\n"
