"""Infinitesimal stabilizers of the identity and of theta on the spinor side.

An antisymmetric spinor generator T is described by its 28 coordinates
T_AB, A < B, in lexicographic order. Every constraint is a real row over
those coordinates.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .algebra import MultiplicationTable
from .numerics import DEFAULT_TOL, rank_and_nullspace
from .spinor import ConnectingOperators, new_basis_operators, vector_to_spinor_generator
from .theta import ThetaTensor, theta_for_table

DIM = 8
PAIRS = tuple((a, b) for a in range(DIM) for b in range(a + 1, DIM))
NCOORD = len(PAIRS)  # 28


@dataclass
class ConstraintSystem:
    rows: np.ndarray = field(default_factory=lambda: np.zeros((0, NCOORD)))
    labels: list = field(default_factory=list)

    def __len__(self):
        return len(self.rows)

    def stack(self, other: "ConstraintSystem") -> "ConstraintSystem":
        return ConstraintSystem(np.vstack([self.rows, other.rows]), self.labels + other.labels)


def to_matrix(coords) -> np.ndarray:
    """Antisymmetric 8x8 matrix from its 28 upper-triangle coordinates."""
    t = np.zeros((DIM, DIM))
    for k, (a, b) in enumerate(PAIRS):
        t[a, b] = coords[k]
        t[b, a] = -coords[k]
    return t


def to_coords(t) -> np.ndarray:
    return np.array([t[a, b] for a, b in PAIRS], dtype=float)


def _normalize(rows, tol, positive_lead=False):
    """Drop zero rows, scale to unit max-entry, drop duplicates up to sign."""
    kept = []
    for row in rows:
        peak = np.abs(row).max()
        if peak < tol:
            continue
        row = row / peak
        if positive_lead and row[np.abs(row) >= tol][0] < 0:
            row = -row
        if any(np.abs(row - k).max() < tol or np.abs(row + k).max() < tol for k in kept):
            continue
        kept.append(row)
    return np.array(kept).reshape(-1, NCOORD)


def identity_constraints(ops: ConnectingOperators | None = None,
                         tol: float = DEFAULT_TOL) -> ConstraintSystem:
    """Rows of eta_i^{AB} T_AB = 0: sum_{A<B} (M_i[A,B] - M_i[B,A]) T_AB."""
    ops = new_basis_operators() if ops is None else ops
    raw = []
    for m in ops.mats:
        coeff = np.array([m[a, b] - m[b, a] for a, b in PAIRS])
        raw.extend([coeff.real, coeff.imag])
    rows = _normalize(raw, tol)
    return ConstraintSystem(rows, ["identity"] * len(rows))


def theta_constraints(theta: ThetaTensor | np.ndarray, tol: float = DEFAULT_TOL) -> ConstraintSystem:
    """Rows of the commutator condition T theta - theta T = 0.

    For antisymmetric T the commutator is symmetric, so only A <= B entries
    are independent equations.
    """
    th = theta.real if isinstance(theta, ThetaTensor) else np.asarray(theta, dtype=float)
    raw = []
    for a in range(DIM):
        for b in range(a, DIM):
            row = np.zeros(NCOORD)
            for k, (p, q) in enumerate(PAIRS):
                # d/dT_pq of (T th - th T)[a, b] with T[p,q] = 1, T[q,p] = -1
                val = 0.0
                if a == p:
                    val += th[q, b]
                if a == q:
                    val -= th[p, b]
                if b == q:
                    val -= th[a, p]
                if b == p:
                    val += th[a, q]
                row[k] = val
            raw.append(row)
    rows = _normalize(raw, tol, positive_lead=True)
    return ConstraintSystem(rows, ["theta"] * len(rows))


def format_constraint(row, tol: float = DEFAULT_TOL) -> str:
    """Human-readable form, e.g. ``-T12 -T34 +T56 +T78 = 0`` (1-based labels)."""
    terms = []
    for k, v in enumerate(row):
        if abs(v) < tol:
            continue
        a, b = PAIRS[k]
        sign = "-" if v < 0 else "+"
        mag = abs(v)
        coef = "" if abs(mag - 1.0) < tol else f"{mag:.6g}*"
        terms.append(f"{sign}{coef}T{a + 1}{b + 1}")
    return " ".join(terms) + " = 0"


@dataclass
class StabilizerResult:
    dim: int
    rank_identity: int
    rank_theta: int
    rank_combined: int
    surviving: list        # [(label, row)] independent rows, identity first
    basis: list            # nullspace vectors over the 28 coordinates


def _independent_rows(system: ConstraintSystem, tol):
    chosen = []
    current = np.zeros((0, NCOORD))
    rank = 0
    for label, row in zip(system.labels, system.rows):
        trial = np.vstack([current, row])
        r, _ = rank_and_nullspace(trial, tol)
        if r > rank:
            current, rank = trial, r
            chosen.append((label, row))
    return chosen


def stabilizer_dimension(table: MultiplicationTable, ops: ConnectingOperators | None = None,
                         tol: float = DEFAULT_TOL) -> StabilizerResult:
    """Dimension of the generators preserving the identity (if any) and theta."""
    ops = new_basis_operators() if ops is None else ops
    theta = theta_for_table(table, ops, tol)
    ident = identity_constraints(ops, tol)
    thc = theta_constraints(theta, tol)
    r_ident, _ = rank_and_nullspace(ident.rows, tol)
    r_theta, _ = rank_and_nullspace(thc.rows, tol)
    combined = ident.stack(thc) if table.has_identity else thc
    r_comb, null = rank_and_nullspace(combined.rows, tol)
    return StabilizerResult(
        dim=NCOORD - r_comb,
        rank_identity=r_ident,
        rank_theta=r_theta,
        rank_combined=r_comb,
        surviving=_independent_rows(combined, tol),
        basis=null,
    )


def vector_map_matrix(ops: ConnectingOperators | None = None) -> np.ndarray:
    """28x28 matrix of the vector -> spinor generator map in pair coordinates."""
    cols = [to_coords(vector_to_spinor_generator(to_matrix(e), ops)) for e in np.eye(NCOORD)]
    return np.array(cols).T


def vector_generators(result: StabilizerResult, ops: ConnectingOperators | None = None) -> list:
    """Pull the stabilizer basis back to antisymmetric generators on R^8."""
    m = vector_map_matrix(ops)
    return [to_matrix(np.linalg.solve(m, v)) for v in result.basis]
