"""Eigenvalue signatures and the isomorphism test."""
from __future__ import annotations

from dataclasses import dataclass

from .algebra import MultiplicationTable
from .numerics import DEFAULT_TOL, symmetric_eigenvalues
from .spinor import ConnectingOperators
from .theta import theta_for_table

COMPARE_TOL = 1e-6

ISOMORPHIC = "isomorphic"
NOT_ISOMORPHIC = "not-isomorphic"


@dataclass(frozen=True)
class Signature:
    eigenvalues: tuple
    has_identity: bool
    name: str = ""


@dataclass(frozen=True)
class ClassificationReport:
    verdict: str
    first: Signature
    second: Signature
    max_deviation: float

    @property
    def isomorphic(self) -> bool:
        return self.verdict == ISOMORPHIC


def signature(table: MultiplicationTable, ops: ConnectingOperators | None = None,
              tol: float = DEFAULT_TOL) -> Signature:
    theta = theta_for_table(table, ops, tol)
    eig = symmetric_eigenvalues(theta.real, tol)
    return Signature(tuple(eig), table.has_identity, table.name)


def compare(a: MultiplicationTable, b: MultiplicationTable, tol: float = COMPARE_TOL,
            ops: ConnectingOperators | None = None) -> ClassificationReport:
    """Decide isomorphism by sorted-eigenvalue equality within ``tol``.

    Unital and non-unital tables never compare equal, whatever their spectra.
    """
    sa = signature(a, ops)
    sb = signature(b, ops)
    dev = max(abs(x - y) for x, y in zip(sa.eigenvalues, sb.eigenvalues))
    same = dev < tol and sa.has_identity == sb.has_identity
    return ClassificationReport(ISOMORPHIC if same else NOT_ISOMORPHIC, sa, sb, dev)
