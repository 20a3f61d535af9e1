"""Multiplication tables, structural constants and algebra diagnostics.

A table is an 8x8 grid of signed basis references: cell ``[r][c]`` holds the
product ``e_r * e_c`` as ``(sign, index)`` or ``None`` for zero. Structural
constants are a real ``(8, 8, 8)`` array ``c`` with
``e_l * e_m = sum_r c[l, m, r] e_r``. Index 0 is the identity slot.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from importlib import resources
from typing import Optional, Tuple

import numpy as np

from .errors import MetricError, ParseError
from .numerics import DEFAULT_TOL

DIM = 8

Cell = Optional[Tuple[int, int]]

_TOKEN = re.compile(r"^(?:0|([+-]?)e([0-7]))$")

# builtin name -> (table number, description)
BUILTINS = {
    "octonion": (1, "canonical octonions"),
    "gen-octonion-e1": (2, "generating octonion algebra for e1"),
    "quaternion-analog": (3, "8-dimensional quaternion analog"),
    "carcass": (4, "octonion carcass, no identity"),
    "gen-octonion-e4": (5, "generating octonion algebra for e4"),
    "octonion-noncanonical": (6, "octonions in a non-canonical basis"),
}
BUILTIN_NAMES = tuple(BUILTINS)

# Verbatim transcriptions kept for comparison; see the .tbl headers.
UNREPAIRED = {
    "gen-octonion-e4-unrepaired": "gen-octonion-e4",
    "octonion-noncanonical-unrepaired": "octonion-noncanonical",
}


@dataclass(frozen=True)
class MultiplicationTable:
    cells: tuple
    name: str = ""
    has_identity: bool = field(init=False)

    def __post_init__(self):
        if len(self.cells) != DIM or any(len(row) != DIM for row in self.cells):
            raise ValueError("a multiplication table needs 8x8 cells")
        unit = all(
            self.cells[0][k] == (1, k) and self.cells[k][0] == (1, k) for k in range(DIM)
        )
        object.__setattr__(self, "has_identity", unit)

    def product(self, r: int, c: int) -> Cell:
        return self.cells[r][c]


def _parse_token(tok: str, line: int, column: int) -> Cell:
    m = _TOKEN.match(tok)
    if m is None:
        raise ParseError(f"malformed token {tok!r}", line, column)
    if m.group(2) is None:
        return None
    sign = -1 if m.group(1) == "-" else 1
    return (sign, int(m.group(2)))


def parse_table(text: str, name: str = "") -> MultiplicationTable:
    """Parse the plain-text table format.

    Lines starting with ``#`` are comments and blank lines are skipped.
    There must be exactly 8 data lines of 8 tokens each; a token is ``0`` or
    ``[+-]?e<0-7>``. Positions in errors are 1-based file line/column numbers.
    """
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        tokens = stripped.split()
        if len(tokens) != DIM:
            raise ParseError(f"expected 8 tokens, found {len(tokens)}", lineno)
        if len(rows) == DIM:
            raise ParseError("more than 8 data lines", lineno)
        row = []
        for match in re.finditer(r"\S+", raw):
            row.append(_parse_token(match.group(), lineno, match.start() + 1))
        rows.append(tuple(row))
    if len(rows) != DIM:
        raise ParseError(f"expected 8 data lines, found {len(rows)}")
    return MultiplicationTable(tuple(rows), name)


def render_table(table: MultiplicationTable) -> str:
    def fmt(cell: Cell) -> str:
        if cell is None:
            return "0"
        sign, idx = cell
        return f"{'-' if sign < 0 else ''}e{idx}"

    lines = []
    if table.name:
        lines.append(f"# {table.name}")
    for row in table.cells:
        lines.append(" ".join(f"{fmt(c):>3}" for c in row))
    return "\n".join(lines) + "\n"


def load_table(path) -> MultiplicationTable:
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    return parse_table(text, name=str(path))


def builtin(name: str) -> MultiplicationTable:
    """Return one of the embedded tables by name (see ``BUILTINS``)."""
    if name not in BUILTINS and name not in UNREPAIRED:
        known = ", ".join(BUILTIN_NAMES + tuple(UNREPAIRED))
        raise ValueError(f"unknown builtin {name!r}; known: {known}")
    text = resources.files("spintheta.tables").joinpath(f"{name}.tbl").read_text("utf-8")
    return parse_table(text, name=name)


def to_structural_constants(table: MultiplicationTable) -> np.ndarray:
    c = np.zeros((DIM, DIM, DIM))
    for l in range(DIM):
        for m in range(DIM):
            cell = table.cells[l][m]
            if cell is not None:
                sign, r = cell
                c[l, m, r] = sign
    return c


def strip_identity_components(c) -> np.ndarray:
    """Zero every constant touching the identity slot (l, m or r equal to 0)."""
    out = np.array(c, dtype=float)
    out[0, :, :] = 0.0
    out[:, 0, :] = 0.0
    out[:, :, 0] = 0.0
    return out


def multiply(a, b, c) -> np.ndarray:
    return np.einsum("l,m,lmr->r", np.asarray(a, float), np.asarray(b, float), c)


def conjugate(a) -> np.ndarray:
    out = np.array(a, dtype=float)
    out[1:] = -out[1:]
    return out


def basis(k: int) -> np.ndarray:
    e = np.zeros(DIM)
    e[k] = 1.0
    return e


def inner_product(a, b, c, tol: float = DEFAULT_TOL) -> float:
    """<a, b> = (a conj(b) + b conj(a)) / 2, which must be a multiple of e_0."""
    s = 0.5 * (multiply(a, conjugate(b), c) + multiply(b, conjugate(a), c))
    if np.abs(s[1:]).max() > tol:
        raise MetricError(
            f"(a conj(b) + b conj(a))/2 has non-scalar part {s[1:].tolist()}",
            pair=(tuple(np.asarray(a).tolist()), tuple(np.asarray(b).tolist())),
        )
    return float(s[0])


@dataclass
class AxiomReport:
    """Violations found by :func:`check_axioms`; triples/pairs are basis labels."""

    alternative: list = field(default_factory=list)
    elastic: list = field(default_factory=list)
    metric: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not (self.alternative or self.elastic or self.metric)


def _products(c):
    # left[a, b, d] = (e_a e_b) e_d ; right[a, b, d] = e_a (e_b e_d)
    left = np.einsum("abr,rds->abds", c, c)
    right = np.einsum("bdr,ars->abds", c, c)
    return left, right


def check_axioms(table_or_constants, tol: float = DEFAULT_TOL) -> AxiomReport:
    """Exhaustively check the polarized alternative-elastic identities.

    For all basis triples (a, b, c):

    * (ac+ca)b - a(cb) - c(ab) = b(ac+ca) - (ba)c - (bc)a
    * a(bc) + c(ba) = (ab)c + (cb)a

    Metric violations are basis pairs whose ``<e_i, e_j>`` is not scalar.
    """
    if isinstance(table_or_constants, MultiplicationTable):
        c = to_structural_constants(table_or_constants)
    else:
        c = np.asarray(table_or_constants, dtype=float)
    L, R = _products(c)

    # index order (a, b, c) throughout
    alt_lhs = (
        np.einsum("acbs->abcs", L)
        + np.einsum("cabs->abcs", L)
        - np.einsum("acbs->abcs", R)
        - np.einsum("cabs->abcs", R)
    )
    alt_rhs = (
        np.einsum("bacs->abcs", R)
        + np.einsum("bcas->abcs", R)
        - np.einsum("bacs->abcs", L)
        - np.einsum("bcas->abcs", L)
    )
    ela_lhs = R + np.einsum("cbas->abcs", R)
    ela_rhs = L + np.einsum("cbas->abcs", L)

    report = AxiomReport()
    bad_alt = np.abs(alt_lhs - alt_rhs).max(axis=3) > tol
    bad_ela = np.abs(ela_lhs - ela_rhs).max(axis=3) > tol
    report.alternative = [tuple(int(x) for x in t) for t in np.argwhere(bad_alt)]
    report.elastic = [tuple(int(x) for x in t) for t in np.argwhere(bad_ela)]

    for i in range(DIM):
        for j in range(i, DIM):
            try:
                inner_product(basis(i), basis(j), c, tol)
            except MetricError:
                report.metric.append((i, j))
    return report
