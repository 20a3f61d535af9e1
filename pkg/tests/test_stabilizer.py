import numpy as np
import pytest

from spintheta import algebra
from spintheta.algebra import builtin, to_structural_constants
from spintheta.numerics import rank_and_nullspace
from spintheta.spinor import ConnectingOperators, vector_to_spinor_generator
from spintheta.stabilizer import (
    PAIRS,
    format_constraint,
    identity_constraints,
    stabilizer_dimension,
    theta_constraints,
    to_matrix,
    vector_generators,
)
from spintheta.theta import REFERENCE_THETA, theta_for_table

from conftest import UNITAL, random_orthogonal
from oracles import IDENTITY_ROWS, OCTONION_THETA_ROWS, coords, derivation_basis, derivation_dimension


def rank(rows):
    return rank_and_nullspace(rows, 1e-9)[0]


def test_identity_constraints_rank_and_rows(ops):
    rows = identity_constraints(ops).rows
    assert rank(rows) == 7
    assert rank(np.vstack([rows, IDENTITY_ROWS])) == 7
    assert rank(IDENTITY_ROWS) == 7


def test_identity_rows_read_like_the_equations(ops):
    text = {format_constraint(r) for r in identity_constraints(ops).rows}
    assert "-T12 -T34 +T56 +T78 = 0" in text
    assert "+T15 +T26 +T37 +T48 = 0" in text


def test_zero_generator_satisfies_everything(ops):
    rows = identity_constraints(ops).rows
    assert not (rows @ np.zeros(28)).any()


def test_octonion_theta_constraints():
    rows = theta_constraints(REFERENCE_THETA["octonion"]).rows
    assert rank(rows) == 7
    assert rank(np.vstack([rows, OCTONION_THETA_ROWS])) == 7


def test_scalar_theta_has_no_constraints():
    assert len(theta_constraints(3.0 * np.eye(8))) == 0


def test_rank_two_projector_constraints():
    rows = theta_constraints(REFERENCE_THETA["gen-octonion-e1"]).rows
    expected = np.array([coords((1, f"{a}{b}")) for a in (1, 2) for b in range(3, 9)])
    assert rank(rows) == 12
    assert rank(np.vstack([rows, expected])) == 12


@pytest.mark.parametrize("name, dim", [
    ("octonion", 14),
    ("gen-octonion-e1", 9),
    ("quaternion-analog", 9),
    ("gen-octonion-e4", 9),
    ("octonion-noncanonical", 14),
])
def test_dimensions(name, dim):
    res = stabilizer_dimension(builtin(name))
    assert res.dim == dim
    assert res.rank_identity == 7
    assert res.rank_combined <= res.rank_identity + res.rank_theta
    assert len(res.surviving) == res.rank_combined


@pytest.mark.parametrize("name", UNITAL)
def test_dimension_equals_derivation_algebra(name):
    c = to_structural_constants(builtin(name))
    assert stabilizer_dimension(builtin(name)).dim == derivation_dimension(c)


@pytest.mark.parametrize("name", UNITAL)
def test_pullback_spans_derivations(name):
    table = builtin(name)
    res = stabilizer_dimension(table)
    gens = vector_generators(res)
    ders = derivation_basis(to_structural_constants(table))
    stacked = np.array([g.ravel() for g in gens] + [d.ravel() for d in ders])
    assert np.linalg.matrix_rank(stacked, tol=1e-8) == res.dim


def test_carcass_is_reported_not_asserted():
    res = stabilizer_dimension(builtin("carcass"))
    assert res.rank_combined == res.rank_theta  # no identity rows without an identity
    assert 0 <= res.dim <= 28


@pytest.mark.parametrize("name", algebra.BUILTIN_NAMES)
def test_nullspace_satisfies_raw_equations(name, ops):
    table = builtin(name)
    theta = theta_for_table(table, ops).real
    res = stabilizer_dimension(table, ops)
    for v in res.basis:
        t = to_matrix(v)
        if table.has_identity:
            assert np.abs(np.einsum("iab,ab->i", ops.mats, t)).max() < 1e-8
        commutator = np.einsum("ac,cb->ab", t, theta) + np.einsum("bc,ac->ab", t, theta)
        assert np.abs(commutator).max() < 1e-8
    # the same after a round trip through the vector side
    for g in vector_generators(res, ops):
        t = vector_to_spinor_generator(g, ops)
        commutator = t @ theta - theta @ t
        assert np.abs(commutator).max() < 1e-8


def test_octonion_identity_and_theta_rows_rank():
    assert rank(np.vstack([IDENTITY_ROWS, OCTONION_THETA_ROWS])) == 14


@pytest.mark.parametrize("name", ["octonion", "gen-octonion-e1", "quaternion-analog"])
def test_dimension_basis_independent(name, ops, rng):
    base = stabilizer_dimension(builtin(name), ops).dim
    for _ in range(3):
        o = random_orthogonal(rng)
        moved = ConnectingOperators(np.einsum("ac,icd,bd->iab", o, ops.mats, o), "new")
        assert stabilizer_dimension(builtin(name), moved).dim == base


def test_quaternion_analog_splits_three_plus_six():
    gens = vector_generators(stabilizer_dimension(builtin("quaternion-analog")))
    quat = [1, 2, 3]
    rest = [4, 5, 6, 7]
    for g in gens:
        assert np.abs(g[0]).max() < 1e-9          # identity fixed
        assert np.abs(g[np.ix_(quat, rest)]).max() < 1e-9
    q_block = np.array([g[np.ix_(quat, quat)].ravel() for g in gens])
    r_block = np.array([g[np.ix_(rest, rest)].ravel() for g in gens])
    assert np.linalg.matrix_rank(q_block, tol=1e-8) == 3   # so(3)
    assert np.linalg.matrix_rank(r_block, tol=1e-8) == 6   # so(4)


def test_format_constraint():
    assert format_constraint(coords((-1, "12"), (-1, "34"), (1, "56"), (1, "78"))) == \
        "-T12 -T34 +T56 +T78 = 0"
    assert format_constraint(coords((0.5, "13"))) == "+0.5*T13 = 0"
