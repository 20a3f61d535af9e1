import itertools

import numpy as np
import pytest

from spintheta import algebra
from spintheta.algebra import MultiplicationTable, builtin, check_axioms
from spintheta.classify import ISOMORPHIC, NOT_ISOMORPHIC, compare, signature

HALF = [0.5, 0.5, 0.5, 0.5, 0, 0, 0, 0]


@pytest.mark.parametrize("name, expected", [
    ("octonion", [2, 0, 0, 0, 0, 0, 0, 0]),
    ("octonion-noncanonical", [2, 0, 0, 0, 0, 0, 0, 0]),
    ("gen-octonion-e1", [1, 1, 0, 0, 0, 0, 0, 0]),
    ("gen-octonion-e4", [1, 1, 0, 0, 0, 0, 0, 0]),
    ("quaternion-analog", HALF),
    ("carcass", [1, 0, 0, 0, 0, 0, 0, -1]),
])
def test_signatures(name, expected):
    sig = signature(builtin(name))
    assert list(sig.eigenvalues) == pytest.approx(expected, abs=1e-6)
    assert sig.name == name


@pytest.mark.parametrize("a, b, verdict", [
    ("octonion", "octonion-noncanonical", ISOMORPHIC),
    ("gen-octonion-e1", "gen-octonion-e4", ISOMORPHIC),
    ("octonion", "quaternion-analog", NOT_ISOMORPHIC),
    ("octonion", "carcass", NOT_ISOMORPHIC),
    ("gen-octonion-e1", "quaternion-analog", NOT_ISOMORPHIC),
])
def test_compare(a, b, verdict):
    assert compare(builtin(a), builtin(b)).verdict == verdict
    assert compare(builtin(b), builtin(a)).verdict == verdict


def test_compare_is_symmetric_and_reflexive():
    names = algebra.BUILTIN_NAMES
    for a, b in itertools.product(names, repeat=2):
        assert compare(builtin(a), builtin(b)).verdict == compare(builtin(b), builtin(a)).verdict
    for a in names:
        assert compare(builtin(a), builtin(a)).isomorphic


def test_identity_flag_is_a_hard_key():
    carcass = builtin("carcass")
    # same cells as the carcass but with e0 acting as identity: unital
    cells = [list(r) for r in carcass.cells]
    for k in range(8):
        cells[0][k] = (1, k)
        cells[k][0] = (1, k)
    unital = MultiplicationTable(tuple(tuple(r) for r in cells), "unital carcass")
    rep = compare(carcass, unital, tol=1e9)  # spectra may be anything
    assert rep.verdict == NOT_ISOMORPHIC


def relabel(table, perm, signs):
    """Table of the same algebra in the basis f_k = signs[k] e_perm[k]."""
    inv = {p: k for k, p in enumerate(perm)}
    cells = [[None] * 8 for _ in range(8)]
    for r in range(8):
        for c in range(8):
            cell = table.cells[perm[r]][perm[c]]
            if cell is None:
                continue
            sign, idx = cell
            k = inv[idx]
            cells[r][c] = (sign * signs[r] * signs[c] * signs[k], k)
    return MultiplicationTable(tuple(tuple(r) for r in cells), table.name + "'")


def orientation(perm, signs):
    p = np.zeros((8, 8))
    for k in range(8):
        p[perm[k], k] = signs[k]
    return round(np.linalg.det(p))


def random_relabeling(rng, det):
    while True:
        perm = [0] + [int(x) for x in 1 + rng.permutation(7)]
        signs = [1] + [int(x) for x in rng.choice([-1, 1], size=7)]
        if orientation(perm, signs) == det:
            return perm, signs


@pytest.mark.parametrize("name", ["octonion", "gen-octonion-e1", "quaternion-analog", "carcass"])
def test_signature_invariant_under_oriented_relabeling(name, rng):
    table = builtin(name)
    base = signature(table).eigenvalues
    for _ in range(5):
        moved = relabel(table, *random_relabeling(rng, +1))
        assert check_axioms(moved).ok == check_axioms(table).ok
        assert signature(moved).eigenvalues == pytest.approx(base, abs=1e-6)


def test_orientation_reversal_flips_algebra_part(rng):
    # A det -1 relabeling yields an isomorphic algebra whose theta is
    # I/2 - theta: the signature is an SO(8) invariant, not an O(8) one.
    table = builtin("octonion")
    for _ in range(3):
        moved = relabel(table, *random_relabeling(rng, -1))
        assert check_axioms(moved).ok
        assert list(signature(moved).eigenvalues) == pytest.approx([0.5] * 7 + [-1.5], abs=1e-9)
        assert compare(table, moved).verdict == NOT_ISOMORPHIC
    quat = builtin("quaternion-analog")
    moved = relabel(quat, *random_relabeling(rng, -1))
    assert compare(quat, moved).isomorphic


def test_e1_e4_pair_related_by_relabeling():
    t2, t5 = builtin("gen-octonion-e1"), builtin("gen-octonion-e4")
    assert signature(t2).eigenvalues == pytest.approx(signature(t5).eigenvalues, abs=1e-6)
    assert compare(t2, t5).max_deviation < 1e-9
