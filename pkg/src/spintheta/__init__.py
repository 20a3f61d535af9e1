"""Classification of 8-dimensional alternative-elastic algebras by the
eigenvalues of their controlling spin-tensor."""

from .algebra import (
    BUILTIN_NAMES,
    MultiplicationTable,
    builtin,
    check_axioms,
    conjugate,
    inner_product,
    load_table,
    multiply,
    parse_table,
    render_table,
    strip_identity_components,
    to_structural_constants,
)
from .classify import ClassificationReport, Signature, compare, signature
from .errors import ConsistencyError, MetricError, ParseError, RealnessError, SymmetryError
from .numerics import rank_and_nullspace, symmetric_eigenvalues
from .spinor import (
    ConnectingOperators,
    build_seed_operators,
    change_spinor_basis,
    clifford_diagnostic,
    new_basis_operators,
    vector_to_spinor_generator,
)
from .stabilizer import identity_constraints, stabilizer_dimension, theta_constraints
from .theta import ThetaTensor, reconstruct_constants, theta_for_table, theta_from_constants

__version__ = "0.1.0"
