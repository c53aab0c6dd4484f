"""Exact symmetry algebras of homogeneous cubic metrics on 3-space.

The package computes, in exact rational arithmetic, the algebra of affine
isometry generators (Killing fields) of a constant-coefficient cubic metric,
its matrix invariants and Lie structure, classifies the metric into one of
eight symmetry classes, and audits a built-in catalog of the canonical
metrics with nontrivial symmetries.
"""

from .forms import (CubicForm, Mat3, SingularTransformError, form_of,
                    symmetrized_monomial, tau0_upper_bound, vec3)
from .killing import (KillingSystem, SymmetryAlgebra, build_system,
                      killing_operator, solve, verify_killing)
from .liealg import (ColinearityVerdict, DependentBasisError, InvariantSeries,
                     NotClosedError, StructureConstants, bracket, colinearity,
                     derived_algebra, invariants, is_abelian, solvable_pair,
                     structure_constants)
from .classify import (ClassificationReport, ComparisonVerdict, SymmetryClass,
                       classify, compare, NOT_EQUIVALENT, POSSIBLY_EQUIVALENT)
from . import catalog

__all__ = [
    "CubicForm", "Mat3", "SingularTransformError", "form_of",
    "symmetrized_monomial", "tau0_upper_bound", "vec3",
    "KillingSystem", "SymmetryAlgebra", "build_system", "killing_operator",
    "solve", "verify_killing",
    "ColinearityVerdict", "DependentBasisError", "InvariantSeries",
    "NotClosedError", "StructureConstants", "bracket", "colinearity",
    "derived_algebra", "invariants", "is_abelian", "solvable_pair",
    "structure_constants",
    "ClassificationReport", "ComparisonVerdict", "SymmetryClass", "classify",
    "compare", "NOT_EQUIVALENT", "POSSIBLY_EQUIVALENT",
    "catalog",
]

__version__ = "0.1.0"
