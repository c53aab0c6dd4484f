"""Symmetry classification of cubic metrics.

Eight classes, determined entirely by the computed symmetry algebra:

    1     2-dimensional abelian
    2     2-dimensional nonabelian
    3(1)  infinite family, radical dimension 2 (or the zero form)
    3(2)  infinite family, radical dimension 1, no extra finite generator
    3(3)  infinite family, radical dimension 1, one extra finite generator
    4     1-dimensional with nonzero divergence (I1 != 0)
    5     1-dimensional, I1 = 0, I2 > 0
    6     1-dimensional, I1 = 0, I2 < 0
    7     anything not matching the patterns above (catch-all, always noted)
    8     no nontrivial symmetries

Classes 5 and 6 are real forms of the same complex class: the proportionality
constant linking their invariant series is imaginary, so each report carries
a complex_equivalent_to flag pointing at the other.
"""

from dataclasses import dataclass

from .killing import solve
from .liealg import colinearity, invariants, structure_constants
from .linalg import span_equal


@dataclass(frozen=True)
class SymmetryClass:
    label: str
    complex_equivalent_to: str | None = None


@dataclass(frozen=True)
class ClassificationReport:
    symmetry_class: SymmetryClass
    algebra: object
    invariant_series: object = None
    structure: object = None
    notes: tuple = ()

    @property
    def label(self):
        return self.symmetry_class.label

    def to_json(self):
        return {
            "class": self.symmetry_class.label,
            "complex_equivalent_to": self.symmetry_class.complex_equivalent_to,
            "algebra": self.algebra.to_json(),
            "invariants": None if self.invariant_series is None
            else self.invariant_series.to_json(),
            "structure_constants": None if self.structure is None
            else self.structure.to_json(),
            "notes": list(self.notes),
        }


def classify(form):
    """Classify a cubic metric by its computed symmetry algebra."""
    algebra = solve(form)
    notes = []
    r = len(algebra.radical_basis)
    dim = algebra.finite_nontrivial_dim

    if r > 0:
        if r >= 3:
            label = "3(1)"
            notes.append("degenerate input: the zero form carries the full radical")
        elif r == 2:
            label = "3(1)"
        elif dim >= 1:
            label = "3(3)"
        else:
            label = "3(2)"
        return ClassificationReport(SymmetryClass(label), algebra, notes=tuple(notes))

    if dim == 0:
        return ClassificationReport(SymmetryClass("8"), algebra)

    if dim == 1:
        series = invariants(algebra.generators[0])
        if series.I[0] != 0:
            cls = SymmetryClass("4")
        elif series.I[1] > 0:
            cls = SymmetryClass("5", complex_equivalent_to="6")
        elif series.I[1] < 0:
            cls = SymmetryClass("6", complex_equivalent_to="5")
        else:
            cls = SymmetryClass("7")
            notes.append("1-dimensional algebra with nilpotent generator; "
                         "outside the catalogued patterns")
        return ClassificationReport(cls, algebra, invariant_series=series,
                                    notes=tuple(notes))

    if dim == 2:
        structure = structure_constants(list(algebra.generators))
        label = "1" if structure.is_zero() else "2"
        return ClassificationReport(SymmetryClass(label), algebra,
                                    structure=structure, notes=tuple(notes))

    notes.append("unlisted nontrivial symmetries: finite algebra of dimension "
                 f"{dim} with trivial radical")
    return ClassificationReport(SymmetryClass("7"), algebra, notes=tuple(notes))


NOT_EQUIVALENT = "NOT_EQUIVALENT"
POSSIBLY_EQUIVALENT = "POSSIBLY_EQUIVALENT"


@dataclass(frozen=True)
class ComparisonVerdict:
    verdict: str
    witness: str | None = None
    notes: tuple = ()

    def to_json(self):
        return {"verdict": self.verdict, "witness": self.witness,
                "notes": list(self.notes)}


def compare(form1, form2):
    """Necessary conditions for affine equivalence; never claims equivalence.

    Returns NOT_EQUIVALENT with a witness (class label, radical dimension,
    abelian type or failed colinearity) or POSSIBLY_EQUIVALENT when every
    implemented invariant agrees.
    """
    rep1, rep2 = classify(form1), classify(form2)
    notes = []
    if rep1.label != rep2.label:
        pair = {rep1.label, rep2.label}
        if pair == {"5", "6"}:
            notes.append("classes 5 and 6 are complex-equivalent: the "
                         "proportionality constant is imaginary")
        return ComparisonVerdict(
            NOT_EQUIVALENT,
            witness=f"symmetry class {rep1.label} vs {rep2.label}",
            notes=tuple(notes))
    a1, a2 = rep1.algebra, rep2.algebra
    if len(a1.radical_basis) != len(a2.radical_basis):
        return ComparisonVerdict(
            NOT_EQUIVALENT,
            witness=f"radical dimension {len(a1.radical_basis)} vs {len(a2.radical_basis)}")
    if a1.finite_nontrivial_dim != a2.finite_nontrivial_dim:
        return ComparisonVerdict(
            NOT_EQUIVALENT,
            witness=f"finite symmetry dimension {a1.finite_nontrivial_dim} "
                    f"vs {a2.finite_nontrivial_dim}")
    if rep1.invariant_series is not None and rep2.invariant_series is not None:
        verdict = colinearity(rep1.invariant_series, rep2.invariant_series)
        if verdict.kind == "none":
            return ComparisonVerdict(
                NOT_EQUIVALENT,
                witness=f"invariant series are not proportional ({verdict.reason})")
        if verdict.kind == "complex":
            return ComparisonVerdict(
                NOT_EQUIVALENT,
                witness="invariant series proportional only over the complex "
                        f"numbers (C^2 = {verdict.C_squared})",
                notes=("complex-equivalence: the metrics share a complexification",))
        notes.append("invariant series proportional with real constant")
    if rep1.structure is not None and rep2.structure is not None:
        ab1 = rep1.structure.is_zero()
        ab2 = rep2.structure.is_zero()
        if ab1 != ab2:
            return ComparisonVerdict(NOT_EQUIVALENT, witness="abelian vs nonabelian")
    return ComparisonVerdict(POSSIBLY_EQUIVALENT, notes=tuple(notes))


def conjugated_generators(algebra, T):
    """Generators transported to the pulled-back frame: T^-1 A T."""
    inv = T.inverse()
    return [inv @ A @ T for A in algebra.generators]


def same_span(mats_a, mats_b):
    """Exact equality of matrix spans (used by the covariance checks)."""
    return span_equal([m.flatten() for m in mats_a], [m.flatten() for m in mats_b])
