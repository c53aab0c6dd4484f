"""Symmetry classification tree and the necessary-condition comparison."""

import random
from fractions import Fraction

from cubicsym import NOT_EQUIVALENT, POSSIBLY_EQUIVALENT, classify, compare, \
    form_of
from cubicsym.properties import random_form, random_invertible


def test_classify_examples():
    assert classify(form_of(F=1)).label == "1"
    assert classify(form_of(A1=1, B3=1)).label == "4"
    assert classify(form_of(A1=1)).label == "3(1)"
    assert classify(form_of(A1=1, B1=1, B2=-1)).label == "5"   # mixed signs
    assert classify(form_of(A1=1, B1=1, B2=1)).label == "6"    # same signs
    assert classify(form_of(A1=1, A2=1, A3=1)).label == "8"


def test_classify_complex_equivalence_flags():
    five = classify(form_of(A1=1, B1=1, B2=-1))
    six = classify(form_of(A1=1, B1=1, B2=1))
    assert five.symmetry_class.complex_equivalent_to == "6"
    assert six.symmetry_class.complex_equivalent_to == "5"


def test_classify_zero_form_is_degenerate():
    report = classify(form_of())
    assert report.label == "3(1)"
    assert any("degenerate" in note for note in report.notes)


def test_classify_infinite_subclasses():
    assert classify(form_of(B1=1)).label == "3(3)"        # radical 1, finite 1
    assert classify(form_of(A1=1, A2=1)).label == "3(2)"  # radical 1, finite 0
    assert classify(form_of(A1=1)).label == "3(1)"        # radical 2


def test_classify_evidence_fields():
    dim1 = classify(form_of(A1=1, F=1))
    assert dim1.invariant_series is not None and dim1.structure is None
    dim2 = classify(form_of(F=1))
    assert dim2.structure is not None and dim2.invariant_series is None
    dim0 = classify(form_of(A1=1, A2=1, A3=1))
    assert dim0.invariant_series is None and dim0.structure is None


def test_classify_is_affine_invariant():
    rng = random.Random(89)
    for _ in range(40):
        g = random_form(rng)
        T = random_invertible(rng)
        assert classify(g).label == classify(g.pullback(T)).label


def test_compare_different_classes():
    verdict = compare(form_of(F=1), form_of(A1=1, B3=1))
    assert verdict.verdict == NOT_EQUIVALENT
    assert "class" in verdict.witness


def test_compare_pullback_is_possibly_equivalent():
    rng = random.Random(97)
    for _ in range(25):
        g = random_form(rng)
        T = random_invertible(rng)
        assert compare(g, g.pullback(T)).verdict == POSSIBLY_EQUIVALENT


def test_compare_class_five_vs_six():
    five = form_of(A1=1, B1=1, B2=-1)
    six = form_of(A1=1, B1=1, B2=1)
    verdict = compare(five, six)
    assert verdict.verdict == NOT_EQUIVALENT
    assert any("complex" in n for n in verdict.notes)


def test_compare_same_class_different_scale_is_possible():
    # two boosts of different strength: classes agree, colinearity is real
    a = form_of(A1=1, F=1)
    b = a.pullback(random_invertible(random.Random(3)))
    verdict = compare(a, b)
    assert verdict.verdict == POSSIBLY_EQUIVALENT


def test_compare_is_symmetric_and_reflexive():
    rng = random.Random(101)
    for _ in range(20):
        g1, g2 = random_form(rng), random_form(rng)
        v12 = compare(g1, g2).verdict
        v21 = compare(g2, g1).verdict
        assert v12 == v21
        assert compare(g1, g1).verdict == POSSIBLY_EQUIVALENT


def test_compare_rescaled_metric_stays_possible():
    # componentwise rescaling preserves every implemented invariant
    a = form_of(A1=1, B3=1)
    scaled = form_of(A1=8, B3=Fraction(1, 2))
    assert compare(a, scaled).verdict == POSSIBLY_EQUIVALENT
