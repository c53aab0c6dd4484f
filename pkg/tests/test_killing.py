"""Killing operator, assembled linear system, and the exact kernel solver."""

import random
from fractions import Fraction
from itertools import product

from cubicsym import Mat3, build_system, form_of, killing_operator, solve, \
    verify_killing
from cubicsym.classify import conjugated_generators, same_span
from cubicsym.forms import SORTED_TRIPLES
from cubicsym.linalg import in_span, rank, span_equal
from cubicsym.properties import random_form, random_invertible, random_matrix


def killing_oracle(form, A):
    """Independent three-term contraction over all 27 index triples."""
    out = {}
    for a, b, c in product((1, 2, 3), repeat=3):
        total = Fraction(0)
        for d in (1, 2, 3):
            total += (A[d - 1, a - 1] * form.component(d, b, c)
                      + A[d - 1, b - 1] * form.component(a, d, c)
                      + A[d - 1, c - 1] * form.component(a, b, d))
        out[(a, b, c)] = total
    return out


def test_killing_operator_matches_oracle_and_is_symmetric():
    rng = random.Random(41)
    for _ in range(40):
        g = random_form(rng)
        A = random_matrix(rng)
        K = killing_operator(g, A)
        oracle = killing_oracle(g, A)
        for idx, value in oracle.items():
            assert K.component(*idx) == value


def test_killing_operator_examples():
    bm = form_of(F=1)
    assert killing_operator(bm, Mat3.diag(1, -1, 0)).is_zero()
    rng = random.Random(43)
    for _ in range(20):
        g = random_form(rng)
        assert killing_operator(g, Mat3.identity()) == g.scale(3)
    # single entry A^1_2 = 1 against the sum of coordinate cubes: expanding
    # the three-term sum by hand leaves exactly the (112) component
    cubes = form_of(A1=1, A2=1, A3=1)
    unit = Mat3([[0, 1, 0], [0, 0, 0], [0, 0, 0]])
    out = killing_operator(cubes, unit)
    assert out == form_of(C1=1)
    assert not out.is_zero()


def test_killing_operator_bilinear():
    rng = random.Random(47)
    for _ in range(30):
        g1, g2 = random_form(rng), random_form(rng)
        A, B = random_matrix(rng), random_matrix(rng)
        assert killing_operator(g1 + g2, A) == \
            killing_operator(g1, A) + killing_operator(g2, A)
        assert killing_operator(g1, A + B) == \
            killing_operator(g1, A) + killing_operator(g1, B)


def test_build_system_zero_form():
    system = build_system(form_of())
    assert all(v == 0 for row in system.matrix for v in row)


def test_build_system_row_order_and_bm_row():
    # row 4 is the (1,2,3) component; for the single-F form applied to a
    # diagonal field it reads a+b+c
    system = build_system(form_of(F=1))
    row = system.matrix[SORTED_TRIPLES.index((1, 2, 3))]
    assert list(row) == [1, 0, 0, 0, 1, 0, 0, 0, 1]
    rng = random.Random(53)
    for _ in range(20):
        A = random_matrix(rng)
        assert system.apply(A) == killing_operator(form_of(F=1), A)


def test_build_system_linear_in_form():
    rng = random.Random(59)
    for _ in range(20):
        g1, g2 = random_form(rng), random_form(rng)
        m1 = build_system(g1).matrix
        m2 = build_system(g2).matrix
        msum = build_system(g1 + g2).matrix
        assert all(msum[i][j] == m1[i][j] + m2[i][j]
                   for i in range(10) for j in range(9))


def test_solve_bm():
    algebra = solve(form_of(F=1))
    assert algebra.finite_nontrivial_dim == 2
    assert algebra.radical_basis == ()
    assert not algebra.has_infinite_family
    expected = [Mat3.diag(1, -1, 0).flatten(), Mat3.diag(1, 0, -1).flatten()]
    assert span_equal([g.flatten() for g in algebra.generators], expected)


def test_solve_zero_form():
    algebra = solve(form_of())
    assert algebra.kernel_dim == 9
    assert len(algebra.radical_basis) == 3
    assert algebra.finite_nontrivial_dim == 0


def test_solve_sum_of_cubes_is_rigid():
    algebra = solve(form_of(A1=1, A2=1, A3=1))
    assert algebra.kernel_dim == 0
    assert algebra.finite_nontrivial_dim == 0


def test_solver_is_deterministic():
    rng = random.Random(61)
    for _ in range(10):
        g = random_form(rng)
        assert solve(g) == solve(g)


def test_verify_killing_catalog_fields():
    # the (A1, B3) metric with X = x2 d2 - (x3/2) d3
    assert verify_killing(form_of(A1=1, B3=1), Mat3.diag(0, 1, -Fraction(1, 2)))
    # the single-F form is scaled by the identity field, not preserved
    assert not verify_killing(form_of(F=1), Mat3.identity())
    # the (F, A1, B1+) metric with X = x2 d2 - (x3 + x2) d3
    g = form_of(A1=1, B1=1, F=1)
    assert verify_killing(g, Mat3([[0, 0, 0], [0, 1, 0], [0, -1, -1]]))


def _independent_rank(rows):
    # dense elimination with largest-pivot selection: a different pivoting
    # strategy and code path than the library's reduced echelon routine
    m = [list(map(Fraction, r)) for r in rows]
    nrows, ncols = len(m), len(m[0])
    rk = 0
    for col in range(ncols):
        piv, best = None, Fraction(0)
        for i in range(rk, nrows):
            if abs(m[i][col]) > best:
                piv, best = i, abs(m[i][col])
        if piv is None:
            continue
        m[rk], m[piv] = m[piv], m[rk]
        for i in range(nrows):
            if i != rk and m[i][col] != 0:
                f = m[i][col] / m[rk][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[rk])]
        rk += 1
    return rk


def test_solver_soundness_and_completeness():
    rng = random.Random(67)
    for _ in range(60):
        g = random_form(rng)
        system = build_system(g)
        algebra = solve(g)
        for A in algebra.generators:
            assert verify_killing(g, A)
        # rank-nullity against two independent rank computations
        rows = [list(r) for r in system.matrix]
        assert algebra.kernel_dim == 9 - rank(rows)
        assert algebra.kernel_dim == 9 - _independent_rank(rows)
        assert algebra.finite_nontrivial_dim >= 0


def test_kernel_covariance():
    rng = random.Random(71)
    for _ in range(30):
        g = random_form(rng)
        T = random_invertible(rng)
        a1 = solve(g)
        a2 = solve(g.pullback(T))
        moved = conjugated_generators(a1, T)
        assert same_span(moved, list(a2.generators))


def test_radical_rank_one_fields_are_symmetries():
    rng = random.Random(73)
    for _ in range(40):
        g = random_form(rng)
        kernel = [m.flatten() for m in solve(g).generators]
        for v in g.radical():
            for w in ([1, 0, 0], [0, 1, 0], [0, 0, 1], [2, -1, 3]):
                A = Mat3([[v[i] * Fraction(w[j]) for j in range(3)] for i in range(3)])
                assert verify_killing(g, A)
                assert in_span(kernel, A.flatten())
