"""Randomized exact property suites.

Each suite draws seeded random instances, checks an algebraic identity
exactly, and returns a SuiteResult.  The suites back both the test suite and
the command-line selftest.  Failures carry a reproducible description of the
offending instance.

Random forms are drawn from a mix of sparse small-integer forms, catalog
instances and random pullbacks of catalog instances, so kernels of every
dimension (0, 1, 2 and infinite families) actually occur.
"""

import random
from dataclasses import dataclass
from fractions import Fraction

from . import catalog
from .classify import classify, conjugated_generators, same_span
from .forms import COMPONENT_NAMES, Mat3, form_of
from .killing import build_system, killing_operator, solve, verify_killing
from .liealg import bracket, invariants
from .linalg import in_span, span_equal


@dataclass(frozen=True)
class SuiteResult:
    name: str
    trials: int
    failures: tuple

    @property
    def ok(self):
        return not self.failures

    def summary(self):
        state = "PASS" if self.ok else f"FAIL ({len(self.failures)})"
        return f"{self.name}: {state} [{self.trials} trials]"


def random_form(rng, max_terms=5, bound=3):
    """Sparse random integer form; occasionally a catalog instance."""
    roll = rng.random()
    if roll < 0.35:
        entry = catalog.ENTRIES[rng.randrange(len(catalog.ENTRIES))]
        branch = entry.branches()[0]
        return entry.build(branch.params)
    names = list(COMPONENT_NAMES)
    rng.shuffle(names)
    k = rng.randint(1, max_terms)
    comps = {}
    for name in names[:k]:
        v = 0
        while v == 0:
            v = rng.randint(-bound, bound)
        comps[name] = v
    return form_of(**comps)


def random_invertible(rng, bound=2):
    while True:
        T = Mat3([[rng.randint(-bound, bound) for _ in range(3)] for _ in range(3)])
        if T.det() != 0:
            return T


def random_matrix(rng, bound=3):
    return Mat3([[rng.randint(-bound, bound) for _ in range(3)] for _ in range(3)])


def random_vec(rng, bound=3):
    return tuple(Fraction(rng.randint(-bound, bound)) for _ in range(3))


def _run(name, trials, seed, body):
    rng = random.Random(seed)
    failures = []
    for i in range(trials):
        problem = body(rng)
        if problem is not None:
            failures.append(f"trial {i}: {problem}")
            if len(failures) >= 5:
                break
    return SuiteResult(name, trials, tuple(failures))


def suite_evaluate_pullback(trials=200, seed=101):
    """evaluate(pullback(G,T), v) == evaluate(G, T v), plus homogeneity."""
    def body(rng):
        g = random_form(rng)
        T = random_invertible(rng)
        v = random_vec(rng)
        if g.pullback(T).evaluate(v) != g.evaluate(T.apply(v)):
            return f"pullback/evaluate mismatch for {g.describe()}"
        lam = Fraction(rng.randint(-4, 4), rng.randint(1, 4))
        scaled = tuple(lam * c for c in v)
        if g.evaluate(scaled) != lam ** 3 * g.evaluate(v):
            return f"homogeneity failure for {g.describe()}"
        return None
    return _run("evaluate/pullback compatibility", trials, seed, body)


def suite_radical_covariance(trials=200, seed=102):
    """radical(pullback(G,T)) equals T^-1 radical(G) as a subspace."""
    def body(rng):
        g = random_form(rng)
        T = random_invertible(rng)
        direct = [list(v) for v in g.pullback(T).radical()]
        inv = T.inverse()
        mapped = [list(inv.apply(v)) for v in g.radical()]
        if not span_equal(direct, mapped):
            return f"radical covariance failure for {g.describe()}"
        return None
    return _run("radical covariance", trials, seed, body)


def suite_kernel_covariance(trials=200, seed=103):
    """Conjugated kernel spans the pulled-back kernel; class label invariant."""
    def body(rng):
        g = random_form(rng)
        T = random_invertible(rng)
        rep = classify(g)
        rep2 = classify(g.pullback(T))
        if rep.label != rep2.label:
            return (f"class label changed under pullback: {rep.label} -> "
                    f"{rep2.label} for {g.describe()}")
        moved = conjugated_generators(rep.algebra, T)
        if not same_span(moved, list(rep2.algebra.generators)):
            return f"kernel span not covariant for {g.describe()}"
        return None
    return _run("kernel and class covariance", trials, seed, body)


def suite_lie_closure(trials=200, seed=104):
    """Brackets of kernel elements stay in the kernel span; every generator
    actually satisfies the Killing equation."""
    def body(rng):
        g = random_form(rng)
        algebra = solve(g)
        vectors = [m.flatten() for m in algebra.generators]
        for A in algebra.generators:
            if not verify_killing(g, A):
                return f"kernel element fails the Killing check for {g.describe()}"
        for i in range(len(algebra.generators)):
            for j in range(i + 1, len(algebra.generators)):
                br = bracket(algebra.generators[i], algebra.generators[j])
                if not in_span(vectors, br.flatten()):
                    return f"bracket escapes the kernel for {g.describe()}"
        return None
    return _run("Lie closure of kernels", trials, seed, body)


def suite_cayley_hamilton(trials=200, seed=105):
    """A^3 - I1 A^2 + ((I1^2-I2)/2) A - det(A) Id = 0, exactly."""
    def body(rng):
        A = random_matrix(rng)
        s = invariants(A)
        c2 = (s.I[0] ** 2 - s.I[1]) / 2
        lhs = (A @ A @ A) - (A @ A).scale(s.I[0]) + A.scale(c2) \
            - Mat3.identity().scale(s.delta)
        if not lhs.is_zero():
            return f"Cayley-Hamilton fails for {A.rows}"
        # Newton recursion pins I4..I6 from I1..I3
        for n in (3, 4, 5):
            expect = s.I[0] * s.I[n - 1] - c2 * s.I[n - 2] + s.delta * s.I[n - 3]
            if s.I[n] != expect:
                return f"trace recursion fails for {A.rows}"
        if s.delta != (s.I[0] ** 3 - 3 * s.I[0] * s.I[1] + 2 * s.I[2]) / 6:
            return f"determinant identity fails for {A.rows}"
        return None
    return _run("Cayley-Hamilton and trace recursion", trials, seed, body)


def suite_conjugation_invariance(trials=200, seed=106):
    """Invariant series is unchanged under conjugation by invertible T."""
    def body(rng):
        A = random_matrix(rng)
        T = random_invertible(rng)
        conj = T.inverse() @ A @ T
        if invariants(A) != invariants(conj):
            return f"conjugation changed invariants of {A.rows}"
        return None
    return _run("conjugation invariance of invariants", trials, seed, body)


def suite_bracket_identities(trials=200, seed=107):
    """Bilinearity, antisymmetry and the Jacobi identity of the bracket."""
    def body(rng):
        A, B, C = (random_matrix(rng) for _ in range(3))
        if not (bracket(A, A).is_zero()):
            return f"bracket(A,A) != 0 for {A.rows}"
        if bracket(A, B) + bracket(B, A) != Mat3.zero():
            return "antisymmetry fails"
        jac = bracket(A, bracket(B, C)) + bracket(B, bracket(C, A)) \
            + bracket(C, bracket(A, B))
        if not jac.is_zero():
            return "Jacobi identity fails"
        lam = Fraction(rng.randint(-3, 3))
        if bracket(A.scale(lam) + B, C) != bracket(A, C).scale(lam) + bracket(B, C):
            return "bilinearity fails"
        return None
    return _run("bracket identities", trials, seed, body)


def suite_killing_linearity(trials=200, seed=108):
    """K is bilinear; the assembled system reproduces it; radical rank-one
    fields are always symmetries."""
    def body(rng):
        g1, g2 = random_form(rng), random_form(rng)
        A = random_matrix(rng)
        lhs = killing_operator(g1 + g2, A)
        rhs = killing_operator(g1, A) + killing_operator(g2, A)
        if lhs != rhs:
            return "K not linear in the form"
        system = build_system(g1)
        if system.apply(A) != killing_operator(g1, A):
            return f"assembled system disagrees with K for {g1.describe()}"
        for v in g1.radical():
            w = random_vec(rng)
            rank_one = Mat3([[v[i] * w[j] for j in range(3)] for i in range(3)])
            if not verify_killing(g1, rank_one):
                return f"radical rank-one field fails for {g1.describe()}"
        return None
    return _run("Killing operator linearity and radical fields", trials, seed, body)


ALL_SUITES = (
    suite_evaluate_pullback,
    suite_radical_covariance,
    suite_kernel_covariance,
    suite_lie_closure,
    suite_cayley_hamilton,
    suite_conjugation_invariance,
    suite_bracket_identities,
    suite_killing_linearity,
)


def run_all(trials=200):
    return [suite(trials=trials) for suite in ALL_SUITES]
