from fractions import Fraction

import pytest
import sympy
from hypothesis import assume, given, settings, strategies as st

from helpers import P, polynomials
from hrpoly import linalg
from hrpoly.errors import DomainError, StructureError
from hrpoly.lorentz import (
    apply_operator,
    hessian_of_derivative,
    is_cone_lorentzian,
    is_dually_lorentzian,
    is_lorentzian,
    is_m_convex,
    is_strictly_lorentzian,
    recheck_witness,
    signature_sym,
)
from hrpoly.polyring import Polynomial, default_names, directional_derive, monomials_of_degree
from hrpoly.symfun import partitions, schur


def sympy_inertia(M):
    """Inertia from the characteristic polynomial.

    The roots are real, so Descartes' rule counts the positive ones exactly.
    """
    n = len(M)
    lam = sympy.Symbol("lam")
    A = sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in row] for row in M])
    coeffs = sympy.Poly(A.charpoly(lam).as_expr(), lam).all_coeffs()
    zero = 0
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
        zero += 1

    def variations(cs):
        signs = [c > 0 for c in cs if c != 0]
        return sum(1 for a, b in zip(signs, signs[1:]) if a != b)

    plus = variations(coeffs)
    flipped = [c * (-1) ** (len(coeffs) - 1 - k) for k, c in enumerate(coeffs)]
    minus = variations(flipped)
    assert plus + minus + zero == n
    return plus, zero, minus


@st.composite
def symmetric_matrices(draw, max_n=4):
    n = draw(st.integers(1, max_n))
    M = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            M[i][j] = M[j][i] = Fraction(draw(st.integers(-3, 3)))
    return M


# signatures


@pytest.mark.parametrize(
    "M, expected",
    [([[2, 0], [0, 2]], (2, 0, 0)), ([[1, 1], [1, 1]], (1, 1, 0)), ([[9, 3], [3, 1]], (1, 1, 0)),
     ([[0, 1], [1, 0]], (1, 0, 1)), ([[0, 0], [0, 0]], (0, 2, 0))],
)
def test_signature_examples(M, expected):
    assert signature_sym(M) == expected


def test_signature_rejects_nonsymmetric():
    with pytest.raises(DomainError):
        signature_sym([[1, 2], [3, 4]])


@given(symmetric_matrices())
def test_signature_matches_characteristic_polynomial(M):
    assert signature_sym(M) == sympy_inertia(M)


@given(symmetric_matrices(), st.lists(st.integers(-2, 2), min_size=16, max_size=16))
def test_signature_is_congruence_invariant(M, entries):
    n = len(M)
    S = [[Fraction(entries[i * 4 + j]) for j in range(n)] for i in range(n)]
    assume(linalg.det(S) != 0)
    congruent = linalg.matmul(linalg.transpose(S), linalg.matmul(M, S))
    assert signature_sym(congruent) == signature_sym(M)


# M-convexity


def test_m_convex_examples():
    assert is_m_convex({(2, 0), (1, 1), (0, 2)}) == (True, None)
    assert is_m_convex({(2, 0), (0, 2)}) == (False, ((2, 0), (0, 2), 0))
    assert is_m_convex(P("x^3+2*x^2*y+4*x*y^2+8*y^3").terms)[0]
    with pytest.raises(DomainError):
        is_m_convex({(1, 0), (2, 0)})


def brute_force_m_convex(support):
    support = set(support)
    for a in support:
        for b in support:
            for i in range(len(a)):
                if a[i] > b[i]:
                    ok = False
                    for j in range(len(a)):
                        if a[j] < b[j]:
                            moved = list(a)
                            moved[i] -= 1
                            moved[j] += 1
                            ok = ok or tuple(moved) in support
                    if not ok:
                        return False
    return True


@given(st.integers(1, 3), st.integers(0, 3), st.data())
def test_m_convexity_matches_brute_force(n, k, data):
    universe = list(monomials_of_degree(n, k))
    support = data.draw(st.sets(st.sampled_from(universe), min_size=1))
    ok, witness = is_m_convex(support)
    assert ok == brute_force_m_convex(support)
    assert (witness is None) == ok


# Lorentzian verdicts


@pytest.mark.parametrize(
    "text, verdict", [("x*y", True), ("x^2+y^2", False), ("1/2*x^2+x*y+1/2*y^2", True), ("0", True),
                      ("x+2*y", True), ("x-y", False), ("7", True), ("x^2+y", False)],
)
def test_lorentzian_examples(text, verdict):
    f = P(text, ("x", "y"))
    rep = is_lorentzian(f)
    assert rep.verdict is verdict
    if not verdict:
        assert rep.witness is not None
        assert recheck_witness(f, rep.witness)


def test_sum_of_squares_fails_exchange_first():
    assert is_lorentzian(P("x^2+y^2")).witness.kind == "m_convexity"


def test_hessian_witness():
    rep = is_lorentzian(P("x^2+x*y+y^2"))
    assert rep.witness.kind == "hessian"
    assert rep.witness.data["alpha"] == (0, 0)
    assert rep.witness.data["inertia"] == (2, 0, 0)


@pytest.mark.parametrize("abc, verdict", [((1, 2, 1), True), ((1, 1, 1), False), ((2, 3, 4), True), ((1, 1, 2), False)])
def test_strict_bivariate_quadratic_matches_strict_log_concavity(abc, verdict):
    a, b, c = abc
    f = Polynomial({(2, 0): Fraction(a, 2), (1, 1): Fraction(b), (0, 2): Fraction(c, 2)}, ("x", "y"))
    assert is_strictly_lorentzian(f).verdict is verdict
    assert verdict is (b * b > a * c)


def test_strict_lorentzian_rejects_missing_squares():
    f = P("x*y")
    rep = is_strictly_lorentzian(f)
    assert not rep.verdict
    assert recheck_witness(f, rep.witness, strict=True)


def test_cone_lorentzian_examples():
    assert is_cone_lorentzian(P("x*y"), [(1, 0), (0, 1)]).verdict
    assert is_cone_lorentzian(P("x^2-y^2"), [(1, 1)]).verdict
    assert is_cone_lorentzian(P("x^2", ("x", "y")), [(1, 0), (1, 1)]).verdict
    assert not is_cone_lorentzian(P("x^2-y^2"), [(1, 0), (0, 1)]).verdict
    with pytest.raises(StructureError):
        is_cone_lorentzian(P("x*y"), [(1, 0, 0)])
    with pytest.raises(DomainError):
        is_cone_lorentzian(P("x*y"), [(0, 0)])


@pytest.mark.parametrize(
    "text, verdict",
    [("x^3+2*x^2*y+4*x*y^2+8*y^3", True), ("14*x^4+64*x^3*y+312*x^2*y^2+448*x*y^3+512*y^4", False),
     ("x^2+3*x*y+9*y^2", True)],
)
def test_dually_lorentzian_examples(text, verdict):
    assert is_dually_lorentzian(P(text)).verdict is verdict


def test_dually_lorentzian_rejects_small_kappa():
    with pytest.raises(DomainError):
        is_dually_lorentzian(P("x^2+3*x*y+9*y^2"), (1, 2))


# properties


@st.composite
def lorentzian_polynomials(draw, n=2):
    """Products of nonnegative linear forms, optionally times a Lorentzian quadratic."""
    names = default_names(n)
    f = Polynomial.constant(1, names)
    for _ in range(draw(st.integers(0, 2))):
        coeffs = draw(st.lists(st.integers(0, 3), min_size=n, max_size=n))
        f = f * Polynomial({tuple(int(i == j) for j in range(n)): Fraction(c) for i, c in enumerate(coeffs)}, names)
    if draw(st.booleans()):
        a, c = draw(st.integers(0, 3)), draw(st.integers(0, 3))
        b = draw(st.integers(0, 4))
        assume(b * b >= 4 * a * c)
        exps = [(2, 0), (1, 1), (0, 2)] if n == 2 else [(2, 0, 0), (1, 1, 0), (0, 2, 0)]
        f = f * Polynomial(dict(zip(exps, (Fraction(a), Fraction(b), Fraction(c)))), names)
    return f


@given(lorentzian_polynomials(), lorentzian_polynomials())
def test_products_of_lorentzian_are_lorentzian(f, g):
    assert is_lorentzian(f).verdict
    assert is_lorentzian(g).verdict
    assert is_lorentzian(f * g).verdict


@settings(max_examples=60)
@given(polynomials(nvars=2, max_degree=3, homogeneous=True, nonnegative=True),
       polynomials(nvars=2, max_degree=3, homogeneous=True, nonnegative=True))
def test_products_of_random_bivariate_lorentzian(f, g):
    assume(is_lorentzian(f).verdict and is_lorentzian(g).verdict)
    assert is_lorentzian(f * g).verdict


@given(polynomials(nvars=3, max_degree=4, homogeneous=True, nonnegative=True),
       st.lists(st.lists(st.integers(0, 3), min_size=3, max_size=3), min_size=2, max_size=2))
def test_lorentzian_agrees_with_direction_sampling(f, directions):
    """Nonnegative directional derivatives of a Lorentzian form keep at most one positive eigenvalue."""
    assume(not f.is_zero() and f.degree >= 2)
    if not is_lorentzian(f).verdict:
        return
    q = f
    for v in directions[: f.degree - 2]:
        q = directional_derive(q, v)
    if q.degree < 2:
        return
    for alpha in monomials_of_degree(q.nvars, q.degree - 2):
        H = hessian_of_derivative(q, alpha)
        assert signature_sym(H)[0] <= 1


@given(polynomials(nvars=2, max_degree=4, homogeneous=True), st.booleans())
def test_witnesses_recheck(f, strict):
    check = is_strictly_lorentzian if strict else is_lorentzian
    rep = check(f)
    if rep.verdict:
        assert rep.witness is None
    else:
        assert rep.witness is not None
        assert recheck_witness(f, rep.witness, strict=strict)


def test_inhomogeneous_witness():
    f = P("x^2+y")
    rep = is_lorentzian(f)
    assert rep.witness.kind == "not_homogeneous"
    assert recheck_witness(f, rep.witness)


@given(polynomials(nvars=2, max_degree=3, nonnegative=True), st.integers(0, 2), st.integers(0, 2))
def test_dual_verdict_is_independent_of_kappa(f, extra_x, extra_y):
    assume(not f.is_zero())
    kappa = f.multidegree()
    base = is_dually_lorentzian(f, kappa).verdict
    assert is_dually_lorentzian(f, (kappa[0] + 1, kappa[1] + 1)).verdict == base
    assert is_dually_lorentzian(f, (kappa[0] + extra_x, kappa[1] + extra_y)).verdict == base


DUAL_SAMPLE = [P("x^3+2*x^2*y+4*x*y^2+8*y^3"), P("x^2+3*x*y+9*y^2"), P("x*y"), P("x+y")]
DIRECTIONS = [[(1, 0, 0), (0, 1, 1)], [(1, 1, 0), (0, 0, 1)], [(2, 1, 0), (0, 1, 3)]]
X3 = ("x1", "x2", "x3")
TARGETS = [P("x1*x2*x3"), P("x1*x3+x2*x3", X3), P("x1+x2+x3") * P("x1*x2+x1*x3+x2*x3"),
           P("x1+2*x2", X3) * P("x2+x3", X3) * P("x1+x3", X3)]


@pytest.mark.parametrize("p", DUAL_SAMPLE, ids=str)
@pytest.mark.parametrize("directions", DIRECTIONS)
def test_dually_lorentzian_operators_preserve_lorentzian(p, directions):
    assert is_dually_lorentzian(p).verdict
    for g in TARGETS:
        assert is_lorentzian(g).verdict
        assert is_lorentzian(apply_operator(p, directions, g)).verdict


@pytest.mark.parametrize("e", [1, 2, 3])
@pytest.mark.parametrize("size", [1, 2, 3, 4, 5])
def test_schur_polynomials_are_dually_lorentzian(size, e):
    for lam in partitions(size):
        f = schur(lam, e)
        if f.is_zero():
            continue
        assert is_dually_lorentzian(f).verdict, str(lam)
