import itertools
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from helpers import P, from_sympy, to_sympy
from hrpoly.errors import DomainError, NotSymmetricError
from hrpoly.polyring import Polynomial, default_names, derived
from hrpoly.symfun import (
    Partition,
    PermutationWord,
    SchurExpansion,
    derived_schur,
    elementary,
    grassmannian_word,
    inversion_length,
    monomial_symmetric,
    one_box_expansion,
    partitions,
    product_of_schurs,
    schubert,
    schur,
    schur_expand,
    schur_positive,
    symmetry_witness,
)


def small_partitions(max_weight, max_part=None):
    return [lam for w in range(max_weight + 1) for lam in partitions(w, max_part=max_part)]


def classical_schur(lam, e):
    """Bialternant formula a_{lam+delta} / a_delta (the row convention)."""
    xs = sympy.symbols(default_names(e))
    parts = list(lam) + [0] * (e - len(lam))
    num = sympy.Matrix(e, e, lambda i, j: xs[j] ** (parts[i] + e - 1 - i))
    den = sympy.Matrix(e, e, lambda i, j: xs[j] ** (e - 1 - i))
    return sympy.expand(sympy.cancel(num.det() / den.det()))


def determinant_schur(lam, e):
    """det(c_{lam_i + j - i}) built from sympy's own elementary polynomials."""
    xs = sympy.symbols(default_names(e))
    n = max(len(lam), 1)
    parts = list(lam) + [0] * (n - len(lam))

    def c(k):
        if k < 0 or k > e:
            return sympy.Integer(0)
        return sum((sympy.Mul(*s) for s in itertools.combinations(xs, k)), sympy.Integer(0)) if k else sympy.Integer(1)

    return sympy.expand(sympy.Matrix(n, n, lambda i, j: c(parts[i] + j - i)).det())


# partitions


def test_partition_canonicalization_and_syntax():
    assert Partition((2, 1, 0, 0)) == Partition((2, 1))
    assert Partition.parse("2,1,1") == Partition((2, 1, 1))
    assert Partition.parse("") == Partition(())
    assert Partition((3, 1)).conjugate() == Partition((2, 1, 1))
    with pytest.raises(DomainError):
        Partition((1, 2))
    with pytest.raises(DomainError):
        Partition((2, -1))


def test_partition_enumeration_counts():
    assert [sum(1 for _ in partitions(n)) for n in range(8)] == [1, 1, 2, 3, 5, 7, 11, 15]


# elementary and Schur polynomials


def test_elementary_examples():
    assert elementary(1, 2) == P("x1+x2")
    assert elementary(3, 2).is_zero()
    assert elementary(2, 3) == P("x1*x2+x1*x3+x2*x3")
    assert elementary(0, 2) == Polynomial.constant(1, ("x1", "x2"))


def test_schur_examples():
    assert schur((1,), 2) == P("x1+x2")
    assert schur((1, 1), 2) == P("x1^2+x1*x2+x2^2")
    assert schur((1, 1), 2) == elementary(1, 2) ** 2 - elementary(2, 2)
    assert schur((2,), 1).is_zero()


@pytest.mark.parametrize("lam, e", [(lam, e) for e in range(1, 4) for lam in small_partitions(4)])
def test_schur_matches_determinant_and_conjugate_bialternant(lam, e):
    ours = schur(lam, e)
    names = default_names(e)
    assert ours == from_sympy(determinant_schur(tuple(lam), e), names)
    conj = lam.conjugate()
    expected = classical_schur(tuple(conj), e) if len(conj) <= e else 0
    assert ours == from_sympy(expected, names)


@given(st.sampled_from(small_partitions(6)), st.integers(1, 4))
def test_schur_symmetric_homogeneous(lam, e):
    s = schur(lam, e)
    assert symmetry_witness(s) is None
    if lam.first > e:
        assert s.is_zero()
    else:
        assert s.is_homogeneous() and s.degree == lam.weight


# derived Schur polynomials


def test_derived_schur_examples():
    assert derived_schur((1, 1), 2, 1) == P("3*x1+3*x2")
    assert one_box_expansion((1, 1), 2) == {(1,): 3}
    assert derived_schur((2, 1), 3, 0) == schur((2, 1), 3)
    assert derived_schur((1,), 2, 1) == Polynomial.constant(2, ("x1", "x2"))


@pytest.mark.parametrize("lam, e", [(lam, e) for lam in small_partitions(6) for e in range(max(lam.first, 1), 6) if lam.weight])
def test_one_box_formula(lam, e):
    assert derived_schur(lam, e, 1) == one_box_expansion(lam, e).to_polynomial()


@pytest.mark.parametrize("lam, e", [(lam, e) for lam in small_partitions(5) for e in range(max(lam.first, 1), 4)])
def test_derived_schur_positive_and_nonzero(lam, e):
    for i in range(lam.weight + 1):
        d = derived_schur(lam, e, i)
        ok, expansion = schur_positive(d)
        assert ok and not d.is_zero(), (lam, e, i, expansion)


# expansion


def test_schur_expand_examples():
    s1 = schur((1,), 2)
    assert schur_expand(s1 * s1) == {(2,): 1, (1, 1): 1}
    assert schur_expand(schur((2, 1), 3)) == {(2, 1): 1}
    assert schur_expand(P("6*x1^2+15*x1*x2+6*x2^2")) == {(1, 1): 6, (2,): 9}


def test_schur_expand_linear_solve_oracle():
    f = P("6*x1^2+15*x1*x2+6*x2^2")
    a, b = sympy.symbols("a b")
    s11, gens = to_sympy(schur((1, 1), 2))
    s2, _ = to_sympy(schur((2,), 2))
    fs, _ = to_sympy(f)
    eqs = sympy.Poly(fs - a * s11 - b * s2, *gens).coeffs()
    sol = sympy.solve(eqs, [a, b])
    assert (sol[a], sol[b]) == (6, 9)


def dense_solve_oracle(f, e):
    """Coefficients in the Schur basis by solving against monomial symmetric functions."""
    k = f.degree
    basis = [lam for lam in partitions(k, max_part=e)]
    rows = [nu for nu in partitions(k, max_length=e)]
    names = f.variables
    A = sympy.Matrix(len(rows), len(basis), lambda i, j: 0)
    for j, lam in enumerate(basis):
        s = schur(lam, e, names)
        for i, nu in enumerate(rows):
            c = s.coefficient(nu.padded(e))
            A[i, j] = sympy.Rational(c.numerator, c.denominator)
    rhs = sympy.Matrix([sympy.Rational(f.coefficient(nu.padded(e)).numerator, f.coefficient(nu.padded(e)).denominator) for nu in rows])
    sol = A.solve(rhs)
    return {lam: Fraction(int(sol[j].p), int(sol[j].q)) for j, lam in enumerate(basis) if sol[j] != 0}


@pytest.mark.parametrize("lam, mu, e", [((2, 1), (1,), 3), ((1, 1), (2,), 2), ((2,), (2,), 3), ((1, 1), (1, 1), 3), ((3,), (1,), 3)])
def test_products_expand_like_the_dense_solve(lam, mu, e):
    f = schur(lam, e) * schur(mu, e)
    assert schur_expand(f).single() == dense_solve_oracle(f, e)


@given(st.data())
def test_round_trip_random_expansions(data):
    e = data.draw(st.integers(1, 4))
    lams = data.draw(st.lists(st.sampled_from(small_partitions(6, max_part=e)), min_size=1, max_size=4))
    coeffs = {(lam,): Fraction(data.draw(st.integers(-5, 5)), data.draw(st.integers(1, 3))) for lam in lams}
    exp = SchurExpansion(coeffs, (e,))
    assert schur_expand(exp.to_polynomial()) == exp


def test_two_block_round_trip():
    exp = SchurExpansion({((1,), (1, 1)): 2, ((2,), ()): Fraction(-1, 2)}, (2, 2))
    assert schur_expand(exp.to_polynomial()) == exp


@pytest.mark.parametrize("lam, mu", [(l, m) for l in small_partitions(3) for m in small_partitions(3) if l.weight + m.weight <= 6])
def test_products_are_schur_positive(lam, mu):
    for e in range(1, 4):
        ok, expansion = schur_positive(schur(lam, e) * schur(mu, e))
        assert ok, expansion


def test_schur_positive_examples():
    assert schur_positive(schur((1, 1), 2) + schur((2,), 2).scale(2))[0]
    assert not schur_positive(schur((2,), 2) - schur((1, 1), 2))[0]
    f = schur((1, 1), 2)
    ok, exp = schur_positive(derived(f, 1) ** 2 - derived(f, 0) * derived(f, 2))
    assert ok and exp == {(1, 1): 6, (2,): 9}


def test_non_symmetric_input_names_transposition():
    with pytest.raises(NotSymmetricError) as info:
        schur_expand(P("x1^2+x2", ("x1", "x2")))
    assert info.value.transposition == (0, 1)
    # a block structure only requires symmetry inside blocks
    f = P("x1^2+x2", ("x1", "x2"), (1, 1))
    # with one variable s_(1,1) = x1^2 while s_(2) vanishes
    assert schur_expand(f) == {((1, 1), ()): 1, ((), (1,)): 1}


# Schubert polynomials


def test_schubert_examples():
    assert schubert(PermutationWord((1,))) == Polynomial.constant(1, ("x1",))
    assert schubert(PermutationWord.parse("1 2 3")) == Polynomial.constant(1, default_names(3))
    assert schubert(PermutationWord((2, 1))) == P("x1", ("x1", "x2"))
    assert schubert(PermutationWord.parse("3 1 2")) == P("x1^2", default_names(3))
    assert schubert(PermutationWord.parse("1 3 2")) == P("x1+x2", default_names(3))


def test_inversion_length_examples():
    assert inversion_length(PermutationWord((1, 2, 3))) == 0
    assert inversion_length(PermutationWord((2, 1))) == 1
    assert inversion_length(PermutationWord((3, 2, 1))) == 3


def test_word_validation():
    with pytest.raises(DomainError):
        PermutationWord((2, 2))
    with pytest.raises(DomainError):
        PermutationWord.parse("3 1 2", "0<2<3")
    assert PermutationWord.parse("1 3 2", "0<2<3").profile == (0, 2, 3)


def divided_difference_oracle(expr, xs, i):
    swapped = expr.subs({xs[i]: xs[i + 1], xs[i + 1]: xs[i]}, simultaneous=True)
    return sympy.expand(sympy.cancel((expr - swapped) / (xs[i] - xs[i + 1])))


@pytest.mark.parametrize("perm", list(itertools.permutations(range(1, 5))))
def test_schubert_degree_and_sympy_divided_differences(perm):
    w = PermutationWord(perm)
    ours = schubert(w, 4)
    assert ours.is_homogeneous() and ours.degree == inversion_length(w)
    xs = sympy.symbols(default_names(4))
    # descend from the longest element along ascents, computed on the sympy side
    expr = xs[0] ** 3 * xs[1] ** 2 * xs[2]
    current = (4, 3, 2, 1)
    word = []
    target = list(perm)
    while tuple(target) != current:
        i = next(k for k in range(3) if target[k] < target[k + 1])
        word.append(i)
        target[i], target[i + 1] = target[i + 1], target[i]
    for i in reversed(word):
        expr = divided_difference_oracle(expr, xs, i)
    assert ours == from_sympy(expr, default_names(4))


@pytest.mark.parametrize("lam, e", [(lam, e) for lam in small_partitions(4) for e in range(max(lam.first, 1), 4)])
def test_grassmannian_schubert_is_schur(lam, e):
    w = grassmannian_word(lam, e)
    for lo, hi in zip(w.profile, w.profile[1:]):
        assert list(w.word[lo:hi]) == sorted(w.word[lo:hi])
    assert schubert(w, e) == schur(lam, e)


@given(st.permutations(range(1, 6)))
def test_schubert_respects_profile_symmetry(perm):
    w = PermutationWord(perm)
    s = schubert(w, 5)
    for j in range(4):
        if perm[j] < perm[j + 1]:
            swapped = Polynomial({e[:j] + (e[j + 1], e[j]) + e[j + 2:]: c for e, c in s.terms.items()}, s.variables)
            assert swapped == s


def test_grassmannian_word_needs_fitting_partition():
    with pytest.raises(DomainError):
        grassmannian_word((3,), 2)


def test_monomial_symmetric():
    assert monomial_symmetric((2, 1), 2) == P("x1^2*x2+x1*x2^2")
    assert product_of_schurs([(1,), (1,)], [1, 1]) == P("x1*x2", ("x1", "x2"), (1, 1))
