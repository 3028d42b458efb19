from fractions import Fraction
from itertools import combinations

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from helpers import P
from hrpoly.errors import DomainError
from hrpoly.logconcave import (
    Cover,
    brylawski_chain,
    covers_of,
    derived_difference,
    distinct_real_roots,
    dominance_leq,
    dominates,
    is_polya_frequency,
    logcon_classify,
    monomial_positive,
    product_inequality,
    schur_log_concave,
    schur_logconcavity,
    toeplitz_determinant,
    toeplitz_minor,
)
from hrpoly.polyring import derived
from hrpoly.symfun import Partition, elementary, partitions, product_of_schurs, schur
from hrpoly.verification import dually_lorentzian_fixtures

sequences = st.lists(st.integers(0, 6).map(Fraction), min_size=1, max_size=7)


# Polya frequency sequences


@pytest.mark.parametrize("seq, verdict", [((1, 5, 13), False), ((1, 2, 1), True), ((1, 0, 1), False),
                                          ((1, 4, 6, 4, 1), True), ((0, 1, 3, 3, 1), True), ((1, 1, 1, 1), False),
                                          ((5,), True), ((0, 0, 2, 0), True)])
def test_pf_examples(seq, verdict):
    rep = is_polya_frequency(seq)
    assert rep.verdict is verdict
    assert rep.real_rooted is verdict


def test_pf_witnesses():
    rep = is_polya_frequency((1, 5, 13))
    assert rep.witness.rows == (0, 1, 2) and rep.witness.cols == (1, 2, 3)
    assert rep.witness.value == -5
    assert toeplitz_determinant((1, 5, 13), 3, shift=1) == -5
    rep = is_polya_frequency((1, 0, 1))
    assert rep.witness.value == -1
    assert len(rep.witness.rows) == 2


def test_leading_block_of_thirteen_sequence_is_nonnegative():
    a = (1, 5, 13)
    for size in range(1, 4):
        for rows in combinations(range(3), size):
            for cols in combinations(range(3), size):
                assert toeplitz_minor(a, rows, cols) >= 0


def test_pf_rejects_negative_entries():
    with pytest.raises(DomainError):
        is_polya_frequency((1, -1))


def sympy_real_rooted(seq):
    coeffs = list(seq)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    while coeffs and coeffs[0] == 0:
        coeffs.pop(0)
    if len(coeffs) <= 1:
        return True
    y = sympy.Symbol("y")
    poly = sympy.Poly(sum(sympy.Rational(c.numerator, c.denominator) * y**i for i, c in enumerate(coeffs)), y)
    return len(sympy.real_roots(poly)) == poly.degree()


def sympy_minor(seq, rows, cols):
    def entry(i, j):
        k = j - i
        return sympy.Rational(seq[k].numerator, seq[k].denominator) if 0 <= k < len(seq) else 0

    return sympy.Matrix(len(rows), len(cols), lambda a, b: entry(rows[a], cols[b])).det()


@given(sequences)
def test_pf_matches_sympy_real_roots(seq):
    rep = is_polya_frequency(seq)
    assert rep.verdict == sympy_real_rooted(seq)
    if rep.witness is not None:
        w = rep.witness
        assert w.value < 0
        assert sympy_minor(seq, w.rows, w.cols) == w.value


@settings(max_examples=60)
@given(st.lists(st.integers(0, 4).map(Fraction), min_size=1, max_size=4))
def test_pf_sequences_have_nonnegative_minors(seq):
    if not is_polya_frequency(seq).verdict:
        return
    window = range(6)
    for size in (1, 2, 3):
        for rows in combinations(window, size):
            for cols in combinations(window, size):
                assert sympy_minor(seq, rows, cols) >= 0


@given(st.lists(st.integers(-3, 3), min_size=1, max_size=4))
def test_products_of_linear_factors_are_pf(roots):
    coeffs = [Fraction(1)]
    for r in roots:
        c = abs(r) + 1
        coeffs = [a + (c * coeffs[i - 1] if i else 0) for i, a in enumerate(coeffs + [Fraction(0)])]
    assert is_polya_frequency(coeffs).verdict


def test_distinct_real_roots():
    assert distinct_real_roots([1, 2, 1]) == 1
    assert distinct_real_roots([-1, 0, 1]) == 2
    assert distinct_real_roots([1, 0, 1]) == 0


# log-concavity


def test_logcon_examples():
    c = logcon_classify((1, 5, 13))
    assert c.log_concave and not c.internal_zeros and c.strong
    c = logcon_classify((1, 0, 1))
    assert not c.log_concave and c.internal_zeros and not c.m_concave
    c = logcon_classify((6, 3))
    assert c.log_concave and c.strong and c.m_concave
    c = logcon_classify((1, 2, 4))
    assert c.log_concave and not c.strong


@settings(max_examples=1000)
@given(sequences)
def test_log_concave_without_gaps_is_m_concave(seq):
    a = list(seq)
    n = len(a) - 1
    lc = all(a[i] ** 2 >= a[i - 1] * a[i + 1] for i in range(1, n))
    support = [i for i, x in enumerate(a) if x]
    gaps = bool(support) and any(a[i] == 0 for i in range(support[0], support[-1] + 1))
    pairs = all(a[i] * a[j] >= a[i - 1] * a[j + 1] for i in range(1, n) for j in range(i, n))
    assert (lc and not gaps) == pairs
    flags = logcon_classify(seq)
    assert (flags.log_concave, flags.internal_zeros, flags.m_concave) == (lc, gaps, pairs)


# dominance


def test_dominance_examples():
    assert dominates((2,), (1, 1))
    assert not dominates((1, 1), (2,))
    assert dominates((3, 1), (2, 2))
    assert dominance_leq((2, 2), (3, 1))
    with pytest.raises(DomainError):
        dominates((2,), (1,))


def brute_force_covers(nu):
    nu = Partition(nu)
    above = [p for p in partitions(nu.weight) if p != nu and dominates(p, nu)]
    return {p for p in above if not any(q != p and dominates(p, q) and q in above for q in above)}


@pytest.mark.parametrize("size", range(1, 8))
def test_covers_match_brute_force(size):
    for nu in partitions(size):
        assert {c.result for c in covers_of(nu)} == brute_force_covers(nu)


def test_chain_examples():
    assert brylawski_chain((2,), (1, 1)) == [Cover(0, 1, Partition((2,)))]
    assert brylawski_chain((2, 1), (2, 1)) == []
    chain = brylawski_chain((3,), (1, 1, 1))
    assert len(chain) == 2
    assert chain[-1].result == Partition((3,))
    with pytest.raises(DomainError):
        brylawski_chain((2, 2), (3, 1))


@pytest.mark.parametrize("size", range(1, 7))
def test_chains_are_made_of_covers(size):
    for mu in partitions(size):
        for nu in partitions(size):
            if not dominates(mu, nu):
                continue
            current = Partition(nu)
            for step in brylawski_chain(mu, nu):
                assert step.result in brute_force_covers(current)
                current = step.result
            assert current == Partition(mu)


# Schur log-concavity and product inequalities


def test_schur_logconcavity_examples():
    rep = schur_logconcavity(schur((1,), 2), 1, 1)
    assert rep.verdict
    assert rep.expansion.single() == {Partition(()): 4}
    rep = schur_logconcavity(schur((1, 1), 2), 1, 1)
    assert rep.verdict
    assert rep.expansion.single() == {Partition((2,)): 9, Partition((1, 1)): 6}
    assert schur_logconcavity(schur((2, 1), 3), 1, 2).verdict
    with pytest.raises(DomainError):
        schur_logconcavity(schur((1,), 2), 0, 1)


@pytest.mark.parametrize("lams, es", [(((1,),), (2,)), (((1, 1),), (3,)), (((2,),), (2,)), (((2, 1),), (2,)),
                                      (((1,), (1,)), (1, 2)), (((1, 1), (1,)), (2, 2)), (((3,),), (3,))])
def test_derived_products_of_schurs_are_schur_log_concave(lams, es):
    f = product_of_schurs(lams, es)
    k = f.degree
    for n in range(1, k + 1):
        for m in range(1, n + 1):
            assert schur_logconcavity(f, m, n).verdict, (m, n)


def test_product_inequality_examples():
    f = schur((1,), 2)
    rep = product_inequality(f, (2,), (1, 1))
    assert rep.verdict
    assert rep.expansion.single() == {Partition(()): 4}
    assert len(product_inequality(f, (1, 1), (1, 1)).expansion) == 0
    assert product_inequality(elementary(2, 2), (2,), (1, 1)).verdict
    with pytest.raises(DomainError):
        product_inequality(f, (1, 1), (2,))


@pytest.mark.parametrize("size", [2, 3, 4])
def test_product_inequality_along_dominance(size):
    f = schur((2, 1), 2)
    for mu in partitions(size, max_part=f.degree):
        for nu in partitions(size, max_part=f.degree):
            if dominates(mu, nu):
                assert product_inequality(f, mu, nu).verdict, (str(mu), str(nu))


def test_monomial_positive_examples():
    assert monomial_positive(P("x^3-x^2*y+3*x*y^2+y^3")) == (False, ((2, 1), -1))
    assert monomial_positive(P("x^4+2*x^2*y^2+4*x*y^3+y^4")) == (True, None)
    assert monomial_positive(P("0")) == (True, None)


@pytest.mark.parametrize("f", dually_lorentzian_fixtures(12), ids=str)
def test_dually_lorentzian_differences_are_monomial_positive(f):
    for n in range(1, f.degree + 1):
        for m in range(1, n + 1):
            assert monomial_positive(derived_difference(f, m, n))[0], (m, n)


# transport of Schur log-concavity


def derived_sequence(f):
    return [derived(f, i) for i in range(f.degree + 1)]


FIXTURES = [schur((1,), 2), schur((1, 1), 2), schur((2,), 2), elementary(2, 3)]


@pytest.mark.parametrize("f", FIXTURES, ids=str)
def test_schur_log_concavity_survives_reversal(f):
    seq = derived_sequence(f)
    assert schur_log_concave(seq)
    assert schur_log_concave(seq[::-1])


@pytest.mark.parametrize("f, g", [(FIXTURES[0], FIXTURES[1]), (FIXTURES[1], FIXTURES[2]), (FIXTURES[0], FIXTURES[2])])
def test_schur_log_concavity_survives_termwise_products(f, g):
    a, b = derived_sequence(f), derived_sequence(g)
    n = min(len(a), len(b))
    assert schur_log_concave(a[:n]) and schur_log_concave(b[:n])
    assert schur_log_concave([x * y for x, y in zip(a[:n], b[:n])])
