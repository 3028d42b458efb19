"""Shared strategies and the sympy bridge used as an independent oracle."""

from fractions import Fraction

import sympy
from hypothesis import strategies as st

from hrpoly.polyring import Polynomial, default_names, parse_polynomial

P = parse_polynomial


def to_sympy(f: Polynomial):
    """Independent representation used as an oracle."""
    gens = sympy.symbols(f.variables) if f.variables else ()
    expr = sympy.Integer(0)
    for exp, c in f.terms.items():
        term = sympy.Rational(c.numerator, c.denominator)
        for g, a in zip(gens, exp):
            term *= g**a
        expr += term
    return sympy.expand(expr), gens


def from_sympy(expr, variables, blocks=None) -> Polynomial:
    gens = sympy.symbols(variables)
    poly = sympy.Poly(sympy.expand(expr), *gens)
    terms = {tuple(m): Fraction(int(c.p), int(c.q)) for m, c in zip(poly.monoms(), poly.coeffs())}
    return Polynomial(terms, variables, blocks)


rationals = st.builds(Fraction, st.integers(-9, 9), st.integers(1, 4))


@st.composite
def polynomials(draw, nvars=None, max_degree=4, max_terms=5, homogeneous=False, nonnegative=False, names=None):
    n = draw(st.integers(1, 3)) if nvars is None else nvars
    variables = tuple(names) if names else default_names(n)
    deg = draw(st.integers(0, max_degree))
    terms = {}
    for _ in range(draw(st.integers(0, max_terms))):
        if homogeneous:
            cuts = sorted(draw(st.lists(st.integers(0, deg), min_size=n - 1, max_size=n - 1)))
            bounds = [0] + cuts + [deg]
            exp = tuple(bounds[i + 1] - bounds[i] for i in range(n))
        else:
            exp = tuple(draw(st.lists(st.integers(0, max_degree), min_size=n, max_size=n)))
            if sum(exp) > max_degree:
                continue
        c = draw(rationals)
        if nonnegative:
            c = abs(c)
        terms[exp] = c
    return Polynomial(terms, variables)
