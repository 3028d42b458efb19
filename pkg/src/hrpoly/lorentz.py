"""Certificates for Lorentzian, strictly Lorentzian and dually Lorentzian polynomials.

On the positive orthant a homogeneous polynomial of degree ``k >= 2`` is
Lorentzian exactly when its coefficients are nonnegative, its support is
M-convex and, for every multi-index ``a`` with ``|a| = k - 2``, the quadratic
form ``d^a f`` has at most one positive eigenvalue.  Every check is exact and
every negative verdict carries a witness that can be re-checked on its own.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from . import linalg
from .errors import DomainError, StructureError
from .polyring import (
    Polynomial,
    as_fraction,
    directional_derive,
    dual_transform,
    factorial_of,
    monomials_of_degree,
    partial,
    substitute_linear,
)


@dataclass(frozen=True)
class Witness:
    """Why a polynomial failed a check.

    ``kind`` is one of ``not_homogeneous``, ``negative_coefficient``,
    ``nonpositive_coefficient``, ``m_convexity`` or ``hessian``.  Indices in
    ``data`` are 0-based.  When several failures exist, the first one in
    descending lexicographic order of exponents is reported.
    """

    kind: str
    data: dict = field(default_factory=dict)

    def __str__(self):
        d = self.data
        if self.kind == "m_convexity":
            return f"exchange fails for alpha={d['alpha']}, beta={d['beta']}, i={d['i']}"
        if self.kind == "hessian":
            return f"Hessian of d^{d['alpha']} f has inertia {d['inertia']}"
        if self.kind in ("negative_coefficient", "nonpositive_coefficient"):
            return f"coefficient {d['coefficient']} at monomial {d['monomial']}"
        return f"{self.kind}: {d}"


@dataclass(frozen=True)
class LorentzReport:
    verdict: bool
    witness: Witness | None = None

    def __bool__(self):
        return self.verdict


def signature_sym(M: Sequence[Sequence]) -> tuple[int, int, int]:
    """Inertia ``(n_plus, n_zero, n_minus)`` of a rational symmetric matrix."""
    rows = [[as_fraction(x) for x in row] for row in M]
    n, m = linalg.shape(rows) if rows else (0, 0)
    if n != m:
        raise DomainError("signature needs a square matrix")
    for i in range(n):
        for j in range(i + 1, n):
            if rows[i][j] != rows[j][i]:
                raise DomainError(f"matrix is not symmetric at ({i}, {j})")
    return linalg.inertia(rows)


def is_m_convex(support: Iterable[Sequence[int]]) -> tuple[bool, tuple | None]:
    """Exchange property check.

    For all ``alpha, beta`` in J and ``i`` with ``alpha_i > beta_i`` there must
    be ``j`` with ``alpha_j < beta_j`` and ``alpha - e_i + e_j`` in J.  Returns
    ``(True, None)`` or ``(False, (alpha, beta, i))`` for the first failure
    with exponents scanned in descending lexicographic order (the order in
    which monomials are printed).
    """
    J = sorted({tuple(a) for a in support}, reverse=True)
    if len({sum(a) for a in J}) > 1:
        raise DomainError("support mixes total degrees")
    members = set(J)
    for alpha in J:
        for beta in J:
            if alpha == beta:
                continue
            ups = [j for j in range(len(alpha)) if alpha[j] < beta[j]]
            for i in range(len(alpha)):
                if alpha[i] <= beta[i]:
                    continue
                ok = False
                for j in ups:
                    moved = list(alpha)
                    moved[i] -= 1
                    moved[j] += 1
                    if tuple(moved) in members:
                        ok = True
                        break
                if not ok:
                    return False, (alpha, beta, i)
    return True, None


def hessian_of_derivative(f: Polynomial, alpha: Sequence[int]) -> list[list[Fraction]]:
    """Hessian of ``d^alpha f`` when ``|alpha| = deg f - 2``.

    Entry ``(i, j)`` is ``d^(alpha + e_i + e_j) f``, a constant equal to the
    coefficient of that monomial times its multi-factorial.
    """
    n = f.nvars
    H = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            gamma = list(alpha)
            gamma[i] += 1
            gamma[j] += 1
            gamma = tuple(gamma)
            c = f.coefficient(gamma)
            if c:
                H[i][j] = H[j][i] = c * factorial_of(gamma)
    return H


def _homogeneous_witness(f: Polynomial):
    if not f.is_homogeneous():
        return Witness("not_homogeneous", {"degrees": sorted({sum(e) for e in f.terms})})
    return None


def is_lorentzian(f: Polynomial) -> LorentzReport:
    """Lorentzian test on the positive orthant."""
    w = _homogeneous_witness(f)
    if w:
        return LorentzReport(False, w)
    for exp, c in sorted(f.terms.items(), reverse=True):
        if c < 0:
            return LorentzReport(False, Witness("negative_coefficient", {"monomial": exp, "coefficient": c}))
    k = f.degree
    if f.is_zero() or k <= 1:
        return LorentzReport(True)
    ok, bad = is_m_convex(f.terms.keys())
    if not ok:
        alpha, beta, i = bad
        return LorentzReport(False, Witness("m_convexity", {"alpha": alpha, "beta": beta, "i": i}))
    for alpha in monomials_of_degree(f.nvars, k - 2):
        H = hessian_of_derivative(f, alpha)
        if not any(any(row) for row in H):
            continue
        sig = linalg.inertia(H)
        if sig[0] > 1:
            return LorentzReport(False, Witness("hessian", {"alpha": alpha, "inertia": sig, "matrix": H}))
    return LorentzReport(True)


def is_strictly_lorentzian(f: Polynomial) -> LorentzReport:
    """Operational strict test.

    Every monomial of degree ``k`` must have a positive coefficient and, for
    ``k >= 2``, every Hessian of ``d^a f`` with ``|a| = k - 2`` must have
    inertia ``(1, 0, n - 1)``.
    """
    w = _homogeneous_witness(f)
    if w:
        return LorentzReport(False, w)
    if f.is_zero():
        return LorentzReport(False, Witness("nonpositive_coefficient", {"monomial": None, "coefficient": Fraction(0)}))
    k, n = f.degree, f.nvars
    for exp in monomials_of_degree(n, k):
        c = f.coefficient(exp)
        if c <= 0:
            return LorentzReport(False, Witness("nonpositive_coefficient", {"monomial": exp, "coefficient": c}))
    if k <= 1:
        return LorentzReport(True)
    target = (1, 0, n - 1)
    for alpha in monomials_of_degree(n, k - 2):
        H = hessian_of_derivative(f, alpha)
        sig = linalg.inertia(H)
        if sig != target:
            return LorentzReport(False, Witness("hessian", {"alpha": alpha, "inertia": sig, "matrix": H}))
    return LorentzReport(True)


def generator_matrix(generators: Sequence[Sequence], n: int) -> list[list[Fraction]]:
    gens = [[as_fraction(a) for a in g] for g in generators]
    if not gens:
        raise DomainError("a cone needs at least one generator")
    for g in gens:
        if len(g) != n:
            raise StructureError(f"generator {g} has length {len(g)}, expected {n}")
        if not any(g):
            raise DomainError("cone generators must be nonzero")
    return [[g[i] for g in gens] for i in range(n)]


def is_cone_lorentzian(f: Polynomial, generators: Sequence[Sequence]) -> LorentzReport:
    """Lorentzian test for the cone spanned by ``generators``.

    Pulls ``f`` back along the generator matrix G and tests ``f o G`` on the
    positive orthant.
    """
    G = generator_matrix(generators, f.nvars)
    return is_lorentzian(substitute_linear(f, G))


def default_kappa(f: Polynomial) -> tuple[int, ...]:
    return f.multidegree()


def is_dually_lorentzian(f: Polynomial, kappa: Sequence[int] | None = None) -> LorentzReport:
    """Lorentzian test of ``dual_transform(f, kappa)``.

    ``kappa`` defaults to the multidegree of ``f``.
    """
    kappa = default_kappa(f) if kappa is None else tuple(kappa)
    return is_lorentzian(dual_transform(f, kappa))


def apply_operator(p: Polynomial, directions: Sequence[Sequence], g: Polynomial) -> Polynomial:
    """``p(D_{v_1}, ..., D_{v_m}) g`` for directional derivatives ``D_v``."""
    if len(directions) != p.nvars:
        raise StructureError(f"{len(directions)} directions for {p.nvars} operator variables")
    cache = {(0,) * p.nvars: g}

    def power(exp):
        if exp in cache:
            return cache[exp]
        j = max(i for i, a in enumerate(exp) if a)
        prev = exp[:j] + (exp[j] - 1,) + exp[j + 1:]
        out = directional_derive(power(prev), directions[j])
        cache[exp] = out
        return out

    result = Polynomial.zero(g.variables, g.blocks)
    for exp, c in sorted(p.terms.items()):
        result = result + power(exp).scale(c)
    return result


def recheck_witness(f: Polynomial, witness: Witness, strict: bool = False) -> bool:
    """Independently confirm that ``witness`` demonstrates a failure of ``f``."""
    d = witness.data
    if witness.kind == "not_homogeneous":
        return not f.is_homogeneous()
    if witness.kind == "negative_coefficient":
        return f.coefficient(d["monomial"]) < 0
    if witness.kind == "nonpositive_coefficient":
        return f.is_zero() if d["monomial"] is None else f.coefficient(d["monomial"]) <= 0
    if witness.kind == "m_convexity":
        alpha, beta, i = d["alpha"], d["beta"], d["i"]
        support = set(f.terms)
        if alpha not in support or beta not in support or alpha[i] <= beta[i]:
            return False
        for j in range(len(alpha)):
            if alpha[j] < beta[j]:
                moved = list(alpha)
                moved[i] -= 1
                moved[j] += 1
                if tuple(moved) in support:
                    return False
        return True
    if witness.kind == "hessian":
        # recompute the quadratic form from scratch by differentiating
        q = f
        for var, a in enumerate(d["alpha"]):
            for _ in range(a):
                q = partial(q, var)
        n = f.nvars
        H = [[partial(partial(q, i), j).constant_term() for j in range(n)] for i in range(n)]
        sig = signature_sym(H)
        return sig != (1, 0, n - 1) if strict else sig[0] > 1
    raise DomainError(f"unknown witness kind {witness.kind!r}")
