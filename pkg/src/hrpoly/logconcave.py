"""Pólya frequency sequences, log-concavity, dominance order and Schur
log-concavity of derived polynomials.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from . import linalg
from .errors import DomainError, ImplementationError
from .polyring import Polynomial, as_fraction, derived
from .symfun import Partition, SchurExpansion, as_partition, schur_expand

# all minors of the n x n window are enumerated up to this n; beyond it only
# contiguous Toeplitz minors are searched for a witness
MINOR_WINDOW = 8
CONTIGUOUS_LIMIT = 32


def as_sequence(a) -> tuple[Fraction, ...]:
    """Nonnegative rational sequence; accepts ``"1,5,13"`` or an iterable."""
    if isinstance(a, str):
        a = [s for s in a.replace(" ", "").split(",") if s]
    seq = tuple(as_fraction(x) for x in a)
    for i, x in enumerate(seq):
        if x < 0:
            raise DomainError(f"entry {i} is negative: {x}")
    return seq


def toeplitz_entry(a: Sequence[Fraction], i: int, j: int) -> Fraction:
    k = j - i
    return a[k] if 0 <= k < len(a) else Fraction(0)


def toeplitz_minor(a: Sequence, rows: Sequence[int], cols: Sequence[int]) -> Fraction:
    """Minor of ``(a_{j-i})_{i,j >= 0}`` on the given rows and columns."""
    a = tuple(as_fraction(x) for x in a)
    return linalg.det([[toeplitz_entry(a, i, j) for j in cols] for i in rows])


def toeplitz_determinant(a: Sequence, size: int, shift: int = 0) -> Fraction:
    """``det(a_{shift + j - i})`` of order ``size``."""
    return toeplitz_minor(a, range(size), range(shift, shift + size))


@dataclass(frozen=True)
class Minor:
    rows: tuple[int, ...]
    cols: tuple[int, ...]
    value: Fraction

    def to_json(self) -> dict:
        return {"rows": list(self.rows), "cols": list(self.cols), "value": _fmt(self.value)}


def _fmt(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


# univariate helpers, coefficient lists in increasing degree


def _trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def _polymod(p, q):
    p = _trim(p)
    q = _trim(q)
    while len(p) >= len(q) and p:
        factor = p[-1] / q[-1]
        shift = len(p) - len(q)
        for k, c in enumerate(q):
            p[shift + k] -= factor * c
        p = _trim(p)
    return p


def _gcd(p, q):
    p, q = _trim(p), _trim(q)
    while q:
        p, q = q, _polymod(p, q)
    return p


def _derivative(p):
    return [k * c for k, c in enumerate(p)][1:]


def _sign_at_infinity(p, negative: bool):
    p = _trim(p)
    s = 1 if p[-1] > 0 else -1
    if negative and (len(p) - 1) % 2:
        s = -s
    return s


def _sturm_chain(p):
    chain = [_trim(p), _trim(_derivative(p))]
    while chain[-1]:
        r = _polymod(chain[-2], chain[-1])
        if not r:
            break
        chain.append([-c for c in r])
    return [c for c in chain if c]


def _variations(signs):
    signs = [s for s in signs if s]
    return sum(1 for x, y in zip(signs, signs[1:]) if x != y)


def distinct_real_roots(p: Sequence[Fraction]) -> int:
    """Number of distinct real roots via a Sturm chain."""
    p = _trim([as_fraction(c) for c in p])
    if len(p) <= 1:
        return 0
    chain = _sturm_chain(p)
    return _variations([_sign_at_infinity(c, True) for c in chain]) - _variations(
        [_sign_at_infinity(c, False) for c in chain]
    )


def is_real_rooted(p: Sequence[Fraction]) -> bool:
    """All complex roots of ``sum p_i y^i`` are real (constants count as real-rooted)."""
    p = _trim([as_fraction(c) for c in p])
    if not p:
        return True
    degree = len(p) - 1
    squarefree_degree = degree - (len(_gcd(p, _derivative(p))) - 1) if degree else 0
    return distinct_real_roots(p) == squarefree_degree


def _find_negative_minor(a: tuple[Fraction, ...], deep: bool) -> Minor | None:
    n = len(a) - 1
    window = min(n + 2, MINOR_WINDOW)
    idx = range(window)
    for size in range(1, window + 1):
        for rows in combinations(idx, size):
            for cols in combinations(idx, size):
                # a minor with an all-zero row or column is zero
                if any(cols[0] - i > n or cols[-1] - i < 0 for i in rows):
                    continue
                v = toeplitz_minor(a, rows, cols)
                if v < 0:
                    return Minor(rows, cols, v)
    if not deep:
        return None
    for size in range(window + 1, CONTIGUOUS_LIMIT + 1):
        for shift in range(0, n + 1):
            v = toeplitz_determinant(a, size, shift)
            if v < 0:
                return Minor(tuple(range(size)), tuple(range(shift, shift + size)), v)
    return None


@dataclass(frozen=True)
class PFReport:
    verdict: bool
    witness: Minor | None
    real_rooted: bool

    def __bool__(self):
        return self.verdict

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict,
            "real_rooted": self.real_rooted,
            "witness": self.witness.to_json() if self.witness else None,
        }


def is_polya_frequency(a) -> PFReport:
    """Decide whether a finite nonnegative sequence is Pólya frequency.

    The verdict is exact real-rootedness of ``sum a_i y^i`` (equivalent for
    finitely supported sequences).  All minors of a window of the Toeplitz
    matrix are computed as a cross-check, and for rejected sequences larger
    contiguous Toeplitz minors are searched for a negative witness.  A
    rejected sequence may come without a witness when no searched minor is
    negative.
    """
    a = as_sequence(a)
    lo = next((i for i, x in enumerate(a) if x), None)
    if lo is None:
        return PFReport(True, None, True)
    hi = max(i for i, x in enumerate(a) if x)
    core = a[lo:hi + 1]
    rooted = is_real_rooted(core)
    witness = _find_negative_minor(core, deep=not rooted)
    if witness is not None:
        witness = Minor(witness.rows, tuple(c + lo for c in witness.cols), witness.value) if lo else witness
        if rooted:
            raise ImplementationError("negative Toeplitz minor for a real-rooted generating polynomial")
    return PFReport(rooted, witness, rooted)


@dataclass(frozen=True)
class LogConcavity:
    log_concave: bool
    internal_zeros: bool
    strong: bool
    m_concave: bool

    def to_json(self) -> dict:
        return {
            "log_concave": self.log_concave,
            "internal_zeros": self.internal_zeros,
            "strong": self.strong,
            "m_concave": self.m_concave,
        }


def _has_internal_zeros(a) -> bool:
    support = [i for i, x in enumerate(a) if x]
    return bool(support) and any(not a[i] for i in range(support[0], support[-1] + 1))


def is_m_concave(a) -> bool:
    """``a_i a_j >= a_{i-1} a_{j+1}`` for all ``0 < i <= j < n``."""
    n = len(a) - 1
    return all(a[i] * a[j] >= a[i - 1] * a[j + 1] for i in range(1, n) for j in range(i, n))


def logcon_classify(a) -> LogConcavity:
    """Log-concavity flags; ``strong`` means strictly log-concave.

    Log-concave without internal zeros must coincide with the M-concave
    inequalities; both sides are computed and compared.
    """
    a = as_sequence(a)
    inner = range(1, len(a) - 1)
    lc = all(a[i] * a[i] >= a[i - 1] * a[i + 1] for i in inner)
    strict = all(a[i] * a[i] > a[i - 1] * a[i + 1] for i in inner)
    zeros = _has_internal_zeros(a)
    mc = is_m_concave(a)
    if (lc and not zeros) != mc:
        raise ImplementationError(f"log-concavity criteria disagree on {a}")
    return LogConcavity(lc, zeros, strict, mc)


def _pair(mu, nu):
    mu, nu = as_partition(mu), as_partition(nu)
    if mu.weight != nu.weight:
        raise DomainError(f"weights differ: |{mu}| = {mu.weight}, |{nu}| = {nu.weight}")
    return mu, nu


def dominates(mu, nu) -> bool:
    """``mu >= nu``: every partial sum of ``mu`` is at least that of ``nu``."""
    mu, nu = _pair(mu, nu)
    length = max(len(mu), len(nu))
    a = b = 0
    for i in range(length):
        a += mu.part(i)
        b += nu.part(i)
        if a < b:
            return False
    return True


def dominance_leq(nu, mu) -> bool:
    """``nu <= mu`` in dominance order."""
    return dominates(mu, nu)


@dataclass(frozen=True)
class Cover:
    """Move one box from row ``j`` to row ``i < j`` (0-based)."""

    i: int
    j: int
    result: Partition


def covers_of(nu) -> list[Cover]:
    """Upper covers of ``nu``: ``nu + e_i - e_j`` with ``j = i + 1`` or ``nu_i = nu_j``."""
    nu = as_partition(nu)
    parts = list(nu.padded(len(nu) + 1))
    out = []
    for i in range(len(parts)):
        for j in range(i + 1, len(parts)):
            if not parts[j]:
                break
            if j != i + 1 and parts[i] != parts[j]:
                continue
            moved = parts[:]
            moved[i] += 1
            moved[j] -= 1
            if all(x >= y for x, y in zip(moved, moved[1:])):
                out.append(Cover(i, j, Partition(moved)))
    return out


def brylawski_chain(mu, nu) -> list[Cover]:
    """Covering steps leading from ``nu`` up to ``mu``; lexicographically first move at each step."""
    mu, nu = _pair(mu, nu)
    if not dominates(mu, nu):
        raise DomainError(f"{mu} does not dominate {nu}")
    steps = []
    current = nu
    while current != mu:
        step = next((c for c in covers_of(current) if dominates(mu, c.result)), None)
        if step is None:
            raise ImplementationError(f"no cover of {current} below {mu}")
        steps.append(step)
        current = step.result
    return steps


@dataclass(frozen=True)
class PositivityReport:
    verdict: bool
    expansion: SchurExpansion

    def __bool__(self):
        return self.verdict


def derived_difference(f: Polynomial, m: int, n: int) -> Polynomial:
    """``f^{[m]} f^{[n]} - f^{[m-1]} f^{[n+1]}``."""
    return derived(f, m) * derived(f, n) - derived(f, m - 1) * derived(f, n + 1)


def schur_logconcavity(f: Polynomial, m: int, n: int) -> PositivityReport:
    if not 1 <= m <= n:
        raise DomainError(f"need 1 <= m <= n, got m={m}, n={n}")
    expansion = schur_expand(derived_difference(f, m, n))
    return PositivityReport(expansion.is_positive(), expansion)


def _derived_product(f: Polynomial, parts) -> Polynomial:
    out = Polynomial.constant(1, f.variables, f.blocks)
    for p in parts:
        out = out * derived(f, p)
    return out


def product_inequality(f: Polynomial, mu, nu) -> PositivityReport:
    """Schur expansion of ``f^{[nu_1]}...f^{[nu_m]} - f^{[mu_1]}...f^{[mu_m]}`` for ``mu >= nu``."""
    mu, nu = _pair(mu, nu)
    if not dominates(mu, nu):
        raise DomainError(f"{mu} does not dominate {nu}")
    length = max(len(mu), len(nu))
    diff = _derived_product(f, nu.padded(length)) - _derived_product(f, mu.padded(length))
    expansion = schur_expand(diff)
    return PositivityReport(expansion.is_positive(), expansion)


def monomial_positive(f: Polynomial) -> tuple[bool, tuple | None]:
    """``(True, None)`` or ``(False, (monomial, coefficient))`` for the first negative term."""
    for exp, c in f.monomials():
        if c < 0:
            return False, (exp, c)
    return True, None


def schur_log_concave(seq: Sequence[Polynomial]) -> bool:
    """M-concavity for the Schur-positivity order: each ``f_i f_j - f_{i-1} f_{j+1}`` is Schur positive."""
    n = len(seq) - 1
    for i in range(1, n):
        for j in range(i, n):
            if not schur_expand(seq[i] * seq[j] - seq[i - 1] * seq[j + 1]).is_positive():
                return False
    return True


__all__ = [
    "as_sequence",
    "toeplitz_minor",
    "toeplitz_determinant",
    "distinct_real_roots",
    "is_real_rooted",
    "is_polya_frequency",
    "PFReport",
    "Minor",
    "LogConcavity",
    "logcon_classify",
    "is_m_concave",
    "dominates",
    "dominance_leq",
    "covers_of",
    "brylawski_chain",
    "Cover",
    "derived_difference",
    "schur_logconcavity",
    "product_inequality",
    "monomial_positive",
    "schur_log_concave",
    "PositivityReport",
]
