"""Exact Hermitian forms and Hodge-Riemann pair predicates.

Conventions: a Hermitian form on ``V = C^n`` is a matrix ``H`` with
``H(u, v) = u* H v`` (conjugate-linear in the first slot).  A sesquilinear
map ``Phi: W x V -> C`` is a ``d_W x n`` matrix with ``Phi(w, v) = w* Phi v``.
An embedding ``iota: W -> V`` is an ``n x d_W`` matrix whose columns are the
images of the basis of W.

For a pair ``(H, iota)`` write ``N = iota* H iota`` for the restriction of H
to the image of W and ``P`` for the H-orthogonal complement of that image.
The pair is

* ``HR`` when N is negative definite and H is positive definite on P;
* ``weak_HR`` when N is negative semidefinite and either ``iota* H`` has a
  nonzero left kernel or H is positive semidefinite on P;
* ``very_weak_HR`` when N is negative semidefinite and either N is
  degenerate or H is positive semidefinite on P.

All definiteness questions are settled by exact congruence inertia.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import linalg
from .errors import DomainError, ImplementationError, PreconditionError, StructureError
from .polyring import as_fraction


class GaussianQ:
    """Exact complex number ``re + im*i`` with rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        if isinstance(re, GaussianQ):
            re, im = re.re, re.im + as_fraction(im)
        self.re = as_fraction(re)
        self.im = as_fraction(im)

    @classmethod
    def coerce(cls, x) -> "GaussianQ":
        if isinstance(x, GaussianQ):
            return x
        if isinstance(x, dict):
            return cls(x.get("re", 0), x.get("im", 0))
        if isinstance(x, str):
            return cls.parse(x)
        if isinstance(x, (list, tuple)) and len(x) == 2:
            return cls(x[0], x[1])
        return cls(x)

    @classmethod
    def parse(cls, text: str) -> "GaussianQ":
        """Parse ``a``, ``a+bi``, ``a-b/c*i``, ``i``, ``-2i`` and similar."""
        t = text.replace(" ", "")
        m = re.fullmatch(r"([+-]?\d+(?:/\d+)?)?(?:([+-])(\d+(?:/\d+)?)?\*?i)?", t)
        if m and (m.group(1) or m.group(2)):
            re_part = Fraction(m.group(1)) if m.group(1) else Fraction(0)
            im_part = Fraction(0)
            if m.group(2):
                im_part = Fraction(m.group(3) or 1) * (-1 if m.group(2) == "-" else 1)
            return cls(re_part, im_part)
        m = re.fullmatch(r"([+-]?)(\d+(?:/\d+)?)?\*?i", t)
        if m:
            return cls(0, Fraction(m.group(2) or 1) * (-1 if m.group(1) == "-" else 1))
        raise DomainError(f"not an exact Gaussian rational: {text!r}")

    @property
    def real(self) -> Fraction:
        return self.re

    @property
    def imag(self) -> Fraction:
        return self.im

    def conjugate(self) -> "GaussianQ":
        return GaussianQ(self.re, -self.im)

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def _other(self, x):
        if isinstance(x, GaussianQ):
            return x
        if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
            return GaussianQ(x)
        return None

    def __add__(self, x):
        x = self._other(x)
        if x is None:
            return NotImplemented
        return GaussianQ(self.re + x.re, self.im + x.im)

    __radd__ = __add__

    def __sub__(self, x):
        x = self._other(x)
        if x is None:
            return NotImplemented
        return GaussianQ(self.re - x.re, self.im - x.im)

    def __rsub__(self, x):
        x = self._other(x)
        if x is None:
            return NotImplemented
        return x - self

    def __mul__(self, x):
        x = self._other(x)
        if x is None:
            return NotImplemented
        return GaussianQ(self.re * x.re - self.im * x.im, self.re * x.im + self.im * x.re)

    __rmul__ = __mul__

    def __truediv__(self, x):
        x = self._other(x)
        if x is None:
            return NotImplemented
        n = x.norm()
        if not n:
            raise ZeroDivisionError("division by zero")
        num = self * x.conjugate()
        return GaussianQ(num.re / n, num.im / n)

    def __rtruediv__(self, x):
        x = self._other(x)
        if x is None:
            return NotImplemented
        return x / self

    def __neg__(self):
        return GaussianQ(-self.re, -self.im)

    def __eq__(self, x):
        x = self._other(x)
        if x is None:
            return NotImplemented
        return self.re == x.re and self.im == x.im

    def __hash__(self):
        return hash((self.re, self.im)) if self.im else hash(self.re)

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def to_json(self) -> dict:
        return {"re": _fmt(self.re), "im": _fmt(self.im)}

    def __repr__(self):
        return f"GaussianQ({self})"

    def __str__(self):
        if not self.im:
            return _fmt(self.re)
        im = "" if abs(self.im) == 1 else _fmt(abs(self.im)) + "*"
        sign = "-" if self.im < 0 else "+"
        if not self.re:
            return ("-" if self.im < 0 else "") + im + "i"
        return f"{_fmt(self.re)}{sign}{im}i"


I = GaussianQ(0, 1)


def _fmt(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def as_matrix(rows) -> list[list[GaussianQ]]:
    """Coerce a nested sequence (ints, Fractions, strings, {re, im} dicts) to GaussianQ."""
    out = [[GaussianQ.coerce(x) for x in row] for row in rows]
    if out:
        linalg.shape(out)
    return out


def as_vector(v) -> list[GaussianQ]:
    return [GaussianQ.coerce(x) for x in v]


class HermitianForm:
    """Immutable Hermitian matrix over the Gaussian rationals."""

    __slots__ = ("matrix",)

    def __init__(self, rows):
        M = as_matrix(rows)
        if M and not linalg.is_hermitian(M):
            raise DomainError("matrix is not Hermitian")
        self.matrix = tuple(tuple(r) for r in M)

    @property
    def n(self) -> int:
        return len(self.matrix)

    def rows(self) -> list[list[GaussianQ]]:
        return [list(r) for r in self.matrix]

    def __call__(self, u, v=None):
        return linalg.form_value(self.rows(), as_vector(u), None if v is None else as_vector(v))

    def restrict(self, basis: Sequence[Sequence]) -> "HermitianForm":
        return HermitianForm(linalg.restrict(self.rows(), [as_vector(b) for b in basis]))

    def __eq__(self, other):
        return isinstance(other, HermitianForm) and self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    def __repr__(self):
        return f"HermitianForm({[[str(x) for x in r] for r in self.matrix]})"


def _form(H) -> HermitianForm:
    return H if isinstance(H, HermitianForm) else HermitianForm(H)


def _columns_of(A, n: int) -> list[list[GaussianQ]]:
    """Interpret an ``n x d`` matrix as its list of columns."""
    M = as_matrix(A)
    if not M:
        return []
    if len(M) != n:
        raise StructureError(f"embedding has {len(M)} rows, expected {n}")
    return linalg.columns(M)


def inertia(H) -> tuple[int, int, int]:
    """``(n_plus, n_zero, n_minus)``; raises on non-Hermitian input."""
    return linalg.inertia(_form(H).rows())


def _is_pd(rows) -> bool:
    return not rows or linalg.inertia(rows)[0] == len(rows)


def _is_psd(rows) -> bool:
    return not rows or linalg.inertia(rows)[2] == 0


def _is_nd(rows) -> bool:
    return not rows or linalg.inertia(rows)[2] == len(rows)


def _is_nsd(rows) -> bool:
    return not rows or linalg.inertia(rows)[0] == 0


def perp_basis(form, w_basis=None) -> list[list[GaussianQ]]:
    """Orthogonal complement.

    With ``w_basis`` (an ``n x d`` matrix whose columns span W), ``form`` is a
    Hermitian matrix and the result spans ``{v : H(w, v) = 0 for all w}``.
    Without it, ``form`` is a ``d_W x n`` sesquilinear map and the result
    spans ``{v : Phi(w, v) = 0 for all w}``, its kernel.
    """
    if w_basis is None:
        Phi = as_matrix(form)
        if not Phi:
            raise StructureError("an empty sesquilinear map carries no dimension; pass n explicitly")
        return linalg.nullspace(Phi)
    H = _form(form)
    cols = _columns_of(w_basis, H.n)
    if not cols:
        return [[GaussianQ(int(i == j)) for i in range(H.n)] for j in range(H.n)]
    system = linalg.matmul(linalg.conj_transpose(linalg.from_columns(cols, H.n)), H.rows())
    return linalg.nullspace(system)


def sesqui_perp(Phi, n: int) -> list[list[GaussianQ]]:
    """Kernel of ``Phi`` as a map on ``C^n`` (handles ``d_W = 0``)."""
    rows = as_matrix(Phi)
    return linalg.nullspace(rows, ncols=n)


@dataclass(frozen=True)
class HRClassification:
    level: str
    inertia_H: tuple
    inertia_restricted: tuple
    inertia_perp: tuple
    phi_left_degenerate: bool

    ORDER = ("none", "very_weak_HR", "weak_HR", "HR")

    def at_least(self, level: str) -> bool:
        return self.ORDER.index(self.level) >= self.ORDER.index(level)

    @property
    def is_hr(self) -> bool:
        return self.level == "HR"

    def to_json(self) -> dict:
        return {
            "level": self.level,
            "inertia_H": list(self.inertia_H),
            "inertia_restricted": list(self.inertia_restricted),
            "inertia_perp": list(self.inertia_perp),
            "phi_left_degenerate": self.phi_left_degenerate,
        }


def classify_hr_pair(H, iota) -> HRClassification:
    """Strongest of HR, weak_HR, very_weak_HR that ``(H, iota)`` satisfies."""
    H = _form(H)
    rows = H.rows()
    cols = _columns_of(iota, H.n)
    d = len(cols)
    N = linalg.restrict(rows, cols)
    sig_N = linalg.inertia(N) if N else (0, 0, 0)
    perp = perp_basis(H, linalg.from_columns(cols, H.n)) if cols else [[GaussianQ(int(i == j)) for i in range(H.n)] for j in range(H.n)]
    HP = linalg.restrict(rows, perp)
    sig_P = linalg.inertia(HP) if HP else (0, 0, 0)
    Phi = linalg.matmul(linalg.conj_transpose(linalg.from_columns(cols, H.n)), rows) if cols else []
    left_degenerate = bool(cols) and linalg.rank(Phi) < d
    nd = sig_N[2] == d
    nsd = sig_N[0] == 0
    pd_perp = sig_P[0] == len(perp)
    psd_perp = sig_P[2] == 0
    if nd and pd_perp:
        level = "HR"
    elif nsd and (left_degenerate or psd_perp):
        level = "weak_HR"
    elif nsd and (sig_N[1] > 0 or psd_perp):
        level = "very_weak_HR"
    else:
        level = "none"
    result = HRClassification(level, linalg.inertia(rows) if rows else (0, 0, 0), sig_N, sig_P, left_degenerate)
    # cross-check against the inertia characterization of HR pairs
    by_inertia = nd and result.inertia_H == (H.n - d, 0, d)
    if by_inertia != (level == "HR"):
        raise ImplementationError(f"HR classification disagrees with inertia count for {H}")
    return result


def pre_hr_pair(H, Phi) -> bool:
    """``Phi`` left nondegenerate and H positive definite on ``ker Phi``."""
    H = _form(H)
    P = as_matrix(Phi)
    if P and len(P[0]) != H.n:
        raise StructureError(f"Phi has {len(P[0])} columns, expected {H.n}")
    if P and linalg.rank(P) < len(P):
        return False
    kernel = linalg.nullspace(P, ncols=H.n)
    return _is_pd(linalg.restrict(H.rows(), kernel))


def determinant_criterion(H, iota, v0) -> Fraction:
    """``(-1)^{d_W} det(H(v_i, v_j))`` with ``v_0`` and the images of a basis of W.

    Raises:
        PreconditionError: if H is not negative semidefinite on the image of
            W; ``witness`` is a vector of that image with positive norm.
    """
    H = _form(H)
    cols = _columns_of(iota, H.n)
    rows = H.rows()
    N = linalg.restrict(rows, cols)
    if N:
        red = linalg.congruence_reduce(N)
        if red.positive:
            w = list(red.positive[0])
            v = linalg.matvec(linalg.from_columns(cols, H.n), w)
            raise PreconditionError(
                f"H is not negative semidefinite on the image of W: H(v, v) > 0 for v = {[str(x) for x in v]}",
                witness=v,
            )
    vectors = [as_vector(v0)] + cols
    if len(vectors[0]) != H.n:
        raise StructureError(f"v0 has length {len(vectors[0])}, expected {H.n}")
    gram = linalg.restrict(rows, vectors)
    value = linalg.det(gram)
    value = GaussianQ.coerce(value)
    if value.im:
        raise ImplementationError("Gram determinant of a Hermitian form is not real")
    return value.re * (-1) ** len(cols)


def block_extend(H, Phi) -> HermitianForm:
    """``G = [[H, Phi*], [Phi, 0]]`` on ``V + W``."""
    H = _form(H)
    P = as_matrix(Phi)
    d = len(P)
    if P and len(P[0]) != H.n:
        raise StructureError(f"Phi has {len(P[0])} columns, expected {H.n}")
    Pstar = linalg.conj_transpose(P) if P else [[] for _ in range(H.n)]
    top = [list(H.matrix[i]) + list(Pstar[i]) for i in range(H.n)]
    bottom = [list(P[i]) + [GaussianQ(0)] * d for i in range(d)]
    return HermitianForm(top + bottom)


@dataclass(frozen=True)
class BlockLemmaReport:
    a: bool
    a_plus: bool
    b: bool
    b_plus: bool
    c: bool
    c_plus: bool
    d: bool
    d_plus: bool
    sampled_inequality_ok: bool = True

    def as_dict(self) -> dict:
        return {k: getattr(self, k) for k in ("a", "a_plus", "b", "b_plus", "c", "c_plus", "d", "d_plus")}


_GRID = [
    ("a_plus", "a"),
    ("b_plus", "a_plus"),
    ("b_plus", "b"),
    ("b", "a"),
    ("b", "c"),
    ("c", "b"),
    ("c", "d"),
    ("d", "c"),
    ("b_plus", "c_plus"),
    ("c_plus", "b_plus"),
    ("c_plus", "d_plus"),
    ("d_plus", "c_plus"),
    ("c_plus", "c"),
    ("d_plus", "d"),
]


def verify_block_lemma(H, iota, Phi, samples: int = 8, rng: random.Random | None = None) -> BlockLemmaReport:
    """Evaluate the eight conditions relating H, its extension G and Phi.

    With ``M = Phi iota`` (the map ``(w, w') -> Phi(w, iota w')``):

    * (a) / (a+): H positive semidefinite / definite on the H-perp of iota W;
    * (b) / (b+): the same on ``ker Phi``;
    * (c): G positive semidefinite on the G-perp of iota W and M invertible;
      (c+): G positive definite there;
    * (d): M invertible and ``H(v, v) >= 2 Re(x_v* M^-1 y_v)`` for all v, with
      ``x_v = iota* H v`` and ``y_v = Phi v``; (d+): equality only at 0.

    The inequality in (d) is the Hermitian form ``H - K - K*`` with
    ``K = H iota M^-1 Phi``, so it is decided exactly; it is additionally
    evaluated at random sample vectors as a consistency check.

    Raises:
        PreconditionError: if H is not negative definite on iota W.
        ImplementationError: if the computed booleans violate the
            implications that must hold among them.
    """
    H = _form(H)
    rows = H.rows()
    n = H.n
    cols = _columns_of(iota, n)
    dW = len(cols)
    P = as_matrix(Phi)
    if len(P) != dW or (P and len(P[0]) != n):
        raise StructureError("Phi must be a d_W x n matrix")
    N = linalg.restrict(rows, cols)
    if not _is_nd(N):
        raise PreconditionError("H is not negative definite on iota W")
    iota_m = linalg.from_columns(cols, n)

    perp_iota = perp_basis(H, iota_m) if cols else [[GaussianQ(int(i == j)) for i in range(n)] for j in range(n)]
    H_perp = linalg.restrict(rows, perp_iota)
    a, a_plus = _is_psd(H_perp), _is_pd(H_perp)

    kernel = linalg.nullspace(P, ncols=n)
    H_ker = linalg.restrict(rows, kernel)
    b, b_plus = _is_psd(H_ker), _is_pd(H_ker)

    M = linalg.matmul(P, iota_m) if P else []
    m_invertible = not M or linalg.rank(M) == dW
    G = block_extend(H, P)
    iota_G = [list(c) + [GaussianQ(0)] * dW for c in cols]
    perp_G = perp_basis(G, linalg.from_columns(iota_G, n + dW)) if cols else [
        [GaussianQ(int(i == j)) for i in range(n)] for j in range(n)
    ]
    G_perp = linalg.restrict(G.rows(), perp_G)
    c = _is_psd(G_perp) and m_invertible
    c_plus = _is_pd(G_perp)

    sampled_ok = True
    if m_invertible:
        if M:
            K = linalg.matmul(linalg.matmul(rows, iota_m), linalg.matmul(linalg.inverse(M), P))
            Q = [[rows[i][j] - K[i][j] - K[j][i].conjugate() for j in range(n)] for i in range(n)]
        else:
            Q = rows
        sig_Q = linalg.inertia(Q)
        d, d_plus = sig_Q[2] == 0, sig_Q[0] == n
        rng = rng or random.Random(0)
        Minv = linalg.inverse(M) if M else []
        for _ in range(samples):
            v = [GaussianQ(rng.randint(-3, 3), rng.randint(-3, 3)) for _ in range(n)]
            lhs = linalg.form_value(rows, v)
            if M:
                x = linalg.matvec(linalg.conj_transpose(iota_m), linalg.matvec(rows, v))
                y = linalg.matvec(P, v)
                z = sum((xi.conjugate() * zi for xi, zi in zip(x, linalg.matvec(Minv, y))), GaussianQ(0))
                rhs = 2 * z.re
            else:
                rhs = Fraction(0)
            gap = GaussianQ.coerce(lhs).re - rhs
            if gap != GaussianQ.coerce(linalg.form_value(Q, v)).re:
                sampled_ok = False
            if d and gap < 0:
                sampled_ok = False
    else:
        d = d_plus = False
    report = BlockLemmaReport(a, a_plus, b, b_plus, c, c_plus, d, d_plus, sampled_ok)
    values = report.as_dict()
    for lhs, rhs in _GRID:
        if values[lhs] and not values[rhs]:
            raise ImplementationError(f"implication {lhs} => {rhs} violated: {values}")
    if not sampled_ok:
        raise ImplementationError("sampled inequality disagrees with the exact quadratic form")
    return report


def perp_definiteness_conditions(H, w_basis) -> dict:
    """The equivalent characterizations of H being positive (semi)definite
    on the H-perp of a subspace W on which H is nondegenerate.

    Returns booleans ``a``/``a_plus`` (definiteness on the perp), ``c``/``c_plus``
    (inertia counts) and ``d``/``d_plus`` (sign of the bordered Gram
    determinant for every ``v0``, decided through its Schur-complement form).
    """
    H = _form(H)
    rows = H.rows()
    n = H.n
    cols = _columns_of(w_basis, n)
    dW = len(cols)
    N = linalg.restrict(rows, cols)
    sig_N = linalg.inertia(N) if N else (0, 0, 0)
    if sig_N[1]:
        raise PreconditionError("H is degenerate on W")
    s = sig_N[2]
    B = linalg.from_columns(cols, n) if cols else None
    perp = perp_basis(H, B) if cols else [[GaussianQ(int(i == j)) for i in range(n)] for j in range(n)]
    HP = linalg.restrict(rows, perp)
    sig = linalg.inertia(rows)
    if cols:
        HB = linalg.matmul(rows, B)
        S = linalg.matmul(linalg.matmul(HB, linalg.inverse(N)), linalg.conj_transpose(HB))
        Q = [[rows[i][j] - S[i][j] for j in range(n)] for i in range(n)]
    else:
        Q = rows
    sig_Q = linalg.inertia(Q)
    return {
        "a": _is_psd(HP),
        "a_plus": _is_pd(HP),
        "c": sig[2] == s,
        "c_plus": sig == (n - s, 0, s),
        "d": sig_Q[2] == 0,
        "d_plus": sig_Q[2] == 0 and sig_Q[1] == dW,
        "schur_form": Q,
        "negative_index_on_W": s,
    }


def gram_sign(H, w_basis, v0) -> Fraction:
    """``(-1)^s det(H(v_i, v_j))`` for ``v0`` followed by a basis of W, s the negative index on W."""
    H = _form(H)
    cols = _columns_of(w_basis, H.n)
    N = linalg.restrict(H.rows(), cols)
    s = linalg.inertia(N)[2] if N else 0
    value = GaussianQ.coerce(linalg.det(linalg.restrict(H.rows(), [as_vector(v0)] + cols)))
    return value.re * (-1) ** s


# one-parameter families


class HermitianFamily:
    """Polynomial family ``H(t) = sum_k t^k C_k`` of Hermitian matrices."""

    __slots__ = ("coefficients",)

    def __init__(self, coefficients: Sequence):
        forms = [_form(c) for c in coefficients]
        if not forms:
            raise DomainError("a family needs at least one coefficient matrix")
        if len({f.n for f in forms}) != 1:
            raise StructureError("coefficient matrices differ in size")
        self.coefficients = tuple(forms)

    @classmethod
    def from_entries(cls, entries) -> "HermitianFamily":
        """Build from a matrix whose entries are coefficient lists in t."""
        n = len(entries)
        degree = max(len(e) for row in entries for e in row)
        mats = []
        for k in range(degree):
            mats.append([[GaussianQ.coerce(entries[i][j][k]) if k < len(entries[i][j]) else GaussianQ(0) for j in range(n)] for i in range(n)])
        return cls(mats)

    @property
    def n(self) -> int:
        return self.coefficients[0].n

    def derivative(self, order: int = 1) -> "HermitianFamily":
        out = []
        for k in range(order, len(self.coefficients)):
            factor = 1
            for j in range(k - order + 1, k + 1):
                factor *= j
            out.append([[x * factor for x in row] for row in self.coefficients[k].rows()])
        if not out:
            out = [[[GaussianQ(0)] * self.n for _ in range(self.n)]]
        return HermitianFamily(out)

    def at(self, t) -> HermitianForm:
        t = as_fraction(t)
        n = self.n
        acc = [[GaussianQ(0)] * n for _ in range(n)]
        power = Fraction(1)
        for C in self.coefficients:
            for i in range(n):
                for j in range(n):
                    if C.matrix[i][j]:
                        acc[i][j] = acc[i][j] + C.matrix[i][j] * power
            power *= t
        return HermitianForm(acc)


@dataclass(frozen=True)
class IterateReport:
    hypotheses_hold_at_samples: bool
    relation_exact: bool
    conclusion_holds: bool
    failed: tuple = ()
    samples: tuple = ()
    intermediate_hr: tuple = ()
    details: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "hypotheses_hold_at_samples": self.hypotheses_hold_at_samples,
            "relation_exact": self.relation_exact,
            "conclusion_holds": self.conclusion_holds,
            "failed": list(self.failed),
            "samples": [_fmt(as_fraction(s)) for s in self.samples],
        }


def _coordinates(U_cols, vectors, n):
    """Coordinates of ``vectors`` in the basis ``U_cols``; None if outside the span."""
    U = linalg.from_columns(U_cols, n)
    out = []
    for v in vectors:
        aug = [list(U[i]) + [v[i]] for i in range(n)]
        R, piv = linalg.rref(aug)
        if len(U_cols) in piv:
            return None
        coords = [GaussianQ(0)] * len(U_cols)
        for row, p in zip(R, piv):
            coords[p] = row[-1]
        out.append(coords)
    return out


def iterate_check(family, iota, f, U, kappa: Sequence, samples: Sequence) -> IterateReport:
    """Check the hypotheses of the iterated derivative criterion at samples.

    ``family`` is a :class:`HermitianFamily` (or its coefficient list) on V,
    ``iota`` and ``f`` are ``n x d_W`` maps ``W -> V``, ``U`` is an ``n x dim U``
    basis matrix and ``kappa = (kappa_0, ..., kappa_k)`` fixes k.  Verified:

    * V is the direct sum of U and f(W), and iota(W) lies in U;
    * relation, exactly at t = 0: ``H^(i+1)_0(f w, v) = kappa_i H^(i)_0(iota w, v)``;
    * (A) ``(H^(k)_t restricted to U, iota)`` is HR at every sample;
    * (B) ``(H^(i)_t, iota)`` is very weakly HR for ``0 <= i <= k`` at every sample;
    * (C) ``(H'_0, f)`` is weakly HR when ``k >= 1``;
    * (e) ``H^(k+1)_0`` is positive semidefinite on U.

    The conclusion ``(H_0 restricted to U, iota)`` HR is computed directly,
    so the report never asserts anything beyond the samples given.
    """
    fam = family if isinstance(family, HermitianFamily) else HermitianFamily(family)
    n = fam.n
    kappa = [as_fraction(k) for k in kappa]
    if not kappa or any(k <= 0 for k in kappa):
        raise DomainError("kappa must be a nonempty list of positive rationals")
    k = len(kappa) - 1
    iota_cols = _columns_of(iota, n)
    f_cols = _columns_of(f, n)
    U_cols = _columns_of(U, n)
    if len(f_cols) != len(iota_cols):
        raise StructureError("iota and f must have the same source dimension")
    failed = []
    span = linalg.rank(linalg.from_columns(U_cols + f_cols, n)) if U_cols + f_cols else 0
    f_rank = linalg.rank(linalg.from_columns(f_cols, n)) if f_cols else 0
    if not (span == n and len(U_cols) + f_rank == n and linalg.rank(linalg.from_columns(U_cols, n)) == len(U_cols)):
        failed.append("direct_sum")
    iota_U = _coordinates(U_cols, iota_cols, n) if U_cols else ([] if not iota_cols else None)
    if iota_U is None:
        failed.append("iota_in_U")
    derivs = [fam.derivative(i) for i in range(k + 2)]
    at0 = [d.at(0) for d in derivs]
    f_m = linalg.from_columns(f_cols, n) if f_cols else None
    iota_m = linalg.from_columns(iota_cols, n) if iota_cols else None
    relation = True
    if f_cols:
        for i in range(k + 1):
            lhs = linalg.matmul(linalg.conj_transpose(f_m), at0[i + 1].rows())
            rhs = linalg.matmul(linalg.conj_transpose(iota_m), at0[i].rows())
            if any(lhs[a][b] != rhs[a][b] * kappa[i] for a in range(len(f_cols)) for b in range(n)):
                relation = False
                break
    samples = tuple(as_fraction(s) for s in samples)

    def restricted_hr(form: HermitianForm) -> bool:
        if iota_U is None:
            return False
        local = form.restrict(U_cols) if U_cols else HermitianForm([])
        if not U_cols:
            return not iota_cols
        return classify_hr_pair(local, linalg.from_columns(iota_U, len(U_cols)) if iota_U else []).is_hr

    for t in samples:
        if not restricted_hr(derivs[k].at(t)):
            failed.append(f"A@{_fmt(t)}")
        for i in range(k + 1):
            if not classify_hr_pair(derivs[i].at(t), iota_cols and iota_m).at_least("very_weak_HR"):
                failed.append(f"B{i}@{_fmt(t)}")
    if k >= 1 and not classify_hr_pair(at0[1], f_cols and f_m).at_least("weak_HR"):
        failed.append("C")
    if not _is_psd(linalg.restrict(at0[k + 1].rows(), U_cols)):
        failed.append("e")
    conclusion = restricted_hr(at0[0])
    intermediate = tuple(classify_hr_pair(at0[i], iota_cols and iota_m).is_hr for i in range(1, k + 1))
    return IterateReport(
        hypotheses_hold_at_samples=not failed,
        relation_exact=relation,
        conclusion_holds=conclusion,
        failed=tuple(failed),
        samples=samples,
        intermediate_hr=intermediate,
    )


def first_order_vanishing_check(family, iota, v0, samples: Sequence) -> dict:
    """Finite-sample version of the first-order vanishing criterion.

    Checks at every sample that ``(H_t, iota)`` is very weakly HR, that
    ``v0`` lies in the H_0-perp of iota W with ``H_0(v0, v0) = 0``, and reports
    whether ``H'_0(v0, v0) = 0``.
    """
    fam = family if isinstance(family, HermitianFamily) else HermitianFamily(family)
    n = fam.n
    cols = _columns_of(iota, n)
    v0 = as_vector(v0)
    hyp = all(classify_hr_pair(fam.at(t), cols and linalg.from_columns(cols, n)).at_least("very_weak_HR") for t in samples)
    H0 = fam.at(0)
    in_perp = all(linalg.form_value(H0.rows(), c, v0) == 0 for c in cols)
    null = H0(v0) == 0
    return {
        "hypotheses_hold_at_samples": hyp and in_perp and null,
        "derivative_vanishes": fam.derivative(1).at(0)(v0) == 0,
    }


def random_hermitian(rng: random.Random, n: int, bound: int = 3, real: bool = False) -> HermitianForm:
    rows = [[GaussianQ(0)] * n for _ in range(n)]
    for i in range(n):
        rows[i][i] = GaussianQ(rng.randint(-bound, bound))
        for j in range(i + 1, n):
            z = GaussianQ(rng.randint(-bound, bound), 0 if real else rng.randint(-bound, bound))
            rows[i][j] = z
            rows[j][i] = z.conjugate()
    return HermitianForm(rows)


def random_matrix(rng: random.Random, rows: int, cols: int, bound: int = 3, real: bool = False):
    return [[GaussianQ(rng.randint(-bound, bound), 0 if real else rng.randint(-bound, bound)) for _ in range(cols)] for _ in range(rows)]
