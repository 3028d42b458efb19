"""Exact dense linear algebra over an arbitrary field of Python numbers.

Entries may be :class:`fractions.Fraction` or :class:`hrpoly.hermitian.GaussianQ`
(anything with field operators and ``conjugate()``).  Matrices are lists of
rows; subspaces are described by a list of basis vectors.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, List, Sequence

Matrix = List[List[Any]]
Vector = List[Any]


def conj(x):
    return x.conjugate() if not isinstance(x, int) else x


def real_part(x):
    return x.real


def shape(A: Sequence[Sequence[Any]]) -> tuple[int, int]:
    rows = len(A)
    cols = len(A[0]) if rows else 0
    for row in A:
        if len(row) != cols:
            raise ValueError("ragged matrix")
    return rows, cols


def identity(n: int) -> Matrix:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def transpose(A):
    return [list(col) for col in zip(*A)]


def conj_transpose(A):
    return [[conj(x) for x in col] for col in zip(*A)]


def matmul(A, B):
    Bt = list(zip(*B))
    return [[sum((a * b for a, b in zip(row, col)), Fraction(0)) for col in Bt] for row in A]


def matvec(A, v):
    return [sum((a * b for a, b in zip(row, v)), Fraction(0)) for row in A]


def from_columns(vectors: Sequence[Sequence[Any]], n: int) -> Matrix:
    """Assemble column vectors into an ``n x len(vectors)`` matrix."""
    return [[v[i] for v in vectors] for i in range(n)]


def columns(A) -> list[Vector]:
    return [list(col) for col in zip(*A)] if A and A[0] else []


def is_hermitian(A) -> bool:
    n, m = shape(A)
    if n != m:
        return False
    return all(A[i][j] == conj(A[j][i]) for i in range(n) for j in range(i, n))


def rref(A):
    """Reduced row echelon form and pivot column indices."""
    R = [list(row) for row in A]
    rows, cols = shape(R)
    pivots = []
    r = 0
    for c in range(cols):
        p = next((i for i in range(r, rows) if R[i][c] != 0), None)
        if p is None:
            continue
        R[r], R[p] = R[p], R[r]
        inv = 1 / R[r][c]
        R[r] = [x * inv for x in R[r]]
        for i in range(rows):
            if i != r and R[i][c] != 0:
                factor = R[i][c]
                R[i] = [x - factor * y for x, y in zip(R[i], R[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return R, pivots


def rank(A) -> int:
    if not A or not A[0]:
        return 0
    return len(rref(A)[1])


def nullspace(A, ncols: int | None = None) -> list[Vector]:
    """Basis of ``{v : A v = 0}``; ``ncols`` is needed when A has no rows."""
    if not A:
        n = ncols or 0
        return [[Fraction(int(i == j)) for i in range(n)] for j in range(n)]
    R, pivots = rref(A)
    n = len(A[0])
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for row, p in zip(R, pivots):
            v[p] = -row[f]
        basis.append(v)
    return basis


def det(A):
    n, m = shape(A)
    if n != m:
        raise ValueError("determinant of a non-square matrix")
    M = [list(row) for row in A]
    result = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if M[i][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            M[c], M[p] = M[p], M[c]
            result = -result
        pivot = M[c][c]
        result = result * pivot
        for i in range(c + 1, n):
            if M[i][c] != 0:
                factor = M[i][c] / pivot
                M[i] = [x - factor * y for x, y in zip(M[i], M[c])]
    return result


def inverse(A):
    n, m = shape(A)
    if n != m:
        raise ValueError("inverse of a non-square matrix")
    aug = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(A)]
    R, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("singular matrix")
    return [row[n:] for row in R]


def congruent(A, B):
    """``B* A B`` for a basis matrix B (columns span the subspace)."""
    return matmul(conj_transpose(B), matmul(A, B))


def restrict(A, basis: Sequence[Sequence[Any]]):
    """Gram matrix of the form A on the span of ``basis``."""
    if not basis:
        return []
    return congruent(A, from_columns(basis, len(A)))


@dataclass(frozen=True)
class Reduction:
    """Outcome of a congruence diagonalization.

    The vectors are mutually orthogonal for the form; the form is positive on
    each of ``positive`` and negative on each of ``negative``.  ``null`` spans
    the radical.
    """

    positive: tuple
    null: tuple
    negative: tuple

    @property
    def inertia(self) -> tuple[int, int, int]:
        return len(self.positive), len(self.null), len(self.negative)


def congruence_reduce(A) -> Reduction:
    """Diagonalize a Hermitian (or real symmetric) matrix by congruence.

    Uses a nonzero diagonal pivot when one exists; otherwise a 2x2 hyperbolic
    block ``[[0, a], [conj(a), 0]]``, which contributes one positive and one
    negative direction.  No square roots are taken, so the computation stays
    inside the field of the entries.
    """
    n, m = shape(A)
    if n != m:
        raise ValueError("form matrix must be square")
    M = [list(row) for row in A]
    basis = [[Fraction(int(i == j)) for i in range(n)] for j in range(n)]
    active = list(range(n))
    positive, negative = [], []
    while active:
        k = next((i for i in active if M[i][i] != 0), None)
        if k is not None:
            d = M[k][k]
            (positive if real_part(d) > 0 else negative).append(basis[k])
            active.remove(k)
            for r in active:
                mult = M[k][r] / d
                if mult != 0:
                    basis[r] = [x - mult * y for x, y in zip(basis[r], basis[k])]
            for r in active:
                if M[r][k] == 0:
                    continue
                for s in active:
                    if M[k][s] != 0:
                        M[r][s] = M[r][s] - M[k][s] * M[r][k] / d
            continue
        pair = next(((i, j) for a, i in enumerate(active) for j in active[a + 1:] if M[i][j] != 0), None)
        if pair is None:
            break
        i, j = pair
        a = M[i][j]
        ca = conj(a)
        positive.append([x + ca * y for x, y in zip(basis[i], basis[j])])
        negative.append([x - ca * y for x, y in zip(basis[i], basis[j])])
        active.remove(i)
        active.remove(j)
        alpha = {r: M[j][r] / ca for r in active}
        beta = {r: M[i][r] / a for r in active}
        for r in active:
            basis[r] = [x - alpha[r] * y - beta[r] * z for x, y, z in zip(basis[r], basis[i], basis[j])]
        for r in active:
            for s in active:
                M[r][s] = M[r][s] - alpha[s] * M[r][i] - beta[s] * M[r][j]
    null = [basis[r] for r in active]
    return Reduction(tuple(map(tuple, positive)), tuple(map(tuple, null)), tuple(map(tuple, negative)))


def inertia(A) -> tuple[int, int, int]:
    """``(n_plus, n_zero, n_minus)`` of a Hermitian matrix."""
    return congruence_reduce(A).inertia


def form_value(A, u, v=None):
    """``u* A v`` (``v`` defaults to ``u``)."""
    if v is None:
        v = u
    return sum((conj(x) * y for x, y in zip(u, matvec(A, v))), Fraction(0))
