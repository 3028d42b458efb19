"""Partitions, Schur and Schubert polynomials, and Schur-basis expansion.

Schur polynomials follow the elementary-symmetric determinant

    s_lambda = det(c_{lambda_i + j - i})_{1 <= i, j <= len(lambda)}

where ``c_k`` is the k-th elementary symmetric polynomial.  This is the
conjugate of the convention built from complete homogeneous polynomials, so
here ``s_(1,1) = x1^2 + x1 x2 + x2^2`` in two variables and ``s_lambda = 0``
as soon as ``lambda_1`` exceeds the number of variables.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from typing import Iterable, Mapping, Sequence

from .errors import DomainError, ImplementationError, NotSymmetricError
from .polyring import Polynomial, as_fraction, default_names, derived, monomials_of_degree


@dataclass(frozen=True, order=True)
class Partition:
    """Weakly decreasing tuple of positive parts (trailing zeros dropped)."""

    parts: tuple[int, ...] = ()

    def __init__(self, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        if any(p < 0 for p in parts):
            raise DomainError(f"negative part in {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise DomainError(f"parts {parts} are not weakly decreasing")
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        object.__setattr__(self, "parts", parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        text = text.strip()
        if text in ("", "()", "0"):
            return cls(())
        if not re.fullmatch(r"\d+(\s*,\s*\d+)*", text):
            raise DomainError(f"partition syntax is comma-separated parts, got {text!r}")
        return cls(int(p) for p in text.split(","))

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def part(self, i: int) -> int:
        """0-based part with zero padding."""
        return self.parts[i] if i < len(self.parts) else 0

    @property
    def first(self) -> int:
        return self.parts[0] if self.parts else 0

    def conjugate(self) -> "Partition":
        return Partition(sum(1 for p in self.parts if p > j) for j in range(self.first))

    def padded(self, length: int) -> tuple[int, ...]:
        if length < len(self.parts):
            raise DomainError(f"{self} has more than {length} parts")
        return self.parts + (0,) * (length - len(self.parts))

    def __str__(self):
        return ",".join(map(str, self.parts)) if self.parts else "()"


def as_partition(lam) -> Partition:
    if isinstance(lam, Partition):
        return lam
    if isinstance(lam, str):
        return Partition.parse(lam)
    if isinstance(lam, int):
        return Partition((lam,))
    return Partition(lam)


def partitions(n: int, max_part: int | None = None, max_length: int | None = None):
    """Partitions of ``n`` in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield Partition(())
        return
    if max_length == 0:
        return

    def rec(remaining, cap, length):
        if remaining == 0:
            yield ()
            return
        if max_length is not None and length == max_length:
            return
        for first in range(min(cap, remaining), 0, -1):
            for rest in rec(remaining - first, first, length + 1):
                yield (first,) + rest

    for parts in rec(n, max_part, 0):
        yield Partition(parts)


def elementary(i: int, e: int, names: Sequence[str] | None = None) -> Polynomial:
    """The i-th elementary symmetric polynomial in ``e`` variables."""
    if e < 1:
        raise DomainError("need at least one variable")
    names = tuple(names) if names is not None else default_names(e)
    if i < 0 or i > e:
        return Polynomial.zero(names)
    terms = {}
    for exp in monomials_of_degree(e, i):
        if max(exp, default=0) <= 1:
            terms[exp] = 1
    return Polynomial(terms, names)


def _det_poly(matrix: list[list[Polynomial]], zero: Polynomial) -> Polynomial:
    """Determinant by Laplace expansion along rows, memoized on column sets."""
    n = len(matrix)
    memo: dict[tuple[int, frozenset], Polynomial] = {}

    def minor(row: int, cols: frozenset) -> Polynomial:
        if row == n:
            return zero + 1
        key = (row, cols)
        if key in memo:
            return memo[key]
        total = zero
        ordered = sorted(cols)
        for pos, c in enumerate(ordered):
            entry = matrix[row][c]
            if entry.is_zero():
                continue
            sub = minor(row + 1, cols - {c})
            if sub.is_zero():
                continue
            term = entry * sub
            total = total - term if pos % 2 else total + term
        memo[key] = total
        return total

    return minor(0, frozenset(range(n)))


@lru_cache(maxsize=4096)
def _schur_cached(parts: tuple[int, ...], e: int, names: tuple[str, ...]) -> Polynomial:
    n = len(parts)
    zero = Polynomial.zero(names)
    if n == 0:
        return zero + 1
    if parts[0] > e:
        return zero
    c = [elementary(k, e, names) for k in range(e + 1)]

    def entry(i, j):
        k = parts[i] + j - i
        return c[k] if 0 <= k <= e else zero

    matrix = [[entry(i, j) for j in range(n)] for i in range(n)]
    return _det_poly(matrix, zero)


def schur(lam, e: int, names: Sequence[str] | None = None) -> Polynomial:
    """Schur polynomial ``det(c_{lambda_i + j - i})`` in ``e`` variables.

    The cache is keyed on immutable inputs and returns immutable values, so
    results are identical with or without it.
    """
    if e < 1:
        raise DomainError("need at least one variable")
    lam = as_partition(lam)
    names = tuple(names) if names is not None else default_names(e)
    if len(names) != e:
        raise DomainError(f"{len(names)} names for {e} variables")
    return _schur_cached(lam.parts, e, names)


def derived_schur(lam, e: int, i: int, names: Sequence[str] | None = None) -> Polynomial:
    """``s_lambda^{[i]}``: the i-th derived polynomial of ``schur(lam, e)``."""
    return derived(schur(lam, e, names), i)


def one_box_removals(lam) -> list[tuple[int, Partition]]:
    """Pairs ``(row, mu)`` with ``mu`` obtained by deleting a box in ``row`` (1-based)."""
    lam = as_partition(lam)
    out = []
    for i, p in enumerate(lam.parts):
        nxt = lam.part(i + 1)
        if p > nxt:
            parts = list(lam.parts)
            parts[i] -= 1
            out.append((i + 1, Partition(parts)))
    return out


def one_box_expansion(lam, e: int) -> "SchurExpansion":
    """First derived Schur polynomial as ``sum (e - lambda_i + i) s_mu``.

    The sum runs over partitions ``mu`` obtained from ``lambda`` by removing a
    box from row ``i``.
    """
    lam = as_partition(lam)
    coeffs = {}
    if lam.first <= e:
        for row, mu in one_box_removals(lam):
            c = e - lam.part(row - 1) + row
            if c:
                coeffs[(mu,)] = Fraction(c)
    return SchurExpansion(coeffs, (e,))


class SchurExpansion:
    """Finite linear combination of products of Schur polynomials.

    Keys are tuples of partitions, one per variable block; for a single
    block, plain partitions may be used for lookups.  ``blocks`` lists the
    block sizes ``(e_1, ..., e_r)``.
    """

    __slots__ = ("_coeffs", "_blocks", "_names")

    def __init__(self, coefficients: Mapping, blocks: Sequence[int], names: Sequence[str] | None = None):
        blocks = tuple(int(b) for b in blocks)
        store = {}
        for key, c in coefficients.items():
            key = self._key(key, len(blocks))
            c = as_fraction(c)
            for lam, e in zip(key, blocks):
                if lam.first > e:
                    raise DomainError(f"partition {lam} has first part above {e}")
            if c:
                store[key] = store.get(key, 0) + c
        self._coeffs = {k: v for k, v in store.items() if v}
        self._blocks = blocks
        self._names = tuple(names) if names is not None else default_names(sum(blocks))

    @staticmethod
    def _key(key, r):
        if isinstance(key, (Partition, int, str)):
            key = (as_partition(key),)
        elif r == 1 and (not key or not isinstance(key[0], (Partition, tuple, list))):
            key = (as_partition(key),)
        key = tuple(as_partition(k) for k in key)
        if len(key) != r:
            raise DomainError(f"expected {r} partitions per key, got {len(key)}")
        return key

    @property
    def blocks(self):
        return self._blocks

    @property
    def e(self) -> int:
        if len(self._blocks) != 1:
            raise DomainError("ambient e is defined for a single block only")
        return self._blocks[0]

    @property
    def coefficients(self) -> dict:
        return dict(self._coeffs)

    def items(self):
        return sorted(self._coeffs.items(), reverse=True)

    def single(self) -> dict[Partition, Fraction]:
        """Coefficients keyed by a bare partition (single block only)."""
        self.e
        return {k[0]: v for k, v in self._coeffs.items()}

    def __getitem__(self, key):
        return self._coeffs.get(self._key(key, len(self._blocks)), Fraction(0))

    def __len__(self):
        return len(self._coeffs)

    def __eq__(self, other):
        if isinstance(other, SchurExpansion):
            return self._blocks == other._blocks and self._coeffs == other._coeffs
        if isinstance(other, Mapping):
            try:
                return self == SchurExpansion(other, self._blocks)
            except DomainError:
                return False
        return NotImplemented

    def is_positive(self) -> bool:
        return all(c >= 0 for c in self._coeffs.values())

    def negative_terms(self):
        return [(k, c) for k, c in self.items() if c < 0]

    def to_polynomial(self) -> Polynomial:
        return sum(
            (product_of_schurs(key, self._blocks, self._names).scale(c) for key, c in self.items()),
            Polynomial.zero(self._names, self._blocks),
        )

    def __repr__(self):
        body = ", ".join(f"{'|'.join(map(str, k))}: {c}" for k, c in self.items())
        return f"SchurExpansion({{{body}}}, blocks={self._blocks})"


def product_of_schurs(lams: Sequence, blocks: Sequence[int], names: Sequence[str] | None = None) -> Polynomial:
    """``s_{lam_1}(x_1) ... s_{lam_r}(x_r)``, one partition per variable block."""
    blocks = tuple(blocks)
    names = tuple(names) if names is not None else default_names(sum(blocks))
    result = Polynomial.constant(1, names, blocks)
    start = 0
    for lam, e in zip(lams, blocks):
        local = schur(lam, e, names[start:start + e])
        result = result * local.embed(names, blocks)
        start += e
    return result


def symmetry_witness(f: Polynomial):
    """First adjacent transposition (within a block) that changes ``f``, or None."""
    for rng in f.block_ranges():
        for i in range(rng.start, rng.stop - 1):
            for exp, c in f.terms.items():
                swapped = exp[:i] + (exp[i + 1], exp[i]) + exp[i + 2:]
                if f.coefficient(swapped) != c:
                    return (i, i + 1)
    return None


def schur_expand(f: Polynomial) -> SchurExpansion:
    """Expand a block-symmetric polynomial in products of Schur polynomials.

    Repeatedly removes the lexicographically leading monomial ``x^a``: within
    each block ``a`` is a partition ``nu`` and the Schur polynomial with
    partition ``nu`` conjugated is the unique basis element with that leading
    monomial.

    Raises:
        NotSymmetricError: with the offending transposition of variable
            indices (0-based).
    """
    witness = symmetry_witness(f)
    if witness is not None:
        raise NotSymmetricError(witness)
    blocks = f.blocks
    ranges = f.block_ranges()
    coeffs: dict[tuple[Partition, ...], Fraction] = {}
    rest = f
    while not rest.is_zero():
        lead, c = max(rest.terms.items())
        key = tuple(Partition(sorted(lead[r.start:r.stop], reverse=True)).conjugate() for r in ranges)
        coeffs[key] = c
        rest = rest - product_of_schurs(key, blocks, f.variables).scale(c)
        if rest.coefficient(lead):
            raise ImplementationError(f"basis element {key} does not have leading monomial {lead} with coefficient 1")
    return SchurExpansion(coeffs, blocks, f.variables)


def schur_positive(f: Polynomial) -> tuple[bool, SchurExpansion]:
    exp = schur_expand(f)
    return exp.is_positive(), exp


# Schubert polynomials


@dataclass(frozen=True)
class PermutationWord:
    """An e-permutation: distinct positive integers increasing inside each
    segment of the descent profile ``0 = e_0 < e_1 < ... < e_k = len(word)``.

    Without a profile every position is its own segment, so any word of
    distinct integers is accepted.
    """

    word: tuple[int, ...]
    profile: tuple[int, ...]

    def __init__(self, word: Iterable[int], profile: Iterable[int] | None = None):
        word = tuple(int(a) for a in word)
        if any(a < 1 for a in word) or len(set(word)) != len(word):
            raise DomainError(f"{word} is not a sequence of distinct positive integers")
        profile = tuple(profile) if profile is not None else tuple(range(len(word) + 1))
        if profile[0] != 0 or profile[-1] != len(word) or any(a >= b for a, b in zip(profile, profile[1:])):
            raise DomainError(f"descent profile {profile} invalid for a word of length {len(word)}")
        for lo, hi in zip(profile, profile[1:]):
            seg = word[lo:hi]
            if any(a > b for a, b in zip(seg, seg[1:])):
                raise DomainError(f"{word} is not increasing on positions {lo + 1}..{hi}")
        object.__setattr__(self, "word", word)
        object.__setattr__(self, "profile", profile)

    @classmethod
    def parse(cls, word: str, profile: str | None = None) -> "PermutationWord":
        if not re.fullmatch(r"\s*\d+(\s+\d+)*\s*", word):
            raise DomainError(f"permutation word syntax is space-separated integers, got {word!r}")
        prof = None
        if profile is not None:
            if not re.fullmatch(r"\s*\d+(\s*<\s*\d+)*\s*", profile):
                raise DomainError(f"descent profile syntax is 0<e1<...<e, got {profile!r}")
            prof = [int(p) for p in profile.split("<")]
        return cls([int(a) for a in word.split()], prof)

    @property
    def e(self) -> int:
        return len(self.word)

    def padded(self) -> tuple[int, ...]:
        """Full permutation of ``1..max(w)`` with missing values appended in order."""
        m = max(self.word, default=0)
        present = set(self.word)
        return self.word + tuple(a for a in range(1, m + 1) if a not in present)

    def __str__(self):
        return " ".join(map(str, self.word))


def inversion_length(w) -> int:
    perm = w.padded() if isinstance(w, PermutationWord) else tuple(w)
    return sum(1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j])


def divided_difference(f: Polynomial, i: int) -> Polynomial:
    """``(f - s_i f) / (x_i - x_{i+1})`` for 0-based adjacent variables i, i+1."""
    store: dict[tuple[int, ...], Fraction] = {}
    for exp, c in f.terms.items():
        a, b = exp[i], exp[i + 1]
        if a == b:
            continue
        sign = 1 if a > b else -1
        lo, hi = min(a, b), max(a, b)
        # (x^hi y^lo - x^lo y^hi) / (x - y) = (xy)^lo * sum_{k} x^(hi-lo-1-k) y^k
        for k in range(hi - lo):
            new = list(exp)
            new[i] = lo + hi - lo - 1 - k
            new[i + 1] = lo + k
            key = tuple(new)
            store[key] = store.get(key, 0) + sign * c
    return Polynomial({k: v for k, v in store.items() if v}, f.variables, f.blocks)


@lru_cache(maxsize=4096)
def _schubert_perm(perm: tuple[int, ...]) -> Polynomial:
    m = len(perm)
    names = default_names(m)
    if perm == tuple(range(m, 0, -1)):
        return Polynomial({tuple(range(m - 1, -1, -1)): 1}, names)
    # an ascent at position i: S_w = d_i S_{w s_i} with w s_i one inversion longer
    i = next(k for k in range(m - 1) if perm[k] < perm[k + 1])
    longer = perm[:i] + (perm[i + 1], perm[i]) + perm[i + 2:]
    return divided_difference(_schubert_perm(longer), i)


def schubert(w, e: int | None = None, names: Sequence[str] | None = None) -> Polynomial:
    """Schubert polynomial of an e-permutation, as a polynomial in ``e`` variables.

    The word is padded to a permutation of ``1..max(w)``; divided differences
    descend from the top class ``x1^(m-1) x2^(m-2) ... x_{m-1}``.
    """
    if not isinstance(w, PermutationWord):
        w = PermutationWord(w)
    e = w.e if e is None else e
    if e < w.e:
        raise DomainError(f"word of length {w.e} needs at least {w.e} variables")
    perm = w.padded()
    full = _schubert_perm(perm) if perm else Polynomial.constant(1)
    names = tuple(names) if names is not None else default_names(e)
    store = {}
    for exp, c in full.terms.items():
        if any(exp[e:]):
            raise DomainError(f"Schubert polynomial of {w} involves more than {e} variables")
        key = tuple(exp[:e]) + (0,) * (e - len(exp))
        store[key] = c
    return Polynomial(store, names)


def grassmannian_word(lam, e: int) -> PermutationWord:
    """``w_lambda``: increasing listing of ``{1..e+n} minus {e+i-lambda_i}``."""
    lam = as_partition(lam)
    if lam.first > e:
        raise DomainError(f"w_lambda needs lambda_1 <= e, got lambda = {lam}, e = {e}")
    n = len(lam)
    removed = {e + i - lam.part(i - 1) for i in range(1, n + 1)}
    word = [a for a in range(1, e + n + 1) if a not in removed]
    return PermutationWord(word, (0, e))


def monomial_symmetric(nu, e: int, names=None) -> Polynomial:
    """Sum of the distinct permutations of ``x^nu`` in ``e`` variables."""
    nu = as_partition(nu)
    names = tuple(names) if names is not None else default_names(e)
    base = nu.padded(e)
    return Polynomial({p: 1 for p in set(permutations(base))}, names)
