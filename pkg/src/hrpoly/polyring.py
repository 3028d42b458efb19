"""Sparse multivariate polynomials with exact rational coefficients.

A :class:`Polynomial` carries an ordered tuple of variable names grouped into
consecutive blocks, and a map from exponent tuples to nonzero
:class:`~fractions.Fraction` coefficients.  Values are immutable.

Besides ring arithmetic the module provides the operators used throughout the
package: derived polynomials (Taylor coefficients of a simultaneous shift of
all variables), block derivatives, differential operators in the block
derivatives, truncation and the dual transform
``x^a -> x^(k-a)/(k-a)!`` relative to a bound ``k``.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from itertools import product
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence

from .errors import DomainError, PolynomialSyntaxError, StructureError

NEG_INF = -math.inf
"""Degree reported for the zero polynomial."""

_NAME = re.compile(r"[a-z][a-z0-9_]*")


def as_fraction(value) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction.

    Floats are rejected so no rounding can slip into a computation.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise DomainError("booleans are not coefficients")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if not re.fullmatch(r"[+-]?\d+(/\d+)?", text):
            raise DomainError(f"not an exact rational: {value!r}")
        return Fraction(text)
    raise DomainError(f"unsupported coefficient type {type(value).__name__}; use an int, Fraction or \"p/q\" string")


def natural_key(name: str):
    """Sort key putting ``x2`` before ``x10``."""
    return [int(tok) if tok.isdigit() else tok for tok in re.split(r"(\d+)", name)]


def default_names(count: int, stem: str = "x") -> tuple[str, ...]:
    return tuple(f"{stem}{i + 1}" for i in range(count))


class Polynomial:
    """Immutable sparse polynomial over the rationals.

    Args:
        terms: mapping from exponent tuples to coefficients; zero
            coefficients are dropped.
        variables: variable names in declaration order.
        blocks: sizes of consecutive variable blocks.  Defaults to a single
            block holding every variable.
    """

    __slots__ = ("_variables", "_blocks", "_terms", "_hash")

    def __init__(self, terms: Mapping | Iterable = (), variables: Sequence[str] = (), blocks: Sequence[int] | None = None):
        variables = tuple(variables)
        if len(set(variables)) != len(variables):
            raise DomainError(f"duplicate variable names in {variables}")
        if blocks is None:
            blocks = (len(variables),) if variables else ()
        blocks = tuple(int(b) for b in blocks)
        if any(b <= 0 for b in blocks) or sum(blocks) != len(variables):
            raise DomainError(f"blocks {blocks} do not partition {len(variables)} variables")
        items = terms.items() if isinstance(terms, Mapping) else terms
        store: dict[tuple[int, ...], Fraction] = {}
        n = len(variables)
        for exp, coeff in items:
            exp = tuple(int(a) for a in exp)
            if len(exp) != n or any(a < 0 for a in exp):
                raise DomainError(f"exponent {exp} invalid for {n} variables")
            c = store.get(exp, Fraction(0)) + as_fraction(coeff)
            if c:
                store[exp] = c
            else:
                store.pop(exp, None)
        self._variables = variables
        self._blocks = blocks
        self._terms = store
        self._hash = None

    @classmethod
    def _raw(cls, store, variables, blocks):
        # Trusted constructor: store is already normalized.
        obj = cls.__new__(cls)
        obj._variables = variables
        obj._blocks = blocks
        obj._terms = store
        obj._hash = None
        return obj

    # construction helpers

    @classmethod
    def zero(cls, variables: Sequence[str] = (), blocks=None) -> "Polynomial":
        return cls({}, variables, blocks)

    @classmethod
    def constant(cls, c, variables: Sequence[str] = (), blocks=None) -> "Polynomial":
        variables = tuple(variables)
        return cls({(0,) * len(variables): c}, variables, blocks)

    @classmethod
    def variable(cls, name_or_index, variables: Sequence[str], blocks=None) -> "Polynomial":
        variables = tuple(variables)
        i = variables.index(name_or_index) if isinstance(name_or_index, str) else int(name_or_index)
        exp = tuple(int(j == i) for j in range(len(variables)))
        return cls({exp: 1}, variables, blocks)

    @classmethod
    def gens(cls, variables: Sequence[str], blocks=None) -> tuple["Polynomial", ...]:
        return tuple(cls.variable(i, variables, blocks) for i in range(len(variables)))

    def like(self, terms) -> "Polynomial":
        """A polynomial with the same structure as ``self``."""
        return Polynomial(terms, self._variables, self._blocks)

    # structure

    @property
    def variables(self) -> tuple[str, ...]:
        return self._variables

    @property
    def blocks(self) -> tuple[int, ...]:
        return self._blocks

    @property
    def nvars(self) -> int:
        return len(self._variables)

    @property
    def terms(self) -> Mapping[tuple[int, ...], Fraction]:
        return MappingProxyType(self._terms)

    def block_ranges(self) -> list[range]:
        out, start = [], 0
        for size in self._blocks:
            out.append(range(start, start + size))
            start += size
        return out

    def same_structure(self, other: "Polynomial") -> bool:
        return self._variables == other._variables and self._blocks == other._blocks

    def _check(self, other: "Polynomial"):
        if not self.same_structure(other):
            raise StructureError(
                f"structure mismatch: {self._variables}/{self._blocks} vs {other._variables}/{other._blocks}"
            )

    # queries

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def coefficient(self, exp) -> Fraction:
        return self._terms.get(tuple(exp), Fraction(0))

    def monomials(self, descending: bool = True) -> list[tuple[tuple[int, ...], Fraction]]:
        """Terms sorted lexicographically on exponents."""
        return sorted(self._terms.items(), reverse=descending)

    @property
    def degree(self):
        if not self._terms:
            return NEG_INF
        return max(sum(e) for e in self._terms)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self._terms}) <= 1

    def multidegree(self) -> tuple[int, ...]:
        """Componentwise maximum exponent (all zeros for the zero polynomial)."""
        out = [0] * self.nvars
        for exp in self._terms:
            out = [max(a, b) for a, b in zip(out, exp)]
        return tuple(out)

    def homogeneous_part(self, k: int) -> "Polynomial":
        return Polynomial._raw({e: c for e, c in self._terms.items() if sum(e) == k}, self._variables, self._blocks)

    def constant_term(self) -> Fraction:
        return self._terms.get((0,) * self.nvars, Fraction(0))

    # arithmetic

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return Polynomial.constant(other, self._variables, self._blocks)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        store = dict(self._terms)
        for e, c in other._terms.items():
            v = store.get(e, 0) + c
            if v:
                store[e] = v
            else:
                store.pop(e, None)
        return Polynomial._raw(store, self._variables, self._blocks)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw({e: -c for e, c in self._terms.items()}, self._variables, self._blocks)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def scale(self, c) -> "Polynomial":
        c = as_fraction(c)
        if not c:
            return Polynomial._raw({}, self._variables, self._blocks)
        return Polynomial._raw({e: v * c for e, v in self._terms.items()}, self._variables, self._blocks)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check(other)
        store: dict[tuple[int, ...], Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                store[e] = store.get(e, 0) + c1 * c2
        return Polynomial._raw({e: c for e, c in store.items() if c}, self._variables, self._blocks)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(1 / Fraction(other))
        return NotImplemented

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise DomainError("polynomial powers need a nonnegative integer exponent")
        result = Polynomial.constant(1, self._variables, self._blocks)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.same_structure(other) and self._terms == other._terms
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self._terms == ({(0,) * self.nvars: Fraction(other)} if other else {})
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._variables, self._blocks, frozenset(self._terms.items())))
        return self._hash

    def __call__(self, *point):
        if len(point) == 1 and isinstance(point[0], (list, tuple)):
            point = point[0]
        return evaluate(self, point)

    def __str__(self):
        return serialize(self)

    def __repr__(self):
        return f"Polynomial({serialize(self)!r}, variables={self._variables}, blocks={self._blocks})"

    # structural transforms

    def embed(self, variables: Sequence[str], blocks=None) -> "Polynomial":
        """Reinterpret in a ring whose variables include all of ours (by name)."""
        variables = tuple(variables)
        try:
            index = [variables.index(v) for v in self._variables]
        except ValueError as exc:
            raise StructureError(f"cannot embed {self._variables} into {variables}") from exc
        store = {}
        for exp, c in self._terms.items():
            new = [0] * len(variables)
            for i, a in zip(index, exp):
                new[i] = a
            store[tuple(new)] = c
        return Polynomial(store, variables, blocks)

    def with_blocks(self, blocks) -> "Polynomial":
        return Polynomial._raw(dict(self._terms), self._variables, Polynomial((), self._variables, blocks).blocks)

    def rename(self, variables: Sequence[str]) -> "Polynomial":
        variables = tuple(variables)
        if len(variables) != self.nvars:
            raise StructureError("renaming must keep the variable count")
        return Polynomial(dict(self._terms), variables, self._blocks)


def arith(f: Polynomial, g: Polynomial | None, kind: str, c=None) -> Polynomial:
    """Dispatch ``add``, ``sub``, ``mul`` or ``scale`` (``c`` is the scalar)."""
    if kind == "add":
        return f + f._coerce(g)
    if kind == "sub":
        return f - f._coerce(g)
    if kind == "mul":
        return f * f._coerce(g)
    if kind == "scale":
        return f.scale(c)
    raise DomainError(f"unknown arithmetic kind {kind!r}")


# calculus


def derived(f: Polynomial, i: int) -> Polynomial:
    """Coefficient of ``t^i`` in ``f(x1 + t, ..., xn + t)``.

    Each monomial ``x^a`` contributes ``prod binom(a_j, b_j) x^(a-b)`` for
    every ``b <= a`` with ``|b| = i``.
    """
    if i < 0:
        raise DomainError("derived order must be nonnegative")
    if i == 0:
        return f
    store: dict[tuple[int, ...], Fraction] = {}
    for exp, c in f.terms.items():
        if sum(exp) < i:
            continue
        for drop in _bounded_compositions(exp, i):
            weight = 1
            for a, b in zip(exp, drop):
                weight *= math.comb(a, b)
            new = tuple(a - b for a, b in zip(exp, drop))
            store[new] = store.get(new, 0) + c * weight
    return Polynomial._raw({e: v for e, v in store.items() if v}, f.variables, f.blocks)


def _bounded_compositions(bound: Sequence[int], total: int):
    """All ``b`` with ``0 <= b <= bound`` componentwise and ``sum(b) == total``."""
    n = len(bound)
    suffix = [0] * (n + 1)
    for j in range(n - 1, -1, -1):
        suffix[j] = suffix[j + 1] + bound[j]

    def rec(j, remaining, acc):
        if j == n:
            if remaining == 0:
                yield tuple(acc)
            return
        lo = max(0, remaining - suffix[j + 1])
        for b in range(lo, min(bound[j], remaining) + 1):
            acc.append(b)
            yield from rec(j + 1, remaining - b, acc)
            acc.pop()

    yield from rec(0, total, [])


def partial(f: Polynomial, var: int) -> Polynomial:
    """Ordinary partial derivative with respect to variable index ``var``."""
    store = {}
    for exp, c in f.terms.items():
        a = exp[var]
        if a:
            new = exp[:var] + (a - 1,) + exp[var + 1:]
            store[new] = c * a
    return Polynomial._raw(store, f.variables, f.blocks)


def block_derive(f: Polynomial, block: int, order: int = 1) -> Polynomial:
    """Apply ``order`` times the sum of partial derivatives over one block.

    ``block`` is a 0-based block index.
    """
    ranges = f.block_ranges()
    if not 0 <= block < len(ranges):
        raise DomainError(f"block index {block} out of range for {len(ranges)} blocks")
    if order < 0:
        raise DomainError("derivative order must be nonnegative")
    result = f
    for _ in range(order):
        if result.is_zero():
            break
        acc = Polynomial.zero(f.variables, f.blocks)
        for var in ranges[block]:
            acc = acc + partial(result, var)
        result = acc
    return result


def diff_operator(v: Polynomial, f: Polynomial) -> Polynomial:
    """``v(d_1, ..., d_r) f`` where ``d_i`` is the block derivative of block i."""
    if v.nvars != len(f.blocks):
        raise StructureError(f"operator has {v.nvars} slots but f has {len(f.blocks)} blocks")
    result = Polynomial.zero(f.variables, f.blocks)
    cache: dict[tuple[int, ...], Polynomial] = {(0,) * v.nvars: f}

    def apply(exp):
        if exp in cache:
            return cache[exp]
        # peel one derivative off the last nonzero slot
        j = max(k for k, a in enumerate(exp) if a)
        prev = exp[:j] + (exp[j] - 1,) + exp[j + 1:]
        out = block_derive(apply(prev), j, 1)
        cache[exp] = out
        return out

    for exp, c in sorted(v.terms.items()):
        result = result + apply(exp).scale(c)
    return result


def directional_derive(f: Polynomial, v: Sequence) -> Polynomial:
    """``sum_j v_j df/dx_j``."""
    if len(v) != f.nvars:
        raise StructureError(f"direction has length {len(v)}, expected {f.nvars}")
    result = Polynomial.zero(f.variables, f.blocks)
    for j, vj in enumerate(v):
        vj = as_fraction(vj)
        if vj:
            result = result + partial(f, j).scale(vj)
    return result


def truncate(f: Polynomial, kappa: Sequence[int]) -> Polynomial:
    """Drop every monomial with some exponent exceeding ``kappa``."""
    kappa = tuple(kappa)
    if len(kappa) != f.nvars:
        raise StructureError(f"bound has length {len(kappa)}, expected {f.nvars}")
    store = {e: c for e, c in f.terms.items() if all(a <= k for a, k in zip(e, kappa))}
    return Polynomial._raw(store, f.variables, f.blocks)


def dual_transform(f: Polynomial, kappa: Sequence[int]) -> Polynomial:
    """``sum c_a x^(k-a) / (k-a)!`` for ``f = sum c_a x^a``.

    This is ``x^k f(1/x)`` followed by the normalization ``x^b -> x^b / b!``.
    """
    kappa = tuple(int(k) for k in kappa)
    if len(kappa) != f.nvars:
        raise StructureError(f"bound has length {len(kappa)}, expected {f.nvars}")
    store = {}
    for exp, c in f.terms.items():
        rest = tuple(k - a for k, a in zip(kappa, exp))
        if any(r < 0 for r in rest):
            raise DomainError(f"bound {kappa} does not dominate exponent {exp}")
        store[rest] = c / _factorial_of(rest)
    return Polynomial._raw(store, f.variables, f.blocks)


def _factorial_of(exp: Sequence[int]) -> int:
    out = 1
    for a in exp:
        out *= math.factorial(a)
    return out


def factorial_of(exp: Sequence[int]) -> int:
    """``a! = prod a_j!`` for a multi-index."""
    return _factorial_of(exp)


def substitute_linear(f: Polynomial, A: Sequence[Sequence], names: Sequence[str] | None = None) -> Polynomial:
    """``(fA)(y) = f(A y)`` for an ``n x m`` matrix A.

    The result lives in ``m`` fresh variables (default ``t1..tm``).
    """
    rows = [[as_fraction(a) for a in row] for row in A]
    if len(rows) != f.nvars:
        raise StructureError(f"matrix has {len(rows)} rows, expected {f.nvars}")
    m = len(rows[0]) if rows else 0
    if any(len(r) != m for r in rows):
        raise StructureError("ragged substitution matrix")
    names = tuple(names) if names is not None else default_names(m, "t")
    if len(names) != m:
        raise StructureError("one name per matrix column is required")
    images = [Polynomial({tuple(int(k == j) for k in range(m)): a for j, a in enumerate(row) if a}, names) for row in rows]
    return substitute(f, images, names)


def substitute(f: Polynomial, images: Sequence[Polynomial], variables=None, blocks=None, kappa=None) -> Polynomial:
    """Replace the j-th variable of ``f`` by ``images[j]``.

    All images must share one structure.  When ``kappa`` is given every
    intermediate product is truncated to it, which computes the image in the
    monomial quotient ring ``Q[y]/(y_i^(kappa_i + 1))`` without blowup.
    """
    if len(images) != f.nvars:
        raise StructureError(f"{len(images)} images for {f.nvars} variables")
    if images:
        variables, blocks = images[0].variables, images[0].blocks
        for g in images:
            images[0]._check(g)
    else:
        variables = tuple(variables or ())
    cut = (lambda p: truncate(p, kappa)) if kappa is not None else (lambda p: p)
    one = Polynomial.constant(1, variables, blocks)
    powers: list[list[Polynomial]] = [[one] for _ in images]

    def power(j, a):
        table = powers[j]
        while len(table) <= a:
            table.append(cut(table[-1] * images[j]))
        return table[a]

    result = Polynomial.zero(variables, blocks)
    for exp, c in sorted(f.terms.items()):
        term = one.scale(c)
        for j, a in enumerate(exp):
            if a:
                term = cut(term * power(j, a))
                if term.is_zero():
                    break
        result = result + term
    return result


def evaluate(f: Polynomial, point: Sequence) -> Fraction:
    if len(point) != f.nvars:
        raise StructureError(f"point has length {len(point)}, expected {f.nvars}")
    pt = [as_fraction(p) for p in point]
    total = Fraction(0)
    for exp, c in f.terms.items():
        term = c
        for x, a in zip(pt, exp):
            if a:
                term *= x**a
        total += term
    return total


def monomials_of_degree(n: int, k: int):
    """Exponent tuples of total degree ``k`` in ``n`` variables, descending lex."""
    if n == 0:
        if k == 0:
            yield ()
        return
    for first in range(k, -1, -1):
        for rest in monomials_of_degree(n - 1, k - first):
            yield (first,) + rest


def exponent_box(kappa: Sequence[int]):
    """All exponents ``0 <= a <= kappa``."""
    return product(*(range(k + 1) for k in kappa))


# text format


def _format_coefficient(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def serialize(f: Polynomial) -> str:
    """Canonical text: descending lexicographic monomials, reduced rationals."""
    if f.is_zero():
        return "0"
    parts = []
    for exp, c in f.monomials():
        factors = []
        for name, a in zip(f.variables, exp):
            if a == 1:
                factors.append(name)
            elif a > 1:
                factors.append(f"{name}^{a}")
        mag = abs(c)
        if not factors:
            body = _format_coefficient(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = _format_coefficient(mag) + "*" + "*".join(factors)
        sign = "-" if c < 0 else "+"
        parts.append(("-" if c < 0 else "") + body if not parts else sign + body)
    return "".join(parts)


_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<name>[a-z][a-z0-9_]*)|(?P<op>[-+*/^]))")


def _tokenize(text: str):
    pos = 0
    out = []
    stripped_end = len(text.rstrip())
    while pos < stripped_end:
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise PolynomialSyntaxError(f"unexpected character {text[pos]!r}", pos)
        kind = m.lastgroup
        start = m.start(kind)
        out.append((kind, m.group(kind), start))
        pos = m.end()
    out.append(("end", "", len(text)))
    return out


def parse_polynomial(text: str, variables: Sequence[str] | None = None, blocks=None) -> Polynomial:
    """Parse the polynomial text format.

    Grammar: signed terms joined by ``+``/``-``; a term is ``*``-separated
    factors, each either a rational ``p`` or ``p/q`` or a power ``name^k``.
    Variable names match ``[a-z][a-z0-9_]*``; whitespace is ignored.

    Without ``variables`` the ring is spanned by the names that occur,
    ordered naturally (``x2`` before ``x10``).
    """
    tokens = _tokenize(text)
    k = 0

    def peek():
        return tokens[k]

    def take(kind=None, value=None):
        nonlocal k
        tok = tokens[k]
        if (kind and tok[0] != kind) or (value and tok[1] != value):
            expected = value or kind
            raise PolynomialSyntaxError(f"expected {expected}, found {tok[1] or 'end of input'!r}", tok[2])
        k += 1
        return tok

    def integer():
        return int(take("num")[1])

    raw_terms = []

    def factor(coeff, powers):
        tok = peek()
        if tok[0] == "num":
            num = integer()
            if peek()[:2] == ("op", "/"):
                take("op", "/")
                den_tok = peek()
                den = integer()
                if den == 0:
                    raise PolynomialSyntaxError("zero denominator", den_tok[2])
                return coeff * Fraction(num, den)
            return coeff * num
        if tok[0] == "name":
            take()
            exponent = 1
            if peek()[:2] == ("op", "^"):
                take("op", "^")
                exponent = integer()
            powers[tok[1]] = powers.get(tok[1], 0) + exponent
            return coeff
        raise PolynomialSyntaxError(f"expected a number or variable, found {tok[1] or 'end of input'!r}", tok[2])

    def term(sign):
        coeff = Fraction(sign)
        powers: dict[str, int] = {}
        coeff = factor(coeff, powers)
        while peek()[:2] == ("op", "*"):
            take("op", "*")
            coeff = factor(coeff, powers)
        raw_terms.append((coeff, powers))

    sign = 1
    if peek()[0] == "op" and peek()[1] in "+-":
        sign = -1 if take()[1] == "-" else 1
    term(sign)
    while peek()[0] != "end":
        tok = peek()
        if tok[0] == "op" and tok[1] in "+-":
            take()
            term(-1 if tok[1] == "-" else 1)
        else:
            raise PolynomialSyntaxError(f"unexpected token {tok[1]!r}", tok[2])

    seen = {name for _, powers in raw_terms for name in powers}
    if variables is None:
        variables = tuple(sorted(seen, key=natural_key))
    else:
        variables = tuple(variables)
        for name in variables:
            if not _NAME.fullmatch(name):
                raise DomainError(f"invalid variable name {name!r}")
        unknown = seen - set(variables)
        if unknown:
            raise DomainError(f"unknown variables {sorted(unknown)}; ring has {list(variables)}")
    index = {name: i for i, name in enumerate(variables)}
    store: dict[tuple[int, ...], Fraction] = {}
    for coeff, powers in raw_terms:
        exp = [0] * len(variables)
        for name, a in powers.items():
            exp[index[name]] += a
        key = tuple(exp)
        store[key] = store.get(key, 0) + coeff
    return Polynomial(store, variables, blocks)
