"""Acceptance fixtures, runnable as a suite.

Each ``criterion_N`` returns a :class:`CriterionResult`.  ``scope="quick"``
runs every check on a reduced fixture count; ``scope="full"`` runs the
complete enumeration and additionally enforces the time budget.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product as cartesian

from . import hermitian, linalg, logconcave, lorentz, polyring, symfun, toricring
from .errors import DomainError, ImplementationError, PreconditionError
from .hermitian import GaussianQ

SCOPES = ("quick", "full")


@dataclass
class CriterionResult:
    id: int
    name: str
    passed: bool
    detail: str
    cases: int = 0
    elapsed: float = 0.0
    limit: float = 0.0
    witness: object = None
    stats: dict = field(default_factory=dict)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] criterion {self.id}: {self.name} ({self.cases} cases, {self.elapsed:.2f}s / {self.limit:g}s) {self.detail}"

    def to_json(self, timings: bool = False) -> dict:
        out = {
            "id": self.id,
            "name": self.name,
            "passed": self.passed,
            "cases": self.cases,
            "detail": self.detail,
            "witness": _jsonable(self.witness),
            "stats": {k: _jsonable(v) for k, v in sorted(self.stats.items())},
        }
        if timings:
            out["elapsed"] = round(self.elapsed, 3)
            out["limit"] = self.limit
        return out


def _jsonable(x):
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, (list, tuple)):
        return [_jsonable(y) for y in x]
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if x is None or isinstance(x, (bool, int, float, str)):
        return x
    return str(x)


class _Checker:
    """Counts cases and remembers the first failure."""

    def __init__(self):
        self.cases = 0
        self.failure = None

    def check(self, ok: bool, what, witness=None):
        self.cases += 1
        if not ok and self.failure is None:
            self.failure = (what, witness)
        return ok


def _result(cid, name, chk: _Checker, limit, start, scope, detail_ok="", stats=None):
    elapsed = time.perf_counter() - start
    passed = chk.failure is None and chk.cases > 0
    if chk.failure is not None:
        detail = f"first failure: {chk.failure[0]}"
        witness = chk.failure[1]
    elif chk.cases == 0:
        detail, witness = "no cases executed", None
    else:
        detail, witness = detail_ok, None
    if scope == "full" and elapsed > limit:
        passed = False
        detail = f"{detail}; exceeded time budget".lstrip("; ")
    return CriterionResult(cid, name, passed, detail, chk.cases, elapsed, limit, witness, stats or {})


def P(text, variables=None, blocks=None):
    return polyring.parse_polynomial(text, variables, blocks)


# 1


def criterion_1(scope="full", seed=0):
    start = time.perf_counter()
    chk = _Checker()
    f = P("x^2+3*x*y+9*y^2")
    chk.check(lorentz.is_dually_lorentzian(f).verdict, "x^2+3xy+9y^2 is dually Lorentzian")
    values = tuple(polyring.derived(f, i)((1, 0)) for i in range(3))
    chk.check(values == (1, 5, 13), "derived values at (1,0)", values)
    det = logconcave.toeplitz_determinant(values, 3, shift=1)
    chk.check(det == -5, "3x3 Toeplitz determinant", det)
    report = logconcave.is_polya_frequency(values)
    chk.check(not report.verdict, "(1,5,13) rejected as Polya frequency", report.to_json())
    chk.check(report.witness is not None and report.witness.value < 0, "negative minor witness", report.to_json())
    return _result(1, "dually Lorentzian quadratic with non-PF derived values", chk, 1.0, start, scope,
                   f"values=({', '.join(map(str, values))}), det={det}")


# 2


def criterion_2(scope="full", seed=0):
    start = time.perf_counter()
    chk = _Checker()
    f = P("x^3+2*x^2*y+4*x*y^2+8*y^3")
    chk.check(lorentz.is_dually_lorentzian(f).verdict, "cubic is dually Lorentzian")
    g = polyring.derived(f, 1) ** 2 - polyring.derived(f, 0) * polyring.derived(f, 2)
    expected = P("14*x^4+64*x^3*y+312*x^2*y^2+448*x*y^3+512*y^4")
    chk.check(g == expected, "difference polynomial", str(g))
    chk.check(logconcave.monomial_positive(g)[0], "difference is monomial-positive", str(g))
    dl = lorentz.is_dually_lorentzian(g)
    chk.check(not dl.verdict and dl.witness is not None, "difference is not dually Lorentzian", str(dl.witness))
    if dl.witness is not None:
        chk.check(lorentz.recheck_witness(polyring.dual_transform(g, g.multidegree()), dl.witness), "witness rechecks")
    return _result(2, "dually Lorentzian cubic with non-dually-Lorentzian difference", chk, 1.0, start, scope, str(g))


# 3


def _random_expansion(rng, max_weight=6, max_e=4, blocks=None):
    blocks = blocks or (rng.randint(1, max_e),)
    coeffs = {}
    for _ in range(rng.randint(1, 4)):
        key = []
        for e in blocks:
            w = rng.randint(0, max_weight // len(blocks))
            options = list(symfun.partitions(w, max_part=e)) or [symfun.Partition()]
            key.append(rng.choice(options))
        coeffs[tuple(key)] = Fraction(rng.randint(-9, 9), rng.randint(1, 4))
    return symfun.SchurExpansion(coeffs, blocks)


def criterion_3(scope="full", seed=0):
    start = time.perf_counter()
    chk = _Checker()
    s11 = symfun.schur((1, 1), 2)
    chk.check(s11 == P("x1^2+x1*x2+x2^2"), "s_(1,1) in 2 variables", str(s11))
    d = symfun.derived_schur((1, 1), 2, 1)
    chk.check(d == P("3*x1+3*x2"), "derived s_(1,1)", str(d))
    one_box = symfun.one_box_expansion((1, 1), 2).to_polynomial()
    chk.check(d == one_box, "one-box formula agrees", str(one_box))
    rng = random.Random(seed)
    count = 200 if scope == "full" else 40
    for k in range(count):
        blocks = None if k % 5 else (rng.randint(1, 2), rng.randint(1, 2))
        exp = _random_expansion(rng, blocks=blocks)
        poly = exp.to_polynomial()
        try:
            back = symfun.schur_expand(poly)
        except ImplementationError as exc:
            chk.check(False, f"round trip #{k}", {"expected": repr(exp), "error": str(exc)})
            continue
        chk.check(back == exp, f"round trip #{k}", {"expected": repr(exp), "got": repr(back)})
    return _result(3, "Schur convention and expansion round trip", chk, 30.0, start, scope)


# 4


def criterion_4(scope="full", seed=0):
    start = time.perf_counter()
    chk = _Checker()
    top = 4 if scope == "full" else 3
    for s in (1, 2, 3):
        model = toricring.ToricModel((3,) * s)
        kappa = model.kappa
        xis = [model.xi(i) for i in range(s)]
        names = polyring.default_names(s, "y")
        for deg in range(top + 1):
            for alpha in polyring.monomials_of_degree(s, deg):
                g = polyring.Polynomial({alpha: 1}, names)
                gamma = toricring.reduce(polyring.substitute(g, [x.poly for x in xis], kappa=kappa), model)
                lhs = toricring.volume_polynomial(gamma, xis, names)
                rhs = polyring.dual_transform(polyring.truncate(g, kappa), kappa)
                chk.check(lhs == rhs, f"monomial {alpha}", {"vol": str(lhs), "dual": str(rhs)})
    return _result(4, "volume polynomial equals dual of truncation", chk, 30.0, start, scope)


# 5


def _independent(cols, n):
    return not cols or linalg.rank(linalg.from_columns(cols, n)) == len(cols)


def _structured_instance(rng, n, dW):
    """H = B* D B with the W-directions negative; iota spans B^-1 of those directions."""
    while True:
        B = hermitian.random_matrix(rng, n, n, bound=2)
        if linalg.rank(B) == n:
            break
    diag = [GaussianQ(rng.choice((1, 1, 2, 0, -1))) for _ in range(n - dW)] + [GaussianQ(-rng.randint(1, 2)) for _ in range(dW)]
    D = [[diag[i] if i == j else GaussianQ(0) for j in range(n)] for i in range(n)]
    H = linalg.congruent(D, B)
    Binv = linalg.inverse(B)
    cols = linalg.columns(Binv)[n - dW:]
    if rng.random() < 0.5:
        # perturb iota inside a larger space so the perp changes
        extra = linalg.columns(Binv)[0]
        cols = [[c + GaussianQ(Fraction(rng.randint(-1, 1), 3)) * x for c, x in zip(col, extra)] for col in cols]
    return H, cols


def _random_sylvester(rng, chk):
    n = rng.randint(1, 6)
    A = hermitian.random_hermitian(rng, n, real=rng.random() < 0.3).rows()
    while True:
        B = hermitian.random_matrix(rng, n, n, bound=2)
        if linalg.rank(B) == n:
            break
    before, after = linalg.inertia(A), linalg.inertia(linalg.congruent(A, B))
    chk.check(before == after, "Sylvester invariance", {"A": A, "B": B})


def criterion_5(scope="full", seed=0):
    start = time.perf_counter()
    chk = _Checker()
    rng = random.Random(seed)
    rounds = 1000 if scope == "full" else 100
    for _ in range(50 if scope == "full" else 10):
        _random_sylvester(rng, chk)
    stats = {"perp_true_a": 0, "perp_true_a_plus": 0, "block_true": {}}
    done = 0
    while done < rounds:
        n = rng.randint(2, 5)
        dW = rng.randint(1, n - 1)
        if rng.random() < 0.6:
            H, cols = _structured_instance(rng, n, dW)
        else:
            H = hermitian.random_hermitian(rng, n, real=rng.random() < 0.3).rows()
            cols = linalg.columns(hermitian.random_matrix(rng, n, dW, bound=2))
        if not _independent(cols, n):
            continue
        try:
            cond = hermitian.perp_definiteness_conditions(H, linalg.from_columns(cols, n))
        except PreconditionError:
            continue
        done += 1
        ok = cond["a"] == cond["c"] == cond["d"] and cond["a_plus"] == cond["c_plus"] == cond["d_plus"]
        chk.check(ok, "perp definiteness criteria agree", {"H": H, "W": cols, "conditions": {k: cond[k] for k in ("a", "a_plus", "c", "c_plus", "d", "d_plus")}})
        stats["perp_true_a"] += cond["a"]
        stats["perp_true_a_plus"] += cond["a_plus"]
    done = 0
    while done < rounds:
        n = rng.randint(2, 5)
        dW = rng.randint(1, n - 1)
        H, cols = _structured_instance(rng, n, dW)
        if not _independent(cols, n):
            continue
        Phi = hermitian.random_matrix(rng, dW, n, bound=2, real=rng.random() < 0.3)
        if rng.random() < 0.3:
            # Phi agreeing with H on iota W makes (b) and (c) frequently true
            Phi = linalg.conj_transpose(linalg.matmul(H, linalg.from_columns(cols, n)))
        try:
            report = hermitian.verify_block_lemma(H, linalg.from_columns(cols, n), Phi, samples=4, rng=rng)
        except PreconditionError:
            continue
        except AssertionError as exc:
            chk.check(False, f"block extension implication grid: {exc}", {"H": H, "iota": cols, "Phi": Phi})
            done += 1
            continue
        done += 1
        chk.check(True, "block extension grid")
        for k, v in report.as_dict().items():
            stats["block_true"][k] = stats["block_true"].get(k, 0) + v
    return _result(5, "Hermitian machine properties", chk, 180.0, start, scope,
                   f"condition counts {stats}", stats)


# 6 and 7 shared fixtures


def _models(max_dim, max_r=3):
    out = []
    for d in range(1, max_dim + 1):
        for lam in symfun.partitions(d, max_length=max_r):
            out.append(tuple(lam))
    return out


def _ample_bundle(rng, e, r, twisted=True):
    eff = [[Fraction(rng.randint(1, 3)) for _ in range(r)] for _ in range(e)]
    if twisted and rng.random() < 0.5:
        delta = [Fraction(rng.randint(-2, 2), rng.randint(1, 3)) for _ in range(r)]
        roots = [[a - d for a, d in zip(root, delta)] for root in eff]
        return toricring.BundleModel(roots, delta)
    return toricring.BundleModel(eff)


def _nef_version(rng, bundle: toricring.BundleModel):
    eff = [list(root) for root in bundle.effective_roots()]
    j = rng.randrange(len(eff))
    if rng.random() < 0.5:
        eff[j] = [Fraction(0)] * len(eff[j])
    else:
        eff[j][rng.randrange(len(eff[j]))] = Fraction(0)
    return toricring.BundleModel(eff)


def _partition_tuples(weight, max_k=2):
    """Ordered tuples of nonempty partitions with the given total weight."""
    out = []
    for k in range(1, max_k + 1):
        for comp in cartesian(range(1, weight + 1), repeat=k):
            if sum(comp) != weight:
                continue
            for lams in cartesian(*[list(symfun.partitions(w)) for w in comp]):
                out.append(tuple(lams))
    return out


def criterion_6(scope="full", seed=0):
    start = time.perf_counter()
    chk = _Checker()
    rng = random.Random(seed)
    max_dim = 6 if scope == "full" else 4
    for kappa in _models(max_dim):
        model = toricring.ToricModel(kappa)
        for lams in _partition_tuples(model.dim):
            bundles = [_ample_bundle(rng, lam.first + rng.randint(0, 1), model.r) for lam in lams]
            value = toricring.integrate(toricring.product_class(lams, bundles, model))
            chk.check(value > 0, f"ample positivity kappa={kappa} lambdas={[str(l) for l in lams]}",
                      {"bundles": [b.to_json() for b in bundles], "value": value})
            i = rng.randrange(len(bundles))
            nef = list(bundles)
            nef[i] = _nef_version(rng, bundles[i])
            value = toricring.integrate(toricring.product_class(lams, nef, model))
            chk.check(value >= 0, f"nef nonnegativity kappa={kappa} lambdas={[str(l) for l in lams]}",
                      {"bundles": [b.to_json() for b in nef], "value": value})
    return _result(6, "positivity of Schur class integrals", chk, 120.0, start, scope)


def _ample_class(rng, model):
    return model.linear([Fraction(rng.randint(1, 4), rng.randint(1, 2)) for _ in range(model.r)])


HR11_MODELS = ((1, 1, 1), (2, 2), (3, 1), (2, 1, 1), (2, 2, 1), (3, 3), (2, 2, 2))


def criterion_7(scope="full", seed=0):
    start = time.perf_counter()
    chk = _Checker()
    rng = random.Random(seed)
    reps = 4 if scope == "full" else 1
    models = HR11_MODELS if scope == "full" else HR11_MODELS[:3]
    for kappa in models:
        model = toricring.ToricModel(kappa)
        weight = model.dim - 2
        if weight > 4:
            continue
        for lams in _partition_tuples(weight):
            for _ in range(reps):
                bundles = [_ample_bundle(rng, lam.first + rng.randint(0, 1), model.r) for lam in lams]
                h = _ample_class(rng, model)
                gamma = toricring.product_class(lams, bundles, model)
                report = toricring.hr11_check(gamma, h)
                chk.check(report.verdict, f"kappa={kappa} lambdas={[str(l) for l in lams]}",
                          {"bundles": [b.to_json() for b in bundles], "h": str(h), "report": report.to_json()})
    return _result(7, "Hodge-Riemann relations on H^{1,1} for Schur classes", chk, 120.0, start, scope)


# 8


def _pf_from_roots(ts):
    coeffs = [Fraction(1)]
    for t in ts:
        nxt = [Fraction(0)] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            nxt[i] += c
            nxt[i + 1] += c * t
        coeffs = nxt
    return coeffs


POLYA_MODELS = {1: ((1, 1, 1), (2, 1), (3,)), 2: ((2, 2), (3, 1), (2, 1, 1), (1, 1, 1, 1))}


def criterion_8(scope="full", seed=0):
    start = time.perf_counter()
    chk = _Checker()
    rng = random.Random(seed)
    reps = 6 if scope == "full" else 2
    for weight in (1, 2):
        for kappa in POLYA_MODELS[weight]:
            model = toricring.ToricModel(kappa)
            for lam in symfun.partitions(weight):
                for _ in range(reps):
                    ts = [Fraction(rng.randint(1, 5), rng.randint(1, 3)) for _ in range(rng.randint(0, 3))]
                    a = _pf_from_roots(ts)
                    a = a + [Fraction(0)] * (weight + 1 - len(a))
                    chk.check(logconcave.is_polya_frequency(a).verdict, "PF fixture", a)
                    E = _ample_bundle(rng, lam.first + rng.randint(0, 1), model.r)
                    h = _ample_class(rng, model)
                    gamma = toricring.polya_combination(lam, E, h, a, model)
                    report = toricring.hr11_check(gamma, h)
                    chk.check(report.verdict, f"kappa={kappa} lambda={lam} a={[str(x) for x in a]}",
                              {"bundle": E.to_json(), "h": str(h), "report": report.to_json()})
    return _result(8, "Polya combinations satisfy Hodge-Riemann on H^{1,1}", chk, 60.0, start, scope)


# 9


def lorentzian_family_fixtures():
    """(lams, ns, m, kappa, root data) with m <= n_i <= |lam_i| and matching dimension."""
    P2, P1 = (2,), (1,)
    out = [
        ([(1, 1)], [2], 2, P2, [[[1], [1]]]),
        ([(1,)], [1], 1, P1, [[[1]]]),
        ([(1,)], [1], 1, P1, [[[3]]]),
        ([(1, 1), (1,)], [1, 1], 1, P2, [[[1], [2]], [[1]]]),
        ([(2,)], [2], 1, P1, [[[1], [2]]]),
        ([(2, 1)], [2], 2, (1, 1, 1), [[[1, 1, 0], [0, 1, 1]]]),
        ([(1, 1), (1, 1)], [2, 1], 1, (1, 1), [[[1, 2], [2, 1]], [[1, 1], [1, 1]]]),
        ([(2, 1), (1,)], [2, 1], 1, (1, 1), [[[1, 1], [1, 2]], [[2, 1]]]),
        ([(2, 1), (2,)], [2, 2], 2, (2, 1), [[[1, 1], [1, 2]], [[1, 1], [2, 3]]]),
        ([(1, 1, 1)], [2], 2, (2, 1), [[[1, 1], [1, 0], [0, 1]]]),
        ([(2, 2)], [3], 2, (2, 1), [[[1, 1], [2, 1]]]),
        ([(1,), (1,), (1,)], [1, 1, 1], 1, (1,), [[[1]], [[2]], [[1]]]),
        ([(2, 1), (1, 1)], [2, 2], 2, (3,), [[[1], [1]], [[1], [2]]]),
    ]
    return out


def _bundles_of(roots_list):
    return [toricring.BundleModel([[Fraction(a) for a in root] for root in roots]) for roots in roots_list]


def criterion_9(scope="full", seed=0):
    start = time.perf_counter()
    chk = _Checker()
    rng = random.Random(seed)
    first = toricring.theorem9_polynomial([(1, 1)], [2], 2, _bundles_of([[[1], [1]]]), toricring.ToricModel((2,)))
    chk.check(first == P("3/2*x1^2"), "(3/2)x^2 instance", str(first))
    for lams, ns, m, kappa, roots in lorentzian_family_fixtures():
        model = toricring.ToricModel(kappa)
        bundles = _bundles_of(roots)
        ample = all(b.is_ample() for b in bundles)
        f = toricring.theorem9_polynomial(lams, ns, m, bundles, model)
        rep = lorentz.is_lorentzian(f)
        chk.check(rep.verdict, f"Lorentzian lams={lams} kappa={kappa}", {"f": str(f), "witness": str(rep.witness)})
        if ample:
            rep = lorentz.is_strictly_lorentzian(f)
            chk.check(rep.verdict, f"strictly Lorentzian lams={lams} kappa={kappa}", {"f": str(f), "witness": str(rep.witness)})
        i = rng.randrange(len(bundles))
        nef = list(bundles)
        nef[i] = _nef_version(rng, bundles[i])
        f = toricring.theorem9_polynomial(lams, ns, m, nef, model)
        rep = lorentz.is_lorentzian(f)
        chk.check(rep.verdict, f"nef Lorentzian lams={lams} kappa={kappa}", {"f": str(f), "witness": str(rep.witness)})
    P1 = toricring.ToricModel((1,))
    seq = toricring.derived_pair_sequence((1, 1), (1,), *_bundles_of([[[1], [1]], [[1]]]), P1)
    chk.check(seq == [6, 3], "sequence (6,3)", seq)
    pairs = [((1, 1), (1,)), ((2, 1), (1, 1)), ((2, 1), (2, 1)), ((1, 1), (1, 1)), ((2,), (2, 1)), ((3,), (2,))]
    for kappa in ((1,), (2,), (1, 1), (3,), (2, 1)):
        model = toricring.ToricModel(kappa)
        for lam, mu in pairs:
            lam_p, mu_p = symfun.as_partition(lam), symfun.as_partition(mu)
            E = _ample_bundle(rng, lam_p.first + rng.randint(0, 1), model.r)
            F = _ample_bundle(rng, mu_p.first + rng.randint(0, 1), model.r)
            seq = toricring.derived_pair_sequence(lam_p, mu_p, E, F, model)
            chk.check(all(b > 0 for b in seq), f"positive sequence {lam},{mu} kappa={kappa}", seq)
            if len(seq) >= 3:
                chk.check(logconcave.logcon_classify(seq).strong, f"strictly log-concave {lam},{mu} kappa={kappa}", seq)
    return _result(9, "Lorentzian volume-type polynomials and derived sequences", chk, 60.0, start, scope)


# 10


def schur_product_fixtures(max_weight=5, max_e=3, max_blocks=2):
    out = []
    for tup in _partition_tuples_upto(max_weight, max_blocks):
        for es in cartesian(*[range(max(1, lam.first), max_e + 1) for lam in tup]):
            out.append((tup, es))
    return out


def _partition_tuples_upto(max_weight, max_blocks):
    seen = []
    for w in range(1, max_weight + 1):
        seen.extend(t for t in _partition_tuples(w, max_blocks))
    return seen


def dually_lorentzian_fixtures(count=24, seed=0):
    """Dually Lorentzian polynomials in at most 3 variables of degree at most 4."""
    fixed = [P("x^2+3*x*y+9*y^2"), P("x^3+2*x^2*y+4*x*y^2+8*y^3"), P("x*y*z"), P("x^2*y+x*y^2")]
    out = [f for f in fixed if lorentz.is_dually_lorentzian(f).verdict]
    rng = random.Random(seed)
    attempts = 0
    while len(out) < count and attempts < 20000:
        attempts += 1
        s = rng.randint(1, 3)
        deg = rng.randint(1, 4)
        names = ("x", "y", "z")[:s]
        terms = {}
        for alpha in polyring.monomials_of_degree(s, deg):
            if rng.random() < 0.7:
                terms[alpha] = Fraction(rng.randint(1, 9), rng.randint(1, 2))
        f = polyring.Polynomial(terms, names)
        if f.is_zero() or f in out:
            continue
        if lorentz.is_dually_lorentzian(f).verdict:
            out.append(f)
    return out


def criterion_10(scope="full", seed=0):
    start = time.perf_counter()
    chk = _Checker()
    max_weight = 5 if scope == "full" else 3
    for lams, es in schur_product_fixtures(max_weight):
        f = symfun.product_of_schurs(lams, es)
        k = f.degree
        for m in range(1, k + 1):
            for n in range(m, k + 1):
                rep = logconcave.schur_logconcavity(f, m, n)
                chk.check(rep.verdict, f"Schur log-concavity lams={[str(l) for l in lams]} e={es} m={m} n={n}",
                          rep.expansion.negative_terms())
    for lams, es in schur_product_fixtures(3 if scope == "full" else 2):
        f = symfun.product_of_schurs(lams, es)
        for w in range(1, 5 if scope == "full" else 3):
            parts = list(symfun.partitions(w))
            for mu in parts:
                for nu in parts:
                    if mu == nu or not logconcave.dominates(mu, nu):
                        continue
                    current = nu
                    for step in logconcave.brylawski_chain(mu, nu):
                        rep = logconcave.product_inequality(f, step.result, current)
                        chk.check(rep.verdict, f"product inequality lams={[str(l) for l in lams]} e={es} {step.result} >= {current}",
                                  rep.expansion.negative_terms())
                        current = step.result
                    rep = logconcave.product_inequality(f, mu, nu)
                    chk.check(rep.verdict, f"product inequality lams={[str(l) for l in lams]} e={es} {mu} >= {nu}",
                              rep.expansion.negative_terms())
    fixtures = dually_lorentzian_fixtures(24 if scope == "full" else 8, seed)
    for f in fixtures:
        k = f.degree
        for m in range(1, k + 1):
            for n in range(m, k + 1):
                ok, witness = logconcave.monomial_positive(logconcave.derived_difference(f, m, n))
                chk.check(ok, f"monomial positivity f={f} m={m} n={n}", witness)
    return _result(10, "Schur log-concavity, dominance products and monomial positivity", chk, 300.0, start, scope,
                   f"{len(fixtures)} dually Lorentzian fixtures")


CRITERIA = {
    1: criterion_1,
    2: criterion_2,
    3: criterion_3,
    4: criterion_4,
    5: criterion_5,
    6: criterion_6,
    7: criterion_7,
    8: criterion_8,
    9: criterion_9,
    10: criterion_10,
}


def run_criterion(cid: int, scope: str = "full", seed: int = 0) -> CriterionResult:
    start = time.perf_counter()
    try:
        return CRITERIA[cid](scope=scope, seed=seed)
    except (DomainError, AssertionError) as exc:
        name = CRITERIA[cid].__name__
        return CriterionResult(cid, name, False, f"raised {type(exc).__name__}: {exc}", 0,
                               time.perf_counter() - start, 0.0, None)


def run_suite(scope: str = "quick", only=None, seed: int = 0) -> list[CriterionResult]:
    if scope not in SCOPES:
        raise DomainError(f"scope must be one of {SCOPES}, got {scope!r}")
    ids = sorted(CRITERIA) if only is None else [int(i) for i in only]
    for cid in ids:
        if cid not in CRITERIA:
            raise DomainError(f"no criterion {cid}")
    return [run_criterion(cid, scope, seed) for cid in ids]
