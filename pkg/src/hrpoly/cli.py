"""Command-line frontend.

Exit codes: 0 when a verdict or value was computed (even a negative
verdict), 1 for usage errors, 2 for domain or precondition errors.  With
``--json`` every result is one line of canonical JSON; rationals are strings.
Any argument value of the form ``@path`` is replaced by the file contents.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction

from . import hermitian, logconcave, lorentz, polyring, symfun, toricring, verification
from .errors import DomainError

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


# value conversion


def payload(text: str) -> str:
    if text.startswith("@"):
        try:
            with open(text[1:], encoding="utf-8") as fh:
                return fh.read().strip()
        except OSError as exc:
            raise UsageError(f"cannot read {text[1:]}: {exc.strerror}") from None
    return text


def _json_value(text: str):
    try:
        return json.loads(payload(text))
    except json.JSONDecodeError as exc:
        raise DomainError(f"invalid JSON: {exc.msg} at position {exc.pos}") from None


def _int_list(text: str) -> list[int]:
    text = payload(text).strip()
    if text.startswith("{") or text.startswith("["):
        data = json.loads(text)
        data = data["kappa"] if isinstance(data, dict) else data
        return [int(x) for x in data]
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError:
        raise DomainError(f"expected comma-separated integers, got {text!r}") from None


def _rational_list(text: str) -> list[Fraction]:
    text = payload(text).strip()
    if text.startswith("["):
        return [polyring.as_fraction(x) for x in json.loads(text)]
    return [polyring.as_fraction(x) for x in text.replace(" ", "").split(",") if x]


def _names(text):
    return tuple(n for n in payload(text).replace(" ", "").split(",") if n) if text else None


def _poly(args, text=None, variables=None):
    text = payload(text if text is not None else args.poly)
    names = variables if variables is not None else _names(getattr(args, "vars", None))
    blocks = _int_list(args.blocks) if getattr(args, "blocks", None) else None
    return polyring.parse_polynomial(text, names, blocks)


def _matrix(text):
    data = _json_value(text)
    if not isinstance(data, list):
        raise DomainError("a matrix must be a JSON array of rows")
    return hermitian.as_matrix(data)


def _bundle(data) -> toricring.BundleModel:
    if isinstance(data, str):
        data = _json_value(data)
    if not isinstance(data, dict) or "roots" not in data:
        raise DomainError('a bundle is a JSON object {"roots": [...], "twist": [...]}')
    return toricring.BundleModel.from_json(data)


def _bundles(text) -> list[toricring.BundleModel]:
    data = _json_value(text)
    if isinstance(data, dict):
        data = [data]
    return [_bundle(b) for b in data]


def _partition_list(text: str):
    return [symfun.Partition.parse(p) for p in payload(text).split(";")]


def fmt(x):
    if isinstance(x, Fraction):
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    if isinstance(x, bool) or x is None or isinstance(x, (int, str)):
        return x
    if isinstance(x, hermitian.GaussianQ):
        return str(x)
    if isinstance(x, polyring.Polynomial):
        return polyring.serialize(x)
    if isinstance(x, toricring.ToricClass):
        return polyring.serialize(x.poly)
    if isinstance(x, symfun.Partition):
        return ",".join(map(str, x.parts))
    if isinstance(x, dict):
        return {str(k): fmt(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [fmt(v) for v in x]
    return str(x)


def _expansion_json(exp: symfun.SchurExpansion):
    return [{"partitions": ["|".join(map(str, lam.parts)) for lam in key] if len(key) > 1 else ",".join(map(str, key[0].parts)),
             "coefficient": fmt(c)} for key, c in exp.items()]


def _witness_json(w: lorentz.Witness | None):
    if w is None:
        return None
    data = {k: v for k, v in w.data.items() if k != "matrix"}
    return {"kind": w.kind, **fmt(data)}


# verbs


def cmd_parse(args):
    f = _poly(args)
    return {"polynomial": f, "variables": list(f.variables), "blocks": list(f.blocks),
            "degree": f.degree if not f.is_zero() else None}


def cmd_derived(args):
    return {"polynomial": polyring.derived(_poly(args), args.i)}


def cmd_dual(args):
    f = _poly(args)
    kappa = _int_list(args.kappa) if args.kappa else f.multidegree()
    return {"polynomial": polyring.dual_transform(f, kappa), "kappa": list(kappa)}


def cmd_truncate(args):
    return {"polynomial": polyring.truncate(_poly(args), _int_list(args.kappa))}


def cmd_evaluate(args):
    return {"value": _poly(args).evaluate(_rational_list(args.at))}


def cmd_schur(args):
    return {"polynomial": symfun.schur(symfun.Partition.parse(payload(args.partition)), args.e)}


def cmd_elementary(args):
    return {"polynomial": symfun.elementary(args.i, args.e)}


def cmd_derived_schur(args):
    return {"polynomial": symfun.derived_schur(symfun.Partition.parse(payload(args.partition)), args.e, args.i)}


def cmd_schur_expand(args):
    return {"expansion": _expansion_json(symfun.schur_expand(_poly(args)))}


def cmd_schur_positive(args):
    ok, exp = symfun.schur_positive(_poly(args))
    return {"verdict": ok, "expansion": _expansion_json(exp)}


def cmd_schubert(args):
    w = symfun.PermutationWord.parse(payload(args.word), args.profile)
    return {"polynomial": symfun.schubert(w, args.e), "length": symfun.inversion_length(w)}


def cmd_signature(args):
    rows = _json_value(args.matrix)
    return {"inertia": list(lorentz.signature_sym(rows))}


def _lorentz_report(rep: lorentz.LorentzReport):
    out = {"verdict": rep.verdict}
    if rep.witness is not None:
        out["witness"] = _witness_json(rep.witness)
    return out


def cmd_lorentzian(args):
    return _lorentz_report(lorentz.is_lorentzian(_poly(args)))


def cmd_strict_lorentzian(args):
    return _lorentz_report(lorentz.is_strictly_lorentzian(_poly(args)))


def cmd_dually_lorentzian(args):
    kappa = _int_list(args.kappa) if args.kappa else None
    return _lorentz_report(lorentz.is_dually_lorentzian(_poly(args), kappa))


def cmd_cone_lorentzian(args):
    gens = _json_value(args.generators)
    return _lorentz_report(lorentz.is_cone_lorentzian(_poly(args), gens))


def cmd_hr_pair(args):
    H = _matrix(args.H)
    iota = _matrix(args.iota)
    out = hermitian.classify_hr_pair(H, iota).to_json()
    out["verdict"] = out.get("level") == "HR"
    if args.phi:
        out["pre_hr"] = hermitian.pre_hr_pair(H, _matrix(args.phi))
    return out


def _model(args):
    if not args.kappa:
        raise UsageError("--kappa is required")
    return toricring.ToricModel(_int_list(args.kappa))


def cmd_toric(args):
    model = _model(args)
    action = args.action
    if action == "integrate":
        return {"value": toricring.integrate(model.parse(payload(args.cls)))}
    if action == "eval":
        g = _poly(args, args.g)
        return {"class": toricring.eval_classes(g, _bundles(args.bundles), model)}
    if action == "vol":
        gamma = model.parse(payload(args.gamma))
        xis = [model.parse(t) for t in payload(args.xis).split(";")] if args.xis else [model.xi(i) for i in range(model.r)]
        return {"polynomial": toricring.volume_polynomial(gamma, xis)}
    if action == "hr11":
        return toricring.hr11_check(model.parse(payload(args.gamma)), model.parse(payload(args.h))).to_json()
    if action == "seq":
        seq = toricring.derived_pair_sequence(
            symfun.Partition.parse(payload(args.lam)), symfun.Partition.parse(payload(args.mu)),
            _bundle(args.E), _bundle(args.F), model)
        return {"sequence": seq, "classification": logconcave.logcon_classify(seq).to_json() if seq else None}
    if action == "theorem9":
        f = toricring.theorem9_polynomial(_partition_list(args.lams), _int_list(args.ns), args.m, _bundles(args.bundles), model)
        return {"polynomial": f, "lorentzian": lorentz.is_lorentzian(f).verdict,
                "strictly_lorentzian": lorentz.is_strictly_lorentzian(f).verdict}
    if action == "polya":
        h = model.parse(payload(args.h))
        g = toricring.polya_combination(symfun.Partition.parse(payload(args.lam)), _bundle(args.E), h, _rational_list(args.a), model)
        out = {"class": g, "pf": logconcave.is_polya_frequency(_rational_list(args.a)).verdict}
        out.update(toricring.hr11_check(g, h).to_json())
        return out
    raise UsageError(f"unknown toric action {action}")


def cmd_pf_check(args):
    return logconcave.is_polya_frequency(payload(args.sequence)).to_json()


def cmd_logconcave(args):
    return logconcave.logcon_classify(payload(args.sequence)).to_json()


def cmd_schur_logconcave(args):
    rep = logconcave.schur_logconcavity(_poly(args, args.f), args.m, args.n)
    return {"verdict": rep.verdict, "expansion": _expansion_json(rep.expansion)}


def cmd_dominance(args):
    mu, nu = symfun.Partition.parse(payload(args.mu)), symfun.Partition.parse(payload(args.nu))
    out = {"verdict": logconcave.dominates(mu, nu)}
    if out["verdict"]:
        out["chain"] = [{"i": s.i, "j": s.j, "partition": s.result} for s in logconcave.brylawski_chain(mu, nu)]
    return out


def cmd_product_ineq(args):
    rep = logconcave.product_inequality(_poly(args, args.f), symfun.Partition.parse(payload(args.mu)),
                                        symfun.Partition.parse(payload(args.nu)))
    return {"verdict": rep.verdict, "expansion": _expansion_json(rep.expansion)}


def cmd_monomial_positive(args):
    ok, witness = logconcave.monomial_positive(_poly(args))
    out = {"verdict": ok}
    if witness is not None:
        out["witness"] = {"monomial": list(witness[0]), "coefficient": witness[1]}
    return out


def cmd_verify_suite(args):
    only = _int_list(args.only) if args.only else None
    results = verification.run_suite(args.scope, only, seed=args.seed)
    return {"scope": args.scope, "passed": all(r.passed for r in results),
            "criteria": [r.to_json(timings=args.timings) for r in results]}


# parser


def _add_poly(p, name="poly"):
    p.add_argument(name, help="polynomial text or @path")
    _add_ring(p)


def _add_ring(p):
    p.add_argument("--vars", help="comma-separated variable order")
    p.add_argument("--blocks", help="comma-separated block sizes")


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="emit JSON")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="seed for randomized checks")

    parser = _Parser(prog="hrpoly", description="Exact checks for Schur classes, Lorentzian polynomials and Hodge-Riemann forms.")
    parser.add_argument("--json", action="store_true", help="emit JSON")
    parser.add_argument("--seed", type=int, default=0, help="seed for randomized checks")
    sub = parser.add_subparsers(dest="verb", metavar="VERB", parser_class=_Parser)
    sub.required = True

    def verb(name, func, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(func=func)
        return p

    _add_poly(verb("parse", cmd_parse, "canonical form of a polynomial"))
    p = verb("derived", cmd_derived, "derived polynomial f^[i]")
    _add_poly(p)
    p.add_argument("--i", type=int, required=True)
    p = verb("dual", cmd_dual, "dual transform for a box kappa")
    _add_poly(p)
    p.add_argument("--kappa")
    p = verb("truncate", cmd_truncate, "drop monomials outside the box kappa")
    _add_poly(p)
    p.add_argument("--kappa", required=True)
    p = verb("evaluate", cmd_evaluate, "evaluate at a rational point")
    _add_poly(p)
    p.add_argument("--at", required=True)

    p = verb("schur", cmd_schur, "Schur polynomial s_lambda in e variables")
    p.add_argument("partition")
    p.add_argument("--e", type=int, required=True)
    p = verb("elementary", cmd_elementary, "elementary symmetric polynomial")
    p.add_argument("i", type=int)
    p.add_argument("--e", type=int, required=True)
    p = verb("derived-schur", cmd_derived_schur, "derived Schur polynomial")
    p.add_argument("partition")
    p.add_argument("--e", type=int, required=True)
    p.add_argument("--i", type=int, required=True)
    _add_poly(verb("schur-expand", cmd_schur_expand, "expansion in products of Schur polynomials"))
    _add_poly(verb("schur-positive", cmd_schur_positive, "Schur positivity test"))
    p = verb("schubert", cmd_schubert, "Schubert polynomial of a permutation word")
    p.add_argument("word")
    p.add_argument("--profile")
    p.add_argument("--e", type=int)
    p = verb("signature", cmd_signature, "inertia of a rational symmetric matrix")
    p.add_argument("matrix", help="JSON array of rows or @path")

    _add_poly(verb("lorentzian", cmd_lorentzian, "Lorentzian test"))
    _add_poly(verb("strict-lorentzian", cmd_strict_lorentzian, "strictly Lorentzian test"))
    p = verb("dually-lorentzian", cmd_dually_lorentzian, "dually Lorentzian test")
    _add_poly(p)
    p.add_argument("--kappa")
    p = verb("cone-lorentzian", cmd_cone_lorentzian, "Lorentzian test on a polyhedral cone")
    _add_poly(p)
    p.add_argument("--generators", required=True, help="JSON list of generator vectors")

    p = verb("hr-pair", cmd_hr_pair, "classify a Hermitian form and embedding")
    p.add_argument("--H", required=True)
    p.add_argument("--iota", required=True)
    p.add_argument("--phi")

    p = verb("toric", cmd_toric, "products of projective spaces")
    p.add_argument("action", choices=["integrate", "eval", "vol", "hr11", "seq", "theorem9", "polya"])
    p.add_argument("--kappa")
    p.add_argument("--class", dest="cls", default="0")
    p.add_argument("--g")
    p.add_argument("--bundles")
    p.add_argument("--gamma", default="1")
    p.add_argument("--xis")
    p.add_argument("--h")
    p.add_argument("--lam")
    p.add_argument("--mu")
    p.add_argument("--E")
    p.add_argument("--F")
    p.add_argument("--lams")
    p.add_argument("--ns")
    p.add_argument("--m", type=int)
    p.add_argument("--a")
    _add_ring(p)

    p = verb("pf-check", cmd_pf_check, "Polya frequency test")
    p.add_argument("sequence")
    p = verb("logconcave", cmd_logconcave, "log-concavity flags")
    p.add_argument("sequence")
    p = verb("schur-logconcave", cmd_schur_logconcave, "Schur positivity of f^[m]f^[n] - f^[m-1]f^[n+1]")
    p.add_argument("--f", required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    _add_ring(p)
    p = verb("dominance", cmd_dominance, "dominance order and covering chain")
    p.add_argument("mu")
    p.add_argument("nu")
    p = verb("product-ineq", cmd_product_ineq, "product inequality along dominance")
    p.add_argument("--f", required=True)
    p.add_argument("--mu", required=True)
    p.add_argument("--nu", required=True)
    _add_ring(p)
    _add_poly(verb("monomial-positive", cmd_monomial_positive, "nonnegativity of all coefficients"))

    p = verb("verify-suite", cmd_verify_suite, "run the acceptance fixtures")
    p.add_argument("scope", choices=verification.SCOPES)
    p.add_argument("--only", help="comma-separated criterion ids")
    p.add_argument("--timings", action="store_true", help="include elapsed times (nondeterministic)")
    return parser


def _text(result, indent=0) -> list[str]:
    lines = []
    pad = " " * indent
    for key, value in result.items():
        if isinstance(value, dict):
            lines.append(f"{pad}{key}:")
            lines.extend(_text(value, indent + 2))
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            lines.append(f"{pad}{key}:")
            for item in value:
                lines.append(f"{pad}  - " + ", ".join(f"{k}={_scalar(v)}" for k, v in item.items()))
        else:
            lines.append(f"{pad}{key}: {_scalar(value)}")
    return lines


def _scalar(v):
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return "none"
    if isinstance(v, list):
        return "(" + ", ".join(str(_scalar(x)) for x in v) + ")"
    return v


def main(argv=None) -> int:
    parser = build_parser()
    argv = list(sys.argv[1:] if argv is None else argv)
    want_json = "--json" in argv
    try:
        args = parser.parse_args(argv)
        random.seed(args.seed)
        result = fmt(args.func(args))
    except UsageError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_USAGE
    except DomainError as exc:
        if want_json:
            print(json.dumps({"error": type(exc).__name__, "message": str(exc)}, sort_keys=True, separators=(",", ":")))
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    if args.json:
        print(json.dumps(result, sort_keys=True, separators=(",", ":")))
    else:
        print("\n".join(_text(result)))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
