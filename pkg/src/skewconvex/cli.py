"""Command line front end.

Config files hold one ``[field]`` section of ``key = value`` lines::

    [field]
    kind = fq              # fq | gaussian | quaternion
    p = 2
    modulus = 1, 1, 1      # low-to-high, monic
    frobenius_power = 1
    sigma = conj           # gaussian only: conj | id
    derivation = g         # optional inner derivation constant
    json = false

Exit status: 0 on success, 2 when the result is mathematically undefined
(point outside the domain, function not invertible), 1 on any other error.
"""

import argparse
import configparser
import json
import sys
from dataclasses import dataclass

from . import action, funcring, verify
from .errors import ConfigError, SkewError, UndefinedAtPoint
from .expr import parse_function
from .rational import domain_report, evaluate_at, is_defined_at
from .scalars import Field
from .skewpoly import gcld, gcrd, llcm

UNDEFINED_MESSAGE = "undefined: point conjugate to a denominator root class"


@dataclass(frozen=True)
class Config:
    field: Field
    json: bool = False


def _bool(text):
    t = text.strip().lower()
    if t in ("1", "true", "yes", "on"):
        return True
    if t in ("0", "false", "no", "off"):
        return False
    raise ConfigError(f"not a boolean: {text!r}")


def parse_config(text):
    cp = configparser.ConfigParser(inline_comment_prefixes=("#", ";"))
    try:
        cp.read_string(text)
    except configparser.Error as exc:
        raise ConfigError(str(exc)) from None
    if not cp.has_section("field"):
        raise ConfigError("config needs a [field] section")
    sec = cp["field"]
    kind = sec.get("kind", "").strip().lower()
    deriv = sec.get("derivation")
    try:
        if kind == "fq":
            modulus = [int(c) for c in sec["modulus"].replace("[", "").replace("]", "").split(",")]
            field = Field.fq(int(sec["p"]), modulus, int(sec.get("frobenius_power", "1")),
                             derivation=deriv)
        elif kind == "gaussian":
            field = Field.gaussian(sec.get("sigma", "conj").strip(), derivation=deriv)
        elif kind == "quaternion":
            field = Field(kind, sigma=sec.get("sigma", "id").strip(), derivation=deriv)
        else:
            raise ConfigError(f"unknown field kind {kind!r}")
    except KeyError as exc:
        raise ConfigError(f"missing key {exc}") from None
    except ValueError as exc:
        if isinstance(exc, SkewError):
            raise
        raise ConfigError(str(exc)) from None
    use_json = _bool(sec.get("json", "false"))
    if cp.has_section("output"):
        use_json = _bool(cp["output"].get("json", str(use_json)))
    return Config(field, use_json)


def load_config(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return parse_config(fh.read())
    except OSError as exc:
        raise ConfigError(f"cannot read config: {exc}") from None


def _element(field, text):
    text = text.strip()
    if text.startswith("{") and text.endswith("}"):
        text = text[1:-1]
    return field.parse(text)


def _polynomial(field, text):
    f = parse_function(text, field)
    if not f.is_polynomial():
        raise SkewError(f"{text!r} is not a polynomial")
    return f.num


def _report_json(f, a=None):
    out = {"defined": None, "value": None}
    if a is not None:
        out["defined"] = is_defined_at(f, a)
        out["value"] = str(evaluate_at(f, a)) if out["defined"] else None
    rep = domain_report(f)
    out["excluded_classes"] = [{"representative": str(c.representative), "invariant": c.describe()}
                               for c in rep.excluded]
    out["complete"] = rep.complete
    return out


def _emit(obj):
    print(json.dumps(obj))


def cmd_eval(cfg, args):
    F = cfg.field
    f = parse_function(args.expr, F)
    a = _element(F, args.at)
    if cfg.json:
        out = _report_json(f, a)
        _emit(out)
        return 0 if out["defined"] else 2
    try:
        print(evaluate_at(f, a))
    except UndefinedAtPoint:
        print(UNDEFINED_MESSAGE)
        return 2
    return 0


def cmd_domain(cfg, args):
    F = cfg.field
    f = parse_function(args.expr, F)
    a = _element(F, args.at) if args.at else None
    out = _report_json(f, a)
    if cfg.json:
        _emit(out)
    else:
        if not out["excluded_classes"]:
            print("defined everywhere")
        for c in out["excluded_classes"]:
            print(f"excluded: class of {c['representative']} ({c['invariant']})")
        print(f"complete: {str(out['complete']).lower()}")
        if a is not None:
            print(f"value: {out['value']}" if out["defined"] else UNDEFINED_MESSAGE)
    return 2 if a is not None and not out["defined"] else 0


def cmd_gcd(cfg, args):
    F = cfg.field
    P, Q = _polynomial(F, args.p), _polynomial(F, args.q)
    if args.command == "gcd":
        R = gcld(P, Q) if args.left else gcrd(P, Q)
    else:
        R = llcm(P, Q)
    _emit({"result": str(R)}) if cfg.json else print(R)
    return 0


def cmd_orbit(cfg, args):
    a = _element(cfg.field, args.at)
    _emit([str(x) for x in action.orbit(a)])
    return 0


def _table_json(f):
    return {str(x): str(v) for x, v in zip(f.domain.elements, f.values)}


def cmd_convex(cfg, args):
    X = funcring.FiniteInvariantSet.orbit_of(_element(cfg.field, args.orbit))
    fs = funcring.convex_functions(X)
    if args.list:
        _emit([_table_json(f) for f in fs])
    else:
        _emit({"count": len(fs)}) if cfg.json else print(len(fs))
    return 0


def cmd_invert(cfg, args):
    F = cfg.field
    X = funcring.FiniteInvariantSet.orbit_of(_element(F, args.orbit))
    try:
        with open(args.table, encoding="utf-8") as fh:
            raw = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise SkewError(f"cannot read table: {exc}") from None
    table = {_element(F, k): _element(F, v) for k, v in raw.items()}
    if set(table) != set(X.elements):
        raise SkewError("table keys must be exactly the orbit")
    f = funcring.OrbitFunction.from_dict(X, table)
    if not funcring.is_skew_invertible(f):
        print("not invertible: zero value or x -> ^{f(x)} x is not a bijection")
        return 2
    _emit(_table_json(funcring.skew_inverse(f)))
    return 0


def cmd_verify(cfg, args):
    checks = verify.run_suite(args.suite, cfg.field, args.seed, args.samples)
    if cfg.json:
        _emit([{"check": c.name, "passed": c.passed, "cases": c.cases} for c in checks])
    else:
        for c in checks:
            print(c)
    return 0 if all(c.passed for c in checks) else 1


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(1)


def build_parser():
    parser = _Parser(prog="skewconvex", description="Skew polynomials and skew rational functions.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, fn, help):
        p = sub.add_parser(name, help=help)
        p.add_argument("--config", required=True)
        p.add_argument("--json", action="store_true", help="JSON output")
        p.set_defaults(fn=fn)
        return p

    p = add("eval", cmd_eval, "evaluate a skew rational function at a point")
    p.add_argument("--expr", required=True)
    p.add_argument("--at", required=True)
    p = add("domain", cmd_domain, "classes where a function is undefined")
    p.add_argument("--expr", required=True)
    p.add_argument("--at")
    for name in ("gcd", "lcm"):
        p = add(name, cmd_gcd, "monic gcrd (or gcld with --left)" if name == "gcd"
                else "monic least left common multiple")
        p.add_argument("--p", required=True)
        p.add_argument("--q", required=True)
        if name == "gcd":
            p.add_argument("--left", action="store_true", help="greatest common left divisor")
    p = add("orbit", cmd_orbit, "list a conjugacy class (finite fields)")
    p.add_argument("--at", required=True)
    p = add("convex", cmd_convex, "skew-convex functions on an orbit")
    p.add_argument("--orbit", required=True)
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--count", action="store_true")
    mode.add_argument("--list", action="store_true")
    p = add("invert", cmd_invert, "skew inverse of a function table on an orbit")
    p.add_argument("--orbit", required=True)
    p.add_argument("--table", required=True)
    p = add("verify", cmd_verify, "run a self-check suite")
    p.add_argument("--suite", required=True, choices=sorted(verify.SUITES))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, help="override the suite's sample count")
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        cfg = load_config(args.config)
        if args.json:
            cfg = Config(cfg.field, True)
        return args.fn(cfg, args)
    except (SkewError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
