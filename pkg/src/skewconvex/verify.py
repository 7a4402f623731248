"""Seeded self-check suites run by ``skewconvex verify``.

Each suite returns a list of :class:`Check` results for one configured field.
Finite fields are checked exhaustively where that stays cheap, otherwise on
seeded samples.
"""

import random
from dataclasses import dataclass

from . import action, funcring
from .errors import Unsupported
from .rational import (SkewRationalFunction, conjugate_transfer_check, domain_report,
                       evaluate_at, is_defined_at, metro_solve, metro_status, normalize,
                       product_formula_check)
from .skewpoly import (SkewPolynomial, evaluate, gcrd, left_divide, llcm_cofactors,
                       right_divide)


@dataclass
class Check:
    name: str
    passed: bool
    cases: int

    def __str__(self):
        return f"{'PASS' if self.passed else 'FAIL'}  {self.name}  ({self.cases} cases)"


def random_poly(F, rng, max_degree=2, monic=False, nonzero=False):
    while True:
        d = rng.randint(0, max_degree)
        coeffs = [F.random_element(rng, height=3) for _ in range(d + 1)]
        if monic:
            coeffs[-1] = F.one
        P = SkewPolynomial(F, coeffs)
        if P or not nonzero:
            return P


def random_rational(F, rng, max_degree=2):
    return normalize(random_poly(F, rng, max_degree, nonzero=True), random_poly(F, rng, max_degree))


def sample_points(F, rng, n):
    if F.is_finite:
        return list(F.elements())
    return [F.random_element(rng, height=4) for _ in range(n)]


def _require_finite(F, suite):
    if not F.is_finite:
        raise Unsupported(f"suite {suite!r} enumerates functions and needs a finite field")


def suite_nearring(F, rng, samples=2000):
    _require_finite(F, "nearring")
    X = funcring.FiniteInvariantSet.whole_field(F)
    pool = list(funcring.all_functions(X)) if F.order ** len(X) <= 4096 else None

    def pick():
        if pool:
            return rng.choice(pool)
        return funcring.OrbitFunction(X, [rng.choice(F.elements()) for _ in X])

    one = funcring.OrbitFunction.constant(X, F.one)
    unit = assoc = rdist = ldist = True
    for _ in range(samples):
        f, g, h = pick(), pick(), pick()
        unit &= funcring.skew_mul(f, one) == f == funcring.skew_mul(one, f)
        assoc &= funcring.skew_mul(funcring.skew_mul(f, g), h) == \
            funcring.skew_mul(f, funcring.skew_mul(g, h))
        rdist &= funcring.skew_mul(f + g, h) == funcring.skew_mul(f, h) + funcring.skew_mul(g, h)
        if funcring.is_skew_convex(h):
            ldist &= funcring.skew_mul(h, f + g) == funcring.skew_mul(h, f) + funcring.skew_mul(h, g)
    return [Check("unit law", unit, samples), Check("associativity", assoc, samples),
            Check("right distributivity", rdist, samples),
            Check("left distributivity for convex h", ldist, samples)]


def suite_convexring(F, rng):
    _require_finite(F, "convexring")
    checks = []
    for orb in action.orbits(F):
        X = funcring.FiniteInvariantSet(orb, F)
        if F.order ** len(X) > 10 ** 5:
            continue
        S = funcring.convex_functions(X)
        Sset = set(S)
        closed = all(f + g in Sset and funcring.skew_mul(f, g) in Sset for f in S for g in S)
        ok_inv = True
        for f in S:
            if funcring.is_skew_invertible(f):
                g = funcring.skew_inverse(f)
                one = funcring.OrbitFunction.constant(X, F.one)
                ok_inv &= g in Sset and funcring.skew_mul(f, g) == one == funcring.skew_mul(g, f)
        endos = {funcring.endo_of_convex(f) for f in S}
        label = "{" + ", ".join(map(str, orb)) + "}"
        checks.append(Check(f"closure on {label}", closed, len(S) ** 2))
        checks.append(Check(f"inverses convex on {label}", ok_inv, len(S)))
        checks.append(Check(f"endomorphism bijection on {label}", len(endos) == len(S), len(S)))
    return checks


def suite_productformula(F, rng, samples=300):
    ok_poly = True
    for _ in range(samples):
        P, Q = random_poly(F, rng), random_poly(F, rng)
        a = F.random_element(rng, height=4)
        qa = evaluate(Q, a)
        expected = evaluate(P, action.conjugate(a, qa)) * qa if qa else F.zero
        ok_poly &= evaluate(P * Q, a) == expected
    ok_rat, tried = True, 0
    for _ in range(samples):
        f, g = random_rational(F, rng, 1), random_rational(F, rng, 1)
        a = F.random_element(rng, height=4)
        if all(is_defined_at(r, a) for r in (f, g, f * g)):
            tried += 1
            ok_rat &= product_formula_check(f, g, a)
    return [Check("polynomial product formula", ok_poly, samples),
            Check("rational product formula", ok_rat, tried)]


def suite_metro(F, rng, samples=100):
    pairs = ([(a, b) for a in F.elements() for b in F.elements()] if F.is_finite else
             [(F.random_element(rng), F.random_element(rng)) for _ in range(samples)])
    ok_equiv = ok_value = True
    for a, b in pairs:
        f = normalize(SkewPolynomial.linear(b), SkewPolynomial.one(F))
        defined = is_defined_at(f, a)
        if F.is_finite:
            crit = not action.same_class(a, b) and all(
                metro_status(b, c) != "none" for c in action.orbit(a))
            ok_equiv &= defined == crit
        else:
            ok_equiv &= defined == (not action.same_class(a, b))
        if defined:
            x = evaluate_at(f, a)
            ok_value &= x == metro_solve(b, a)
            ok_value &= F.sigma(x) * a + F.delta(x) - b * x == F.one
    return [Check("definedness of (T-b)^-1", ok_equiv, len(pairs)),
            Check("metro equation holds at the value", ok_value, len(pairs))]


def suite_domains(F, rng, samples=100):
    ok_inv = ok_report = ok_roots = ok_transfer = True
    for _ in range(samples // 4 if F.is_finite else samples // 10):
        f = random_rational(F, rng)
        rep = domain_report(f)
        for a in sample_points(F, rng, 10):
            d = is_defined_at(f, a)
            ok_report &= d != rep.excludes(a)
            b = F.random_element(rng, zero_ok=False)
            ok_inv &= d == is_defined_at(f, action.conjugate(a, b))
            if F.is_finite:
                ok_roots &= d == all(evaluate(f.den, c) for c in action.orbit(a))
    for _ in range(samples):
        a, b = F.random_element(rng), F.random_element(rng)
        x, y = F.random_element(rng, zero_ok=False), F.random_element(rng, zero_ok=False)
        ok_transfer &= conjugate_transfer_check(a, b, action.conjugate(a, x), action.conjugate(b, y))
    checks = [Check("definedness is a class property", ok_inv, samples),
              Check("domain report matches pointwise definedness", ok_report, samples),
              Check("conjugate transfer", ok_transfer, samples)]
    if F.is_finite:
        checks.append(Check("defined iff den has no root in the class", ok_roots, samples))
    return checks


def suite_orearith(F, rng, samples=100):
    ok_ring = ok_div = ok_gcd = ok_field = True
    for _ in range(samples):
        P, Q, R = (random_poly(F, rng, 3) for _ in range(3))
        ok_ring &= (P * Q) * R == P * (Q * R) and P * (Q + R) == P * Q + P * R
        D = random_poly(F, rng, 2, nonzero=True)
        q, r = right_divide(P, D)
        q2, r2 = left_divide(P, D)
        ok_div &= q * D + r == P and D * q2 + r2 == P and r.degree < D.degree > r2.degree
        if P and Q:
            G = gcrd(P, Q)
            L, U, V = llcm_cofactors(P, Q)
            ok_gcd &= not right_divide(P, G)[1] and not right_divide(Q, G)[1]
            ok_gcd &= U * P == L == V * Q and L.degree + G.degree == P.degree + Q.degree
        f, g, h = (random_rational(F, rng, 1) for _ in range(3))
        ok_field &= (f * g) * h == f * (g * h) and f * (g + h) == f * g + f * h
        if f:
            ok_field &= f * f.inverse() == SkewRationalFunction.constant(F.one)
    return [Check("polynomial ring axioms", ok_ring, samples),
            Check("two-sided division", ok_div, samples),
            Check("gcrd / llcm identities", ok_gcd, samples),
            Check("rational field axioms", ok_field, samples)]


SUITES = {
    "nearring": suite_nearring,
    "convexring": suite_convexring,
    "productformula": suite_productformula,
    "metro": suite_metro,
    "domains": suite_domains,
    "orearith": suite_orearith,
}


def run_suite(name, F, seed=0, samples=None):
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    kw = {} if samples is None or name == "convexring" else {"samples": samples}
    return SUITES[name](F, random.Random(seed), **kw)
