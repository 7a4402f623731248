"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line.

Run ``pytest tests/test_acceptance.py -s`` to see the lines inline; they are
also collected into the terminal summary. ``python3 tests/test_acceptance.py``
runs the gate without pytest.
"""

import random
import subprocess
import sys
from fractions import Fraction
from itertools import product
from pathlib import Path

import pytest

from conftest import ACCEPTANCE, F4, F4D, F9, F9D, GC, GCD, GI, H, HD
from skewconvex import action, funcring
from skewconvex.errors import UndefinedAtPoint
from skewconvex.funcring import FiniteInvariantSet, OrbitFunction
from skewconvex.rational import (conjugate_transfer_check, eval_semi_invariant, evaluate_at,
                                 evaluate_by_skew_inverse, is_defined_at, linear_kernel,
                                 metro_solve, normalize, product_formula_check,
                                 gaussian_quadratic_has_root, quadratic_kernel_gaussian)
from skewconvex.skewpoly import SkewPolynomial, evaluate, left_divide, right_divide

ROOT = Path(__file__).resolve().parent.parent


def record(n, name, ok):
    ACCEPTANCE[n] = (name, bool(ok))
    print(f"criterion {n:2d}  {'PASS' if ok else 'FAIL'}  {name}")
    assert ok, f"criterion {n} failed: {name}"


def all_polys(F, max_degree, monic=False):
    out = []
    for d in range(max_degree + 1):
        if monic:
            out += [SkewPolynomial(F, list(cs) + [F.one]) for cs in product(F.elements(), repeat=d)]
        elif d == max_degree:
            out += [SkewPolynomial(F, cs) for cs in product(F.elements(), repeat=d + 1)]
    return out


def inv_linear(b):
    return normalize(SkewPolynomial.linear(b), SkewPolynomial.one(b.field))


def point_near(rng, F, b, height=4):
    """A random point, half the time conjugate to b."""
    if rng.random() < 0.5:
        return action.conjugate(b, F.random_element(rng, height, zero_ok=False))
    return F.random_element(rng, height)


# -- tables on F_4^* -------------------------------------------------------------

X4 = FiniteInvariantSet.orbit_of(F4.one)
FUNCS = list(funcring.all_functions(X4))
IDX = {f: n for n, f in enumerate(FUNCS)}


def _tables():
    mul = [[IDX[funcring.skew_mul(f, g)] for g in FUNCS] for f in FUNCS]
    add = [[IDX[f + g] for g in FUNCS] for f in FUNCS]
    return mul, add


MUL, ADD = _tables()
N = len(FUNCS)


def test_c01_near_ring_laws():
    one = IDX[OrbitFunction.constant(X4, F4.one)]
    unit = all(MUL[f][one] == f == MUL[one][f] for f in range(N))
    assoc = all(MUL[MUL[f][g]][h] == MUL[f][MUL[g][h]]
                for f in range(N) for g in range(N) for h in range(N))
    rdist = all(MUL[ADD[f][g]][h] == ADD[MUL[f][h]][MUL[g][h]]
                for f in range(N) for g in range(N) for h in range(N))
    record(1, "near-ring laws on F_4^* (all 64^3 triples)", N == 64 and unit and assoc and rdist)


def test_c02_left_distributivity_iff_convex():
    left = {h for h in range(N)
            if all(MUL[h][ADD[f][g]] == ADD[MUL[h][f]][MUL[h][g]] for f in range(N) for g in range(N))}
    convex = {IDX[f] for f in FUNCS if funcring.is_skew_convex(f)}
    # additive endomorphisms of F_4 by brute force over all 4^4 maps
    K = F4.elements()
    additive = 0
    for values in product(K, repeat=4):
        m = dict(zip(K, values))
        additive += all(m[x + y] == m[x] + m[y] for x in K for y in K)
    endos = {funcring.endo_of_convex(FUNCS[h]) for h in convex}
    record(2, "left distributivity <=> convex, 16 = |End(F_4,+)|",
           left == convex and len(convex) == 16 == additive == len(endos))


def test_c03_convex_ring():
    S = [f for f in FUNCS if funcring.is_skew_convex(f)]
    Sset = set(S)
    closed = all(f + g in Sset and funcring.skew_mul(f, g) in Sset for f in S for g in S)
    one = OrbitFunction.constant(X4, F4.one)
    inverses = True
    for f in S:
        if funcring.is_skew_invertible(f):
            g = funcring.skew_inverse(f)
            inverses &= g in Sset and funcring.skew_mul(f, g) == one == funcring.skew_mul(g, f)
    has_units = sum(funcring.is_skew_invertible(f) for f in S)
    record(3, "S(F_4^*) closed under + and <>, inverses convex and two-sided",
           closed and inverses and one in Sset and has_units > 1)


def test_c04_polynomial_product_formula():
    ok = True
    for F, degree in ((F4, 2), (F4D, 1)):
        polys = all_polys(F, degree)
        values = {(P, a): evaluate(P, a) for P in polys for a in F.elements()}
        for P in polys:
            for Q in polys:
                PQ = P * Q
                for a in F.elements():
                    qa = values[Q, a]
                    expected = values[P, action.conjugate(a, qa)] * qa if qa else F.zero
                    ok &= evaluate(PQ, a) == expected
    record(4, "evaluate(PQ, a) branch formula, all pairs over F_4 (deg <= 2) and F_4 with delta_g (deg <= 1)", ok)


def test_c05_metro_equivalence():
    ok = True
    for F in (F4, F4D, F9, F9D):
        for a in F.elements():
            for b in F.elements():
                f = inv_linear(b)
                crit = not action.same_class(a, b) and all(
                    metro_solve(b, c) is not None for c in action.orbit(a))
                d = is_defined_at(f, a)
                ok &= d == crit
                if d:
                    x = evaluate_at(f, a)
                    ok &= F.sigma(x) * a + F.delta(x) - b * x == F.one
    record(5, "metro equivalence on F_4 x F_4 and F_9 x F_9, delta in {0, delta_g}", ok)


def test_c06_closed_form_kernels():
    rng = random.Random(6)
    ok = True
    for _ in range(100):
        b = GC.random_element(rng, 4)
        z = point_near(rng, GC, b)
        nz, nb = z.norm(), b.norm()
        f = inv_linear(b)
        if nz == nb:
            ok &= not is_defined_at(f, z) and linear_kernel(b, z) is None
        else:
            want = (z + GC.sigma(b)) * GC.from_int(1 / (nz - nb))
            ok &= evaluate_at(f, z) == want == linear_kernel(b, z)
    for _ in range(100):
        q0 = H.random_element(rng, 4)
        q = point_near(rng, H, q0)
        f = inv_linear(q0)
        quad = q * q - H.from_int(2 * q0.real) * q + H.from_int(q0.norm())
        if action.same_class(q, q0):
            ok &= not is_defined_at(f, q)
        else:
            want = (q - q0.conj()) * quad.inverse()
            ok &= evaluate_at(f, q) == want == linear_kernel(q0, q)
    ok &= evaluate_at(inv_linear(GC.one), GC.from_int(2)) == GC.one
    ok &= evaluate_at(inv_linear(H.parse("i")), H.parse("2j")) == -(H.parse("i+2j")) * H.from_int(Fraction(1, 3))
    record(6, "closed-form kernels over Q(i) and H, pinned spot values", ok)


def test_c07_semi_invariant_shortcut():
    rng = random.Random(7)
    ok = True
    T2 = SkewPolynomial.T(GC) ** 2
    for bval in (Fraction(1), Fraction(2), Fraction(1, 2)):
        b = GC.from_int(bval)
        f = normalize(T2 + b, SkewPolynomial.one(GC))
        for _ in range(100):
            a = GC.random_element(rng, 5)
            want = (GC.sigma(a) * a + b).inverse()
            ok &= eval_semi_invariant(f, a) == evaluate_at(f, a) == want
    f = normalize(T2 + GC.one, SkewPolynomial.one(GC))
    ok &= evaluate_at(f, GC.parse("1+i")) == GC.parse("1/3")
    record(7, "semi-invariant shortcut for (T^2+b)^-1, b in {1, 2, 1/2}", ok)


def test_c08_quadratic_gaussian_kernel():
    rng = random.Random(8)
    ok = True
    T = SkewPolynomial.T(GC)
    for bs, cs in (("0", "1"), ("1", "1"), ("i", "2+i")):
        b, c = GC.parse(bs), GC.parse(cs)
        ok &= not gaussian_quadratic_has_root(b, c)
        f = normalize(T * T + b * T + c, SkewPolynomial.one(GC))
        for _ in range(100):
            a = GC.random_element(rng, 5)
            if is_defined_at(f, a):
                ok &= quadratic_kernel_gaussian(b, c, a) == evaluate_at(f, a)
            else:
                with pytest.raises(UndefinedAtPoint):
                    quadratic_kernel_gaussian(b, c, a)
    record(8, "quadratic Gaussian kernel equals evaluate_at", ok)


def clears_denominator(Pp, f):
    """Whether P' f is a polynomial, by brute force over monic A' with deg A' <= deg den.

    P' den^-1 = A'^-1 W whenever A' P' = W den, and then P' f = A'^-1 (W num).
    """
    F = f.field
    for Ap in all_polys(F, f.den.degree, monic=True):
        W, r = right_divide(Ap * Pp, f.den)
        if r:
            continue
        return not left_divide(W * f.num, Ap)[1]
    raise AssertionError("no common left multiple found")


def test_c09_minimality():
    rng = random.Random(9)
    seen, ok = set(), True
    for _ in range(1000):
        A = SkewPolynomial(F4, [rng.choice(F4.elements()) for _ in range(3)])
        B = SkewPolynomial(F4, [rng.choice(F4.elements()) for _ in range(3)])
        if not A:
            continue
        f = normalize(A, B)
        if f in seen:
            continue
        seen.add(f)
        ok &= clears_denominator(f.den, f)
        for d in range(f.den.degree):
            ok &= not any(clears_denominator(Pp, f) for Pp in all_polys(F4, d, monic=True)
                          if Pp.degree == d)
    record(9, f"minimal representation over F_4 ({len(seen)} distinct functions)", ok)


def test_c10_root_criterion():
    rng = random.Random(10)
    ok = True
    for F in (F4, F4D, F9, F9D):
        dens = all_polys(F, 2, monic=True)
        nums = [SkewPolynomial(F, [F.random_element(rng) for _ in range(3)]) for _ in dens]
        extra = [(SkewPolynomial(F, [F.random_element(rng) for _ in range(3)]),
                  SkewPolynomial(F, [F.random_element(rng) for _ in range(3)])) for _ in range(250)]
        for A, B in list(zip(dens, nums)) + [(A, B) for A, B in extra if A]:
            f = normalize(A, B)
            for a in F.elements():
                ok &= is_defined_at(f, a) == all(evaluate(f.den, c) for c in action.orbit(a))
    record(10, "defined iff den has no root in the class, F_4 and F_9", ok)


def _rational_sample(F, rng):
    def poly():
        return SkewPolynomial(F, [F.random_element(rng, 3) for _ in range(2)])
    while True:
        A = poly()
        if A:
            return normalize(A, poly())


def test_c11_rational_product_formula():
    rng = random.Random(11)
    ok = True
    # 500 triples on each built-in field, 100 on the variants
    for F, want in ((F4, 500), (F9, 500), (GC, 500), (H, 500), (F9D, 100), (GI, 100), (HD, 100)):
        n = tries = 0
        while n < want and tries < 20000:
            tries += 1
            f, g = _rational_sample(F, rng), _rational_sample(F, rng)
            a = point_near(rng, F, F.random_element(rng, 3), 3) if not F.is_finite else rng.choice(F.elements())
            if all(is_defined_at(r, a) for r in (f, g, f * g)):
                ok &= product_formula_check(f, g, a)
                n += 1
        ok &= n == want
    # exhaustive on F_4 with components of degree <= 1
    polys = all_polys(F4, 1)
    fs = {normalize(A, B) for A in polys if A for B in polys}
    # value tables, None where undefined
    val = {(f, a): evaluate_at(f, a) if is_defined_at(f, a) else None
           for f in fs for a in F4.elements()}
    exhaustive = 0
    for f in fs:
        for g in fs:
            h = f * g
            for a in F4.elements():
                ga = val[g, a]
                if val[f, a] is None or ga is None or not is_defined_at(h, a):
                    continue
                want = val[f, action.conjugate(a, ga)] * ga if ga else F4.zero
                ok &= evaluate_at(h, a) == want
                exhaustive += 1
    record(11, f"rational product formula (500 per built-in field, {exhaustive} exhaustive on F_4)", ok)


def test_c12_cross_method():
    rng = random.Random(12)
    ok = True
    for F in (F4, F4D, F9, F9D):
        for den in all_polys(F, 2, monic=True):
            for _ in range(2):
                f = normalize(den, SkewPolynomial(F, [F.random_element(rng) for _ in range(3)]))
                for a in F.elements():
                    if is_defined_at(f, a):
                        ok &= evaluate_at(f, a) == evaluate_by_skew_inverse(f, a)
                    else:
                        X = FiniteInvariantSet.orbit_of(a)
                        ok &= not funcring.is_skew_invertible(funcring.poly_to_function(f.den, X))
    record(12, "operator route == skew-inverse table route on F_4 and F_9", ok)


def test_c13_conjugate_transfer():
    ok = True
    for F in (F4, F4D):
        for a, b in product(F.elements(), repeat=2):
            for c in action.orbit(a):
                for d in action.orbit(b):
                    ok &= conjugate_transfer_check(a, b, c, d)
    rng = random.Random(13)
    for F in (GC, GI, GCD, H, HD):
        for _ in range(200):
            a = F.random_element(rng, 4)
            b = point_near(rng, F, a)
            x, y = F.random_element(rng, 4, zero_ok=False), F.random_element(rng, 4, zero_ok=False)
            ok &= conjugate_transfer_check(a, b, action.conjugate(a, x), action.conjugate(b, y))
    record(13, "conjugate transfer: exhaustive on F_4, 200 seeded tuples per char-0 field", ok)


def _cli(*args):
    proc = subprocess.run([sys.executable, "-m", "skewconvex", *args],
                          capture_output=True, text=True, timeout=120)
    return proc.returncode, proc.stdout


def test_c14_cli_end_to_end():
    q, f4 = str(ROOT / "configs" / "quaternion.ini"), str(ROOT / "configs" / "f4.ini")
    ok = _cli("eval", "--config", q, "--expr", "(T-{i})^-1", "--at", "2j") == (0, "-1/3i-2/3j\n")
    ok &= _cli("eval", "--config", q, "--expr", "(T-{i})^-1", "--at", "j") == \
        (2, "undefined: point conjugate to a denominator root class\n")
    ok &= _cli("convex", "--config", f4, "--orbit", "1", "--count") == (0, "16\n")
    record(14, "CLI pinned outputs and exit codes", ok)


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-s"]))
