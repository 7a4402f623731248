"""Skew rational functions P(T)^-1 Q(T) and their values at points of K.

A function is kept in minimal form: den monic and left-coprime to num. It is
defined at a when the base-field linear operator

    den(T_a) = sum_m lmul(d_m) T_a^m,      T_a(x) = sigma(x) a + delta(x),

is invertible, and its value is den(T_a)^-1 (num(a)). For the built-in fields
every conjugacy class is algebraic, so this agrees with skew invertibility of
den on the class of a; the finite-field tests check that against the
function-ring route.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

import sympy
from sympy.solvers.diophantine.diophantine import sum_of_three_squares

from . import action, funcring
from .errors import (NotConjugate, NotSemiInvariant, ReducibleDenominator, Unsupported,
                     UnsupportedField, UndefinedAtPoint, ZeroDenominator, ZeroInverse)
from .scalars import Kind, LinearOperator, Scalar, linearize
from .skewpoly import (SkewPolynomial, evaluate, gcld, is_semi_invariant, left_divide,
                       llcm_cofactors, shift_variable)


class SkewRationalFunction:
    """Minimal left quotient den^-1 * num. Build with :func:`normalize`."""

    __slots__ = ("den", "num")

    def __init__(self, den, num):
        self.den = den
        self.num = num

    @property
    def field(self):
        return self.den.field

    @classmethod
    def from_poly(cls, P):
        return cls(SkewPolynomial.one(P.field), P)

    @classmethod
    def constant(cls, a):
        return cls.from_poly(SkewPolynomial.constant(a))

    def is_polynomial(self):
        return self.den.degree == 0

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        if isinstance(other, SkewPolynomial):
            other = SkewRationalFunction.from_poly(other)
        if not isinstance(other, SkewRationalFunction):
            return NotImplemented
        return self.den == other.den and self.num == other.num

    def __hash__(self):
        return hash((self.den, self.num))

    def __add__(self, other):
        return rat_add(self, _lift(other))

    def __sub__(self, other):
        return rat_add(self, -_lift(other))

    def __neg__(self):
        return SkewRationalFunction(self.den, -self.num)

    def __mul__(self, other):
        return rat_mul(self, _lift(other))

    def __rmul__(self, other):
        return rat_mul(_lift(other), self)

    def inverse(self):
        return rat_inv(self)

    def __pow__(self, e):
        base = self if e >= 0 else rat_inv(self)
        out = SkewRationalFunction.constant(self.field.one)
        for _ in range(abs(e)):
            out = rat_mul(out, base)
        return out

    def __call__(self, a):
        return evaluate_at(self, a)

    def __str__(self):
        if self.is_polynomial():
            return str(self.num)
        return f"({self.den})^-1*({self.num})"

    def __repr__(self):
        return f"SkewRationalFunction({self})"


def _lift(x):
    if isinstance(x, SkewRationalFunction):
        return x
    if isinstance(x, SkewPolynomial):
        return SkewRationalFunction.from_poly(x)
    if isinstance(x, Scalar):
        return SkewRationalFunction.constant(x)
    raise TypeError(f"cannot treat {type(x).__name__} as a skew rational function")


# -- field operations -------------------------------------------------------------


def normalize(A, B):
    """The minimal representation of A^-1 B: cancel gcld(A, B), then make den monic."""
    if not A:
        raise ZeroDenominator("zero denominator")
    F = A.field
    if not B:
        return SkewRationalFunction(SkewPolynomial.one(F), SkewPolynomial(F))
    G = gcld(A, B)
    A1, ra = left_divide(A, G)
    B1, rb = left_divide(B, G)
    assert not ra and not rb
    # (u A1)^-1 (u B1) = A1^-1 B1
    u = A1.lead.inverse()
    return SkewRationalFunction(u * A1, u * B1)


def rat_add(f, g):
    if f.den == g.den:
        return normalize(f.den, f.num + g.num)
    L, U, V = llcm_cofactors(f.den, g.den)
    return normalize(L, U * f.num + V * g.num)


def rat_mul(f, g):
    """A^-1 B C^-1 D = (C2 A)^-1 (B2 D) where C2 B = B2 C."""
    if not f.num or not g.num:
        return normalize(SkewPolynomial.one(f.field), SkewPolynomial(f.field))
    _, C2, B2 = llcm_cofactors(f.num, g.den)
    return normalize(C2 * f.den, B2 * g.num)


def rat_inv(f):
    if not f.num:
        raise ZeroInverse("inverse of the zero function")
    return normalize(f.num, f.den)


# -- evaluation ---------------------------------------------------------------------


@dataclass(frozen=True)
class EvalOperator:
    """The base-field matrix of P(T_a) together with P and a."""

    poly: SkewPolynomial
    point: Scalar
    operator: LinearOperator

    def __call__(self, x):
        return self.operator(x)

    def is_singular(self):
        return self.operator.is_singular()

    def solve(self, y):
        return self.operator.solve(y)


def t_operator(a):
    """T_a(x) = sigma(x) a + delta(x) as a matrix."""
    F = a.field
    op = linearize(F, "rmul", a) @ linearize(F, "sigma")
    if F.has_derivation:
        op = op + linearize(F, "delta")
    return op


def eval_operator(P, a):
    F = a.field
    Ta = t_operator(a)
    power = LinearOperator.identity(F)
    total = LinearOperator(F, linearize(F, "lmul", F.zero).matrix)
    for m, p in enumerate(P.coeffs):
        if m:
            power = Ta @ power
        if p:
            total = total + linearize(F, "lmul", p) @ power
    return EvalOperator(P, a, total)


def is_defined_at(f, a):
    if f.is_polynomial():
        return True
    return not eval_operator(f.den, a).is_singular()


def evaluate_at(f, a):
    """f(a) = den(T_a)^-1 (num(a))."""
    q = evaluate(f.num, a)
    if f.is_polynomial():
        return f.den.lead.inverse() * q
    op = eval_operator(f.den, a)
    if op.is_singular():
        raise UndefinedAtPoint(f"{f} is not defined at {a}")
    return op.solve(q)


def metro_operator(b, c):
    """x -> sigma(x) c + delta(x) - b x."""
    return t_operator(c) - linearize(c.field, "lmul", b)


def metro_status(b, c):
    """'unique', 'nonunique' or 'none' for sigma(x) c + delta(x) - b x = 1."""
    op = metro_operator(b, c)
    if not op.is_singular():
        return "unique"
    return "none" if op.solve(c.field.one) is None else "nonunique"


def metro_solve(b, c):
    """The unique solution of the metro equation, or None.

    None covers both an unsolvable equation and a singular operator that
    happens to hit 1; :func:`metro_status` tells them apart.
    """
    op = metro_operator(b, c)
    if op.is_singular():
        return None
    return op.solve(c.field.one)


def eval_semi_invariant(f, a):
    """sigma^-n( den(^{q} a) )^-1 q  with q = num(a), for a semi-invariant den."""
    P = f.den
    if not is_semi_invariant(P):
        raise NotSemiInvariant(f"{P} is not semi-invariant")
    F = a.field
    if not evaluate(P, a):
        raise UndefinedAtPoint(f"{P} vanishes at {a}")
    q = evaluate(f.num, a)
    if not q:
        return F.zero
    return F.sigma_pow(evaluate(P, action.conjugate(a, q)), -P.degree).inverse() * q


def _check_plain(F, kinds):
    if F.has_derivation or F.kind not in kinds or (F.kind is Kind.GAUSSIAN and F.sigma_name != "conj"):
        raise UnsupportedField(f"closed form not available over {F!r}")


def linear_kernel(b, a):
    """Closed-form value of (T - b)^-1 at a over Q(i) with conjugation or over H."""
    F = a.field
    _check_plain(F, (Kind.GAUSSIAN, Kind.QUATERNION))
    if F.kind is Kind.GAUSSIAN:
        na, nb = a.norm(), b.norm()
        if na == nb:
            return None
        return (a + F.sigma(b)) * F.from_int(1 / (na - nb))
    if action.same_class(a, b):
        return None
    d = a * a - F.from_int(2 * b.real) * a + F.from_int(b.norm())
    return (a - b.conj()) * d.inverse()


def _is_rational_square(r):
    if r < 0:
        return False
    r = Fraction(r)
    return math.isqrt(r.numerator) ** 2 == r.numerator and \
        math.isqrt(r.denominator) ** 2 == r.denominator


def _has_rational_root(a2, a1, a0):
    """Whether a2 x^2 + a1 x + a0 (a2 != 0) has a rational root."""
    return _is_rational_square(a1 * a1 - 4 * a2 * a0)


def two_squares(r):
    """Rationals (x, y) with x^2 + y^2 = r, or None."""
    r = Fraction(r)
    if r < 0:
        return None
    if r == 0:
        return (Fraction(0), Fraction(0))
    n = r.numerator * r.denominator  # r = n / den^2
    x = 0
    while 2 * x * x <= n:
        y = math.isqrt(n - x * x)
        if x * x + y * y == n:
            return (Fraction(x, r.denominator), Fraction(y, r.denominator))
        x += 1
    return None


def three_squares(r):
    """Rationals (x, y, z) with x^2 + y^2 + z^2 = r, or None."""
    r = Fraction(r)
    if r < 0:
        return None
    if r == 0:
        return (Fraction(0),) * 3
    n = r.numerator * r.denominator
    m = n
    while m % 4 == 0:
        m //= 4
    if m % 8 == 7:
        return None
    sol = sum_of_three_squares(n)
    return tuple(Fraction(v, r.denominator) for v in sol)


def gaussian_quadratic_has_root(b, c):
    """Whether |z|^2 + b z + c = 0 has a solution z in Q(i)."""
    b1, b2 = b.coords
    c1, c2 = c.coords
    if not b:
        return c2 == 0 and two_squares(-c1) is not None
    if b1:
        # imaginary part forces y = alpha + beta x
        alpha, beta = -c2 / b1, -b2 / b1
        return _has_rational_root(1 + beta * beta, 2 * alpha * beta + b1 - b2 * beta,
                                  alpha * alpha - b2 * alpha + c1)
    x = -c2 / b2
    return _has_rational_root(Fraction(1), -b2, x * x + c1)


def quadratic_kernel_gaussian(b, c, a):
    """Closed-form value of (T^2 + bT + c)^-1 at a over Q(i) with conjugation."""
    F = a.field
    _check_plain(F, (Kind.GAUSSIAN,))
    if gaussian_quadratic_has_root(b, c):
        raise ReducibleDenominator(f"T^2 + ({b})T + ({c}) has a right root in Q(i)")
    n = a.norm()
    den = (F.from_int(n) + c).norm() - n * b.norm()
    if den == 0:
        raise UndefinedAtPoint(f"operator singular at {a}")
    return (F.from_int(n) - b * a + F.sigma(c)) * F.from_int(1 / den)


# -- domains ------------------------------------------------------------------------


@dataclass(frozen=True)
class DomainReport:
    excluded: tuple
    complete: bool

    def excludes(self, a):
        return any(a in cls for cls in self.excluded)


def _qq_factors(coeffs):
    """Monic irreducible factors over Q of the polynomial with given low-to-high coefficients."""
    x = sympy.Symbol("x")
    poly = sympy.Poly([sympy.Rational(int(c.numerator), int(c.denominator)) for c in reversed(coeffs)],
                      x, domain=sympy.QQ)
    out = []
    for fac, _ in poly.factor_list()[1]:
        fac = fac.monic()
        out.append([Fraction(int(c.p), int(c.q)) for c in reversed(fac.all_coeffs())])
    return out


def _rational_poly_product(P, Q):
    """Coefficients of P*Q for commuting coefficient sequences of Scalars."""
    out = [None] * (len(P) + len(Q) - 1)
    for i, p in enumerate(P):
        for j, q in enumerate(Q):
            out[i + j] = p * q if out[i + j] is None else out[i + j] + p * q
    return out


def _candidate_points(P):
    """Representatives of every class that could contain a right root of P (delta = 0, char 0)."""
    F = P.field
    cands = []
    if F.kind is Kind.QUATERNION or F.sigma_name == "id":
        # P * conj(P) has rational coefficients and is a left multiple of P
        prod = _rational_poly_product([c.conj() for c in P.coeffs], list(P.coeffs))
        for fac in _qq_factors([c.real for c in prod]):
            if len(fac) == 2:
                cands.append(F.from_int(-fac[0]))
            elif len(fac) == 3:
                t, s = fac[0], fac[1]  # x^2 + s x + t
                disc = s * s - 4 * t
                if disc >= 0:
                    continue
                if F.kind is Kind.GAUSSIAN:
                    if _is_rational_square(-disc):
                        w = Fraction(math.isqrt((-disc).numerator), math.isqrt((-disc).denominator))
                        cands.append(F.from_coords((-s / 2, w / 2)))
                        cands.append(F.from_coords((-s / 2, -w / 2)))
                    continue
                v = three_squares(t - s * s / 4)
                if v is not None:
                    cands.append(F.from_coords((-s / 2,) + v))
        return cands
    # Q(i) with conjugation: det den(T_a) = N(A(nu)) - nu N(B(nu)), nu = N(a),
    # where A, B collect the even and odd coefficients.
    even, odd = list(P.coeffs[0::2]), list(P.coeffs[1::2])
    NA = _rational_poly_product(even, [c.conj() for c in even])
    NB = _rational_poly_product(odd, [c.conj() for c in odd]) if odd else []
    D = [c.real for c in NA] + [Fraction(0)] * max(0, len(NB) + 1 - len(NA))
    for k, c in enumerate(NB):
        D[k + 1] -= c.real
    while len(D) > 1 and D[-1] == 0:
        D.pop()
    for fac in _qq_factors(D):
        if len(fac) == 2:
            nu = -fac[0]
            xy = two_squares(nu)
            if xy is not None:
                cands.append(F.from_coords(xy))
    return cands


def domain_report(f):
    """Conjugacy classes on which f is undefined."""
    F = f.field
    if f.is_polynomial():
        return DomainReport((), True)
    if F.is_finite:
        excluded = tuple(action.class_of(orb[0]) for orb in action.orbits(F)
                         if not is_defined_at(f, orb[0]))
        return DomainReport(excluded, True)
    P = f.den
    if F.has_derivation:
        F0 = F.with_derivation(None)
        points = [F.from_coords(x.coords) + F.c
                  for x in _candidate_points(shift_variable(P, F0, F.c))]
    else:
        points = _candidate_points(P)
    excluded = {}
    for a in points:
        if not is_defined_at(f, a):
            cls = action.class_of(a)
            excluded.setdefault(cls.invariant, cls)
    ordered = tuple(sorted(excluded.values(), key=lambda c: str(c.invariant)))
    return DomainReport(ordered, True)


# -- identities used as test predicates -----------------------------------------------


def product_formula_check(f, g, a):
    """h(a) == f(^{g(a)} a) g(a) (or 0) for h = f g."""
    h = rat_mul(f, g)
    for name, r in (("f", f), ("g", g), ("fg", h)):
        if not is_defined_at(r, a):
            raise UndefinedAtPoint(f"{name} is not defined at {a}")
    ga = evaluate_at(g, a)
    expected = evaluate_at(f, action.conjugate(a, ga)) * ga if ga else a.field.zero
    return evaluate_at(h, a) == expected


def conjugate_transfer_check(a, b, c, d):
    """(T - b)^-1 defined at a implies (T - d)^-1 defined at c."""
    if not action.same_class(a, c) or not action.same_class(b, d):
        raise NotConjugate("need a ~ c and b ~ d")
    one = SkewPolynomial.one(a.field)
    fb = normalize(SkewPolynomial.linear(b), one)
    fd = normalize(SkewPolynomial.linear(d), one)
    return not is_defined_at(fb, a) or is_defined_at(fd, c)


def evaluate_by_skew_inverse(f, a):
    """(den^<-1> <> num)(a) computed with tables on the orbit of a (finite fields)."""
    F = a.field
    if not F.is_finite:
        raise Unsupported("the table route needs a finite orbit")
    X = funcring.FiniteInvariantSet.orbit_of(a)
    P = funcring.poly_to_function(f.den, X)
    Q = funcring.poly_to_function(f.num, X)
    if not funcring.is_skew_invertible(P):
        raise UndefinedAtPoint(f"{f.den} is not skew invertible on the class of {a}")
    return funcring.skew_mul(funcring.skew_inverse(P), Q)(a)
