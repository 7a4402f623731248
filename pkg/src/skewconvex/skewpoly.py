"""The skew polynomial ring K[T; sigma, delta].

Coefficients are stored low-to-high and multiplication rewrites
``T*a -> sigma(a)*T + delta(a)``. Evaluation at a point is the remainder of
right division by ``T - a``.
"""

from .errors import DivisionByZeroPoly, MixedFields
from .scalars import Scalar


class SkewPolynomial:
    """An element of K[T; sigma, delta]; ``coeffs[m]`` multiplies T^m on the right.

    The zero polynomial has no coefficients and degree -1.
    """

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs=()):
        out = []
        for c in coeffs:
            if not isinstance(c, Scalar):
                c = field.parse(c) if isinstance(c, str) else field.from_int(c)
            elif c.field != field:
                raise MixedFields("coefficient from another field")
            out.append(c)
        while out and not out[-1]:
            out.pop()
        self.field = field
        self.coeffs = tuple(out)

    @classmethod
    def T(cls, field):
        return cls(field, [field.zero, field.one])

    @classmethod
    def constant(cls, a):
        return cls(a.field, [a])

    @classmethod
    def one(cls, field):
        return cls(field, [field.one])

    @classmethod
    def monomial(cls, a, m):
        return cls(a.field, [a.field.zero] * m + [a])

    @classmethod
    def linear(cls, a):
        """T - a."""
        return cls(a.field, [-a, a.field.one])

    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def lead(self):
        return self.coeffs[-1] if self.coeffs else self.field.zero

    def __bool__(self):
        return bool(self.coeffs)

    def is_monic(self):
        return bool(self.coeffs) and self.lead == self.field.one

    def monic(self):
        if not self:
            return self
        return self.lead.inverse() * self

    def coeff(self, m):
        return self.coeffs[m] if 0 <= m < len(self.coeffs) else self.field.zero

    def _check(self, other):
        if other.field != self.field:
            raise MixedFields(f"{self.field!r} vs {other.field!r}")

    def __eq__(self, other):
        if isinstance(other, Scalar):
            other = SkewPolynomial.constant(other)
        if not isinstance(other, SkewPolynomial):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        if isinstance(other, Scalar):
            other = SkewPolynomial.constant(other)
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return SkewPolynomial(self.field, [self.coeff(m) + other.coeff(m) for m in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return SkewPolynomial(self.field, [-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Scalar):
            other = SkewPolynomial.constant(other)
        if not isinstance(other, SkewPolynomial):
            return NotImplemented
        return poly_mul(self, other)

    def __rmul__(self, a):
        # left scalar multiplication is coefficientwise
        if not isinstance(a, Scalar):
            return NotImplemented
        if a.field != self.field:
            raise MixedFields("scalar from another field")
        return SkewPolynomial(self.field, [a * c for c in self.coeffs])

    def __pow__(self, e):
        result = SkewPolynomial.one(self.field)
        for _ in range(e):
            result = result * self
        return result

    def __call__(self, a):
        return evaluate(self, a)

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"SkewPolynomial({self})"


def format_poly(P):
    """Canonical text ``c_n*T^n + ... + c_0`` with every coefficient in braces."""
    if not P:
        return "{0}"
    one = P.field.one
    terms = []
    for m in range(P.degree, -1, -1):
        c = P.coeffs[m]
        if not c:
            continue
        mono = "" if m == 0 else ("T" if m == 1 else f"T^{m}")
        if not mono:
            terms.append(f"{{{c}}}")
        elif c == one:
            terms.append(mono)
        else:
            terms.append(f"{{{c}}}*{mono}")
    return " + ".join(terms)


def _mul_T(Q):
    """T * Q, using T*q = sigma(q)*T + delta(q)."""
    F = Q.field
    out = [F.zero] * (len(Q.coeffs) + 1)
    for j, q in enumerate(Q.coeffs):
        out[j + 1] = out[j + 1] + F.sigma(q)
        if F.has_derivation:
            out[j] = out[j] + F.delta(q)
    return SkewPolynomial(F, out)


def poly_mul(P, Q):
    if P.field != Q.field:
        raise MixedFields(f"{P.field!r} vs {Q.field!r}")
    F = P.field
    if not P or not Q:
        return SkewPolynomial(F)
    acc = [F.zero] * (P.degree + Q.degree + 1)
    cur = Q  # T^m * Q
    for m, p in enumerate(P.coeffs):
        if m:
            cur = _mul_T(cur)
        if p:
            for j, c in enumerate(cur.coeffs):
                acc[j] = acc[j] + p * c
    return SkewPolynomial(F, acc)


def right_divide(P, D):
    """(Q, R) with P = Q*D + R and deg R < deg D."""
    if not D:
        raise DivisionByZeroPoly("right division by the zero polynomial")
    P._check(D)
    F = P.field
    n = D.degree
    dl = D.lead
    quot = [F.zero] * max(P.degree - n + 1, 0)
    R = P
    while R and R.degree >= n:
        k = R.degree - n
        # lead of c*T^k*D is c*sigma^k(lead D)
        c = R.lead * F.sigma_pow(dl, k).inverse()
        quot[k] = quot[k] + c
        R = R - SkewPolynomial.monomial(c, k) * D
    return SkewPolynomial(F, quot), R


def left_divide(P, D):
    """(Q, R) with P = D*Q + R and deg R < deg D. Needs sigma to be onto."""
    if not D:
        raise DivisionByZeroPoly("left division by the zero polynomial")
    P._check(D)
    F = P.field
    n = D.degree
    dl_inv = D.lead.inverse()
    quot = [F.zero] * max(P.degree - n + 1, 0)
    R = P
    while R and R.degree >= n:
        k = R.degree - n
        # lead of D*c*T^k is lead(D)*sigma^n(c)
        c = F.sigma_pow(dl_inv * R.lead, -n)
        quot[k] = quot[k] + c
        R = R - D * SkewPolynomial.monomial(c, k)
    return SkewPolynomial(F, quot), R


def evaluate(P, a):
    """The value P(a): the remainder of P on right division by T - a."""
    if not P:
        return P.field.zero
    return right_divide(P, SkewPolynomial.linear(a))[1].coeff(0)


def gcrd(P, Q):
    """Monic greatest common right divisor."""
    if not P and not Q:
        raise DivisionByZeroPoly("gcrd(0, 0) is undefined")
    while Q:
        P, Q = Q, right_divide(P, Q)[1]
    return P.monic()


def gcld(P, Q):
    """Monic greatest common left divisor."""
    if not P and not Q:
        raise DivisionByZeroPoly("gcld(0, 0) is undefined")
    while Q:
        P, Q = Q, left_divide(P, Q)[1]
    # a left divisor stays one under right multiplication by a unit
    c = P.field.sigma_pow(P.lead.inverse(), -P.degree)
    return P * c


def llcm_cofactors(P, Q):
    """(L, U, V) with L = U*P = V*Q the monic least left common multiple."""
    if not P or not Q:
        raise DivisionByZeroPoly("llcm needs two nonzero polynomials")
    P._check(Q)
    F = P.field
    zero, one = SkewPolynomial(F), SkewPolynomial.one(F)
    r0, r1 = P, Q
    u0, v0, u1, v1 = one, zero, zero, one
    # invariant: r_i = u_i*P + v_i*Q
    while r1:
        q, r = right_divide(r0, r1)
        r0, r1 = r1, r
        u0, u1 = u1, u0 - q * u1
        v0, v1 = v1, v0 - q * v1
    L = u1 * P
    s = L.lead.inverse()
    return s * L, s * u1, -(s * v1)


def llcm(P, Q):
    return llcm_cofactors(P, Q)[0]


def is_semi_invariant(P):
    """P*a == sigma^n(a)*P for every basis element a, n = deg P.

    Both sides are additive and base-field linear in a, so the basis suffices.
    """
    F = P.field
    n = P.degree
    for a in F.basis():
        if P * a != F.sigma_pow(a, n) * P:
            return False
    return True


def shift_variable(P, target, s):
    """Sum p_m (T + s)^m computed in the ring over ``target`` (same K and sigma).

    With target delta = 0 and s = c this rewrites a polynomial of
    K[T; sigma, delta_c] in the variable T - c, which commutes like K[T; sigma].
    """
    s = target.from_coords(s.coords)
    base = SkewPolynomial(target, [s, target.one])
    acc = SkewPolynomial(target)
    power = SkewPolynomial.one(target)
    for m, p in enumerate(P.coeffs):
        if m:
            power = power * base
        acc = acc + target.from_coords(p.coords) * power
    return acc
