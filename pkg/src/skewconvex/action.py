"""The (sigma, delta)-conjugation action of K* on K.

``conjugate(a, b)`` is  sigma(b) a b^-1 + delta(b) b^-1.  Over F_q classes are
found by enumeration. Over the char-0 built-ins with delta = 0 they are
decided by closed-form invariants:

* Q(i), sigma = conj: a ~ c iff a*conj(a) == c*conj(c) (every norm-1 element
  u is conj(b)/b for b = 1 + conj(u), or b = i when u = -1);
* Q(i), sigma = id: the action is trivial;
* quaternions: equal real part and equal norm (b = v + v' conjugates the pure
  parts, or any rational vector orthogonal to v when v' = -v).

An inner derivation delta_c is reduced to delta = 0 by the translation
x -> x - c, since  ^b a - c = sigma(b) (a - c) b^-1.
"""

from dataclasses import dataclass, field as dc_field
from functools import lru_cache

from .errors import Unsupported, ZeroConjugator
from .scalars import Kind, Scalar, linearize
from .skewpoly import SkewPolynomial, llcm, shift_variable


def conjugate(a, b):
    """^b a = sigma(b) a b^-1 + delta(b) b^-1."""
    if not b:
        raise ZeroConjugator("cannot conjugate by zero")
    F = a.field
    b_inv = b.inverse()
    out = F.sigma(b) * a * b_inv
    if F.has_derivation:
        out = out + F.delta(b) * b_inv
    return out


def _untwisted(a):
    """The field without derivation and the translated point a - c."""
    F = a.field
    F0 = F.with_derivation(None)
    return F0, F0.from_coords((a - F.c).coords)


# -- finite fields ---------------------------------------------------------------


@lru_cache(maxsize=None)
def _partition(F):
    """Orbits of K under the action, each sorted, plus element -> orbit index."""
    index = {}
    orbits = []
    units = F.units()
    for a in F.elements():
        if a in index:
            continue
        orb = tuple(sorted({conjugate(a, b) for b in units}, key=Scalar.sort_key))
        for x in orb:
            index[x] = len(orbits)
        orbits.append(orb)
    return tuple(orbits), index


def orbit(a):
    """The conjugacy class of a as a sorted tuple (finite fields only)."""
    F = a.field
    if not F.is_finite:
        raise Unsupported("orbits are only enumerated over finite fields")
    orbits, index = _partition(F)
    return orbits[index[a]]


def orbits(F):
    """All conjugacy classes of a finite field, ordered by least element."""
    if not F.is_finite:
        raise Unsupported("orbits are only enumerated over finite fields")
    return _partition(F)[0]


# -- class invariants -------------------------------------------------------------


def _invariant0(a):
    """Invariant for a char-0 field with delta = 0."""
    F = a.field
    if F.kind is Kind.GAUSSIAN:
        if F.sigma_name == "id":
            return ("point", a.coords)
        return ("norm", a.norm(), not a)
    if a.is_central():
        return ("central", a.real)
    return ("sphere", 2 * a.real, a.norm())


def class_invariant(a):
    F = a.field
    if F.is_finite:
        return ("orbit", orbit(a)[0].coords)
    if F.has_derivation:
        return ("shifted", F.c.coords, _invariant0(_untwisted(a)[1]))
    return _invariant0(a)


@dataclass(frozen=True)
class ConjugacyClass:
    """A (sigma, delta)-conjugacy class, identified by its invariant."""

    representative: Scalar = dc_field(compare=False)
    invariant: tuple
    finite_orbit: tuple = dc_field(default=None, compare=False)

    def __contains__(self, x):
        return class_invariant(x) == self.invariant

    def describe(self):
        kind = self.invariant[0]
        inv = self.invariant[2] if kind == "shifted" else self.invariant
        if kind == "orbit":
            text = "orbit {" + ", ".join(map(str, self.finite_orbit)) + "}"
        elif inv[0] == "norm":
            text = f"norm = {inv[1]}"
        elif inv[0] == "sphere":
            text = f"Re = {inv[1] / 2}, norm = {inv[2]}"
        else:
            text = f"{{{self.representative}}}"
        if kind == "shifted":
            text = f"c + ({text})"
        return text


def class_of(a):
    F = a.field
    return ConjugacyClass(a, class_invariant(a), orbit(a) if F.is_finite else None)


def same_class(a, c):
    return class_invariant(a) == class_invariant(c)


def _orthogonal_rational(v):
    """A nonzero pure quaternion orthogonal to the pure quaternion v."""
    F = v.field
    _, x, y, z = v.coords
    for e in F.basis()[1:]:
        _, ex, ey, ez = e.coords
        w = F.from_coords((0, y * ez - z * ey, z * ex - x * ez, x * ey - y * ex))
        if w:
            return w
    raise AssertionError("v must be nonzero")


def conjugator(a, c):
    """Some b != 0 with conjugate(a, b) == c, or None when a and c are not conjugate."""
    F = a.field
    if F.is_finite:
        return next((b for b in F.units() if conjugate(a, b) == c), None)
    if not same_class(a, c):
        return None
    if F.has_derivation:
        F0, a0 = _untwisted(a)
        b = conjugator(a0, F0.from_coords((c - F.c).coords))
        return F.from_coords(b.coords)
    if a == c:
        return F.one
    if F.kind is Kind.GAUSSIAN:
        u = c / a  # norm one
        if u == -F.one:
            return F.gen()
        return F.one + u.conj()
    v = a - F.from_coords((a.real, 0, 0, 0))
    w = c - F.from_coords((c.real, 0, 0, 0))
    b = v + w
    return b if b else _orthogonal_rational(v)


# -- centralizer -----------------------------------------------------------------


@dataclass(frozen=True)
class Centralizer:
    """C(a) = {b : ^b a = a} u {0} as a base-field subspace of K."""

    representative: Scalar
    basis: tuple

    @property
    def dimension(self):
        return len(self.basis)

    def __contains__(self, b):
        return not (centralizer_operator(self.representative)(b))

    def elements(self):
        """All elements (finite fields only)."""
        from itertools import product
        F = self.representative.field
        out = set()
        for coeffs in product(range(F.p), repeat=len(self.basis)):
            x = F.zero
            for c, e in zip(coeffs, self.basis):
                x = x + F.from_int(c) * e
            out.add(x)
        return sorted(out, key=Scalar.sort_key)


def centralizer_operator(a):
    """The base-field linear map b -> sigma(b) a - a b + delta(b)."""
    F = a.field
    op = linearize(F, "rmul", a) @ linearize(F, "sigma") - linearize(F, "lmul", a)
    if F.has_derivation:
        op = op + linearize(F, "delta")
    return op


def centralizer(a):
    return Centralizer(a, tuple(centralizer_operator(a).kernel()))


# -- class polynomial ------------------------------------------------------------


def class_polynomial(a):
    """Monic polynomial whose right roots are exactly the conjugacy class of a."""
    F = a.field
    if F.is_finite:
        P = None
        for c in orbit(a):
            lin = SkewPolynomial.linear(c)
            P = lin if P is None else llcm(P, lin)
        return P
    if F.has_derivation:
        F0, a0 = _untwisted(a)
        return shift_variable(class_polynomial(a0), F, -F.c)
    T = SkewPolynomial.T(F)
    if F.kind is Kind.GAUSSIAN:
        if F.sigma_name == "id":
            return SkewPolynomial.linear(a)
        if not a:
            return T
        return T * T - F.from_int(a.norm())
    if a.is_central():
        return SkewPolynomial.linear(a)
    return T * T - F.from_int(2 * a.real) * T + F.from_int(a.norm())
