"""Exact arithmetic in the three built-in skew fields.

* ``Field.fq(p, modulus, frobenius_power)`` -- F_{p^n} = F_p[g]/(modulus),
  twisted by the Frobenius power x -> x^(p^k).
* ``Field.gaussian(sigma)`` -- Q(i), twisted by complex conjugation or not.
* ``Field.quaternion()`` -- the rational Hamilton quaternions, sigma = id.

Each field may carry an inner sigma-derivation delta_c(x) = c*x - sigma(x)*c.
Elements are :class:`Scalar` values: a coordinate vector over the base field
(F_p or Q) in the fixed basis {1, g, ..., g^(n-1)}, {1, i} or {1, i, j, k}.
"""

import enum
import random
import re
from fractions import Fraction
from functools import lru_cache
from itertools import product

from . import linalg
from .errors import ConfigError, DivisionByZero, MixedFields, UnknownLiteral


class Kind(enum.Enum):
    FQ = "fq"
    GAUSSIAN = "gaussian"
    QUATERNION = "quaternion"


def is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _polymod(a, m, p):
    """Remainder of a by the monic m over F_p (coefficients low-to-high)."""
    a = [x % p for x in a]
    dm = len(m) - 1
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i]
        if c:
            for j in range(dm + 1):
                a[i - dm + j] = (a[i - dm + j] - c * m[j]) % p
    return a[:dm]


def is_irreducible_mod_p(modulus, p):
    """Trial division by every monic polynomial of degree 1..n//2."""
    n = len(modulus) - 1
    for d in range(1, n // 2 + 1):
        for low in product(range(p), repeat=d):
            divisor = list(low) + [1]
            if not any(_polymod(modulus, divisor, p)):
                return False
    return True


@lru_cache(maxsize=None)
def _fq_mul(p, modulus, a, b):
    n = len(modulus) - 1
    prod = [0] * (2 * n - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    prod[i + j] += x * y
    for i in range(2 * n - 2, n - 1, -1):
        c = prod[i] % p
        if c:
            for j in range(n + 1):
                prod[i - n + j] -= c * modulus[j]
    return tuple(x % p for x in prod[:n])


def _fq_pow(p, modulus, a, e):
    n = len(modulus) - 1
    result = (1,) + (0,) * (n - 1)
    base = a
    while e:
        if e & 1:
            result = _fq_mul(p, modulus, result, base)
        base = _fq_mul(p, modulus, base, base)
        e >>= 1
    return result


@lru_cache(maxsize=None)
def _fq_inv(p, modulus, a):
    q = p ** (len(modulus) - 1)
    return _fq_pow(p, modulus, a, q - 2)


@lru_cache(maxsize=None)
def _fq_frob(p, modulus, a, k):
    return _fq_pow(p, modulus, a, p ** k)


def _qmul(x, y):
    a1, b1, c1, d1 = x
    a2, b2, c2, d2 = y
    return (
        a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
        a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
        a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
        a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
    )


class Field:
    """Descriptor of a built-in skew field K with its twist sigma and derivation delta.

    Use the constructors :meth:`fq`, :meth:`gaussian` and :meth:`quaternion`.
    """

    def __init__(self, kind, p=None, modulus=None, frobenius_power=0, sigma="id", derivation=None):
        self.kind = Kind(kind)
        if self.kind is Kind.FQ:
            if p is None or not is_prime(p):
                raise ConfigError(f"p must be prime, got {p!r}")
            modulus = tuple(int(c) % p for c in modulus)
            if len(modulus) < 2 or modulus[-1] != 1:
                raise ConfigError("modulus must be monic of degree >= 1")
            if not is_irreducible_mod_p(modulus, p):
                raise ConfigError(f"modulus {list(modulus)} is reducible over F_{p}")
            n = len(modulus) - 1
            if not 0 <= frobenius_power < n:
                raise ConfigError(f"frobenius_power must lie in [0, {n})")
            self.p, self.modulus, self.frobenius_power = p, modulus, int(frobenius_power)
            self.dim = n
            self.sigma_name = "frobenius"
            self.base = linalg.BaseField(p)
        else:
            self.p, self.modulus, self.frobenius_power = None, None, 0
            if self.kind is Kind.GAUSSIAN:
                if sigma not in ("conj", "id"):
                    raise ConfigError(f"gaussian sigma must be 'conj' or 'id', got {sigma!r}")
                self.dim = 2
            else:
                if sigma != "id":
                    raise ConfigError("quaternions only support sigma = id")
                self.dim = 4
            self.sigma_name = sigma
            self.base = linalg.BaseField(None)
        self._c = None
        self._elements = None
        if derivation is not None:
            if isinstance(derivation, Scalar):
                derivation = derivation.coords
            c = self.parse(derivation) if isinstance(derivation, str) else self.from_coords(derivation)
            self._c = c.coords if c else None
            # delta_c vanishes identically when c*x == sigma(x)*c for all x
            if self._c is not None and not any(self.delta(e) for e in self.basis()):
                self._c = None

    # -- constructors -------------------------------------------------------

    @classmethod
    def fq(cls, p, modulus, frobenius_power=1, derivation=None):
        return cls(Kind.FQ, p=p, modulus=modulus, frobenius_power=frobenius_power,
                   derivation=derivation)

    @classmethod
    def gaussian(cls, sigma="conj", derivation=None):
        return cls(Kind.GAUSSIAN, sigma=sigma, derivation=derivation)

    @classmethod
    def quaternion(cls, derivation=None):
        return cls(Kind.QUATERNION, sigma="id", derivation=derivation)

    def with_derivation(self, c):
        """Same field and sigma, derivation delta_c (``None`` for delta = 0)."""
        coords = c.coords if c else None
        if self.kind is Kind.FQ:
            return Field.fq(self.p, self.modulus, self.frobenius_power, derivation=coords)
        return Field(self.kind, sigma=self.sigma_name, derivation=coords)

    # -- identity -----------------------------------------------------------

    def _key(self):
        return (self.kind, self.p, self.modulus, self.frobenius_power, self.sigma_name, self._c)

    def __eq__(self, other):
        return isinstance(other, Field) and (self is other or self._key() == other._key())

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        if self.kind is Kind.FQ:
            s = f"GF({self.p}^{self.dim}, modulus={list(self.modulus)}, sigma=x^{self.p}^{self.frobenius_power}"
        else:
            s = f"{self.kind.value}(sigma={self.sigma_name}"
        if self._c is not None:
            s += f", delta=inner({self.c})"
        return s + ")"

    # -- basic data ---------------------------------------------------------

    @property
    def is_finite(self):
        return self.kind is Kind.FQ

    @property
    def order(self):
        return self.p ** self.dim if self.is_finite else None

    @property
    def c(self):
        """The derivation constant, or None when delta = 0."""
        return None if self._c is None else Scalar(self, self._c)

    @property
    def has_derivation(self):
        return self._c is not None

    @property
    def sigma_is_identity(self):
        if self.kind is Kind.FQ:
            return self.frobenius_power == 0
        return self.sigma_name == "id"

    @property
    def is_commutative(self):
        return self.kind is not Kind.QUATERNION

    @property
    def zero(self):
        return Scalar(self, (self.base.zero,) * self.dim)

    @property
    def one(self):
        return Scalar(self, (self.base.one,) + (self.base.zero,) * (self.dim - 1))

    def from_int(self, n):
        return Scalar(self, (self.base(n),) + (self.base.zero,) * (self.dim - 1))

    def from_coords(self, coords):
        coords = tuple(coords)
        if len(coords) != self.dim:
            raise ValueError(f"expected {self.dim} coordinates, got {len(coords)}")
        return Scalar(self, tuple(self.base(c) for c in coords))

    def basis(self):
        bf = self.base
        return [Scalar(self, tuple(bf.one if i == j else bf.zero for j in range(self.dim)))
                for i in range(self.dim)]

    def gen(self):
        """g for F_q, i for the char-0 fields."""
        return self.basis()[1] if self.dim > 1 else self.one

    def elements(self):
        """All elements of a finite field in canonical order (see :meth:`Scalar.sort_key`)."""
        if not self.is_finite:
            raise ValueError("infinite field")
        if self._elements is None:
            out = []
            for idx in range(self.order):
                coords, m = [], idx
                for _ in range(self.dim):
                    coords.append(m % self.p)
                    m //= self.p
                out.append(Scalar(self, tuple(coords)))
            self._elements = tuple(out)
        return self._elements

    def units(self):
        return self.elements()[1:]

    def random_element(self, rng=random, height=5, zero_ok=True):
        while True:
            if self.is_finite:
                x = Scalar(self, tuple(rng.randrange(self.p) for _ in range(self.dim)))
            else:
                x = self.from_coords(Fraction(rng.randint(-height, height), rng.randint(1, height))
                                     for _ in range(self.dim))
            if zero_ok or x:
                return x

    # -- twist --------------------------------------------------------------

    def sigma(self, x):
        if self.kind is Kind.FQ:
            if not self.frobenius_power:
                return x
            return Scalar(self, _fq_frob(self.p, self.modulus, x.coords, self.frobenius_power))
        if self.kind is Kind.GAUSSIAN and self.sigma_name == "conj":
            a, b = x.coords
            return Scalar(self, (a, -b))
        return x

    def sigma_inv(self, x):
        if self.kind is Kind.FQ:
            if not self.frobenius_power:
                return x
            k = self.dim - self.frobenius_power
            return Scalar(self, _fq_frob(self.p, self.modulus, x.coords, k))
        return self.sigma(x)  # conj and id are involutions

    def sigma_pow(self, x, m):
        step = self.sigma if m >= 0 else self.sigma_inv
        for _ in range(abs(m)):
            x = step(x)
        return x

    def delta(self, x):
        if self._c is None:
            return self.zero
        c = Scalar(self, self._c)
        return c * x - self.sigma(x) * c

    # -- literals -----------------------------------------------------------

    def parse(self, text):
        return parse_element(self, text)


class Scalar:
    """An exact element of a built-in skew field. Immutable."""

    __slots__ = ("field", "coords")

    def __init__(self, field, coords):
        self.field = field
        self.coords = coords

    def _check(self, other):
        if not isinstance(other, Scalar):
            return False
        if other.field != self.field:
            raise MixedFields(f"{self.field!r} vs {other.field!r}")
        return True

    def __eq__(self, other):
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.coords == other.coords and self.field == other.field

    def __hash__(self):
        return hash(self.coords)

    def __bool__(self):
        return any(self.coords)

    def is_zero(self):
        return not any(self.coords)

    def __add__(self, other):
        if not self._check(other):
            return NotImplemented
        bf = self.field.base
        return Scalar(self.field, tuple(bf.add(x, y) for x, y in zip(self.coords, other.coords)))

    def __sub__(self, other):
        if not self._check(other):
            return NotImplemented
        bf = self.field.base
        return Scalar(self.field, tuple(bf.sub(x, y) for x, y in zip(self.coords, other.coords)))

    def __neg__(self):
        bf = self.field.base
        return Scalar(self.field, tuple(bf.neg(x) for x in self.coords))

    def __mul__(self, other):
        if not self._check(other):
            return NotImplemented
        F = self.field
        if F.kind is Kind.FQ:
            return Scalar(F, _fq_mul(F.p, F.modulus, self.coords, other.coords))
        if F.kind is Kind.GAUSSIAN:
            a, b = self.coords
            c, d = other.coords
            return Scalar(F, (a * c - b * d, a * d + b * c))
        return Scalar(F, _qmul(self.coords, other.coords))

    def inverse(self):
        if not self:
            raise DivisionByZero("inverse of zero")
        F = self.field
        if F.kind is Kind.FQ:
            return Scalar(F, _fq_inv(F.p, F.modulus, self.coords))
        n = self.norm()
        return Scalar(F, tuple(x / n for x in self.conj().coords))

    def __truediv__(self, other):
        if not self._check(other):
            return NotImplemented
        return self * other.inverse()

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        result, base = self.field.one, self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # char-0 helpers: these are the algebraic conjugate and norm, not sigma

    def conj(self):
        if self.field.kind is Kind.FQ:
            raise ValueError("no conjugation on F_q")
        return Scalar(self.field, (self.coords[0],) + tuple(-x for x in self.coords[1:]))

    def norm(self):
        """x * conj(x), the sum of squared coordinates."""
        if self.field.kind is Kind.FQ:
            raise ValueError("no norm form on F_q")
        return sum((x * x for x in self.coords), self.field.base.zero)

    @property
    def real(self):
        return self.coords[0]

    def is_central(self):
        """True when the element lies in the prime field embedded as constants."""
        return not any(self.coords[1:])

    def sort_key(self):
        """Canonical order: F_q by the base-p integer sum c_i p^i, else coordinates."""
        if self.field.kind is Kind.FQ:
            p = self.field.p
            return sum(c * p ** i for i, c in enumerate(self.coords))
        return self.coords

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __str__(self):
        return format_element(self)

    def __repr__(self):
        return f"Scalar({self})"


# -- operations with the module-level names used throughout ---------------------


def arith(op, a, b=None):
    """Dispatch ``op`` in {add, sub, mul, inv, neg} on scalars."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "inv":
        return a.inverse()
    if op == "neg":
        return -a
    raise ValueError(f"unknown op {op!r}")


def twist(a):
    """(sigma(a), delta(a))."""
    return a.field.sigma(a), a.field.delta(a)


class LinearOperator:
    """A base-field linear map K -> K as a matrix acting on coordinate columns."""

    __slots__ = ("field", "matrix")

    def __init__(self, field, matrix):
        self.field = field
        self.matrix = matrix

    @classmethod
    def from_function(cls, field, fn):
        cols = [fn(e).coords for e in field.basis()]
        return cls(field, linalg.from_columns(cols, field.base))

    @classmethod
    def identity(cls, field):
        return cls(field, linalg.identity(field.dim, field.base))

    def __call__(self, x):
        return Scalar(self.field, linalg.matvec(self.matrix, x.coords, self.field.base))

    def __matmul__(self, other):
        return LinearOperator(self.field, linalg.matmul(self.matrix, other.matrix, self.field.base))

    def __add__(self, other):
        return LinearOperator(self.field, linalg.matadd(self.matrix, other.matrix, self.field.base))

    def __sub__(self, other):
        return LinearOperator(self.field, linalg.matsub(self.matrix, other.matrix, self.field.base))

    def __eq__(self, other):
        return isinstance(other, LinearOperator) and self.matrix == other.matrix \
            and self.field == other.field

    def __hash__(self):
        return hash(self.matrix)

    def __repr__(self):
        return f"LinearOperator({[list(map(str, r)) for r in self.matrix]})"

    def rank(self):
        return linalg.rank(self.matrix, self.field.base)

    def is_singular(self):
        return linalg.is_singular(self.matrix, self.field.base)

    def det(self):
        return linalg.det(self.matrix, self.field.base)

    def solve(self, y):
        """Some x with self(x) == y, or None."""
        x = linalg.solve(self.matrix, y.coords, self.field.base)
        return None if x is None else Scalar(self.field, x)

    def kernel(self):
        return [Scalar(self.field, v) for v in linalg.nullspace(self.matrix, self.field.base)]


def linearize(field, which, a=None):
    """Matrix of sigma, delta, x -> a*x ("lmul") or x -> x*a ("rmul")."""
    if which == "sigma":
        return LinearOperator.from_function(field, field.sigma)
    if which == "sigma_inv":
        return LinearOperator.from_function(field, field.sigma_inv)
    if which == "delta":
        return LinearOperator.from_function(field, field.delta)
    if which == "lmul":
        return LinearOperator.from_function(field, lambda x: a * x)
    if which == "rmul":
        return LinearOperator.from_function(field, lambda x: x * a)
    raise ValueError(f"unknown operator {which!r}")


# -- literal syntax -------------------------------------------------------------

_UNITS = {Kind.GAUSSIAN: "i", Kind.QUATERNION: "ijk"}


def format_element(x):
    F = x.field
    if F.kind is Kind.FQ:
        terms = []
        for e in range(F.dim - 1, -1, -1):
            c = x.coords[e]
            if not c:
                continue
            mono = "" if e == 0 else ("g" if e == 1 else f"g^{e}")
            if not mono:
                terms.append(str(c))
            else:
                terms.append(mono if c == 1 else f"{c}*{mono}")
        return "+".join(terms) or "0"
    units = [""] + list(_UNITS[F.kind])
    out = ""
    for c, u in zip(x.coords, units):
        if not c:
            continue
        if u and c == 1:
            term = u
        elif u and c == -1:
            term = "-" + u
        else:
            term = f"{c}{u}"
        out += term if not out or term.startswith("-") else "+" + term
    return out or "0"


_NUM = re.compile(r"\d+(?:/\d+)?")


def parse_element(field, text):
    """Parse an element literal: F_q "g^3+2*g+1" or "[1,2,0,1]"; "3/2+5/7i"; "1-2i+3j-4/5k"."""
    s = text.strip()
    if not s:
        raise UnknownLiteral("empty element literal")
    if field.kind is Kind.FQ:
        return _parse_fq(field, s)
    return _parse_char0(field, s)


def _terms(s, units, allow_power):
    """Yield (sign, coefficient or None, unit or None, exponent) for each signed term."""
    pos, n, first = 0, len(s), True
    while True:
        while pos < n and s[pos].isspace():
            pos += 1
        if pos == n:
            if first:
                raise UnknownLiteral(f"empty literal {s!r}")
            return
        sign = 1
        if s[pos] in "+-":
            sign = -1 if s[pos] == "-" else 1
            pos += 1
        elif not first:
            raise UnknownLiteral(f"expected '+' or '-' at offset {pos} in {s!r}")
        while pos < n and s[pos].isspace():
            pos += 1
        coef = None
        m = _NUM.match(s, pos)
        if m:
            num, _, den = m.group().partition("/")
            if den and int(den) == 0:
                raise UnknownLiteral(f"zero denominator in {s!r}")
            coef = Fraction(int(num), int(den) if den else 1)
            pos = m.end()
            while pos < n and s[pos].isspace():
                pos += 1
            if pos < n and s[pos] == "*":
                pos += 1
                while pos < n and s[pos].isspace():
                    pos += 1
                if pos == n or s[pos] not in units:
                    raise UnknownLiteral(f"expected unit after '*' in {s!r}")
        unit, exp = None, 1
        if pos < n and s[pos] in units:
            unit = s[pos]
            pos += 1
            if allow_power and pos < n and s[pos] == "^":
                m = re.compile(r"\d+").match(s, pos + 1)
                if not m:
                    raise UnknownLiteral(f"bad exponent in {s!r}")
                exp = int(m.group())
                pos = m.end()
        if coef is None and unit is None:
            raise UnknownLiteral(f"cannot parse element literal {s!r}")
        yield sign, coef, unit, exp
        first = False


def _parse_fq(field, s):
    if s.startswith("["):
        if not s.endswith("]"):
            raise UnknownLiteral(f"unterminated coefficient list {s!r}")
        body = s[1:-1].strip()
        try:
            coeffs = [int(c) for c in body.split(",")] if body else []
        except ValueError:
            raise UnknownLiteral(f"bad coefficient list {s!r}") from None
        if len(coeffs) > field.dim:
            raise UnknownLiteral(f"too many coefficients for degree-{field.dim} extension")
        coeffs += [0] * (field.dim - len(coeffs))
        return field.from_coords(coeffs)
    total = field.zero
    g = field.gen()
    for sign, coef, unit, exp in _terms(s, "g", allow_power=True):
        if coef is not None and coef.denominator != 1:
            raise UnknownLiteral(f"fractions are not F_q literals: {s!r}")
        c = field.from_int(sign * (1 if coef is None else coef.numerator))
        total = total + (c * g ** exp if unit else c)
    return total


def _parse_char0(field, s):
    units = _UNITS[field.kind]
    coords = [Fraction(0)] * field.dim
    for sign, coef, unit, _ in _terms(s, units, allow_power=False):
        idx = 0 if unit is None else 1 + units.index(unit)
        coords[idx] += sign * (Fraction(1) if coef is None else coef)
    return field.from_coords(coords)
