"""Functions on finite invariant subsets of K under the (sigma, delta)-action.

Functions are explicit value tables. The skew product

    (f <> g)(x) = f(^{g(x)} x) * g(x)   if g(x) != 0,   else 0

makes all tables a right near-ring; the skew-convex tables form a ring.
Every decision here is made by enumeration over the finite field, so the
definitions are the algorithms.
"""

from itertools import product

from . import action
from .errors import (DomainMismatch, IncompleteCover, NotActionPreserving, NotConvex,
                     NotGLinear, NotInvariant, NotInvertible, Unsupported)
from .scalars import LinearOperator, Scalar
from .skewpoly import evaluate


class FiniteInvariantSet:
    """A finite subset X of K closed under conjugation by every b in K*."""

    def __init__(self, elements, field=None):
        elements = sorted(set(elements), key=Scalar.sort_key)
        if not elements:
            raise ValueError("an invariant set must be nonempty")
        self.field = field or elements[0].field
        if not self.field.is_finite:
            raise Unsupported("invariant sets are enumerated over finite fields only")
        self.elements = tuple(elements)
        self.index = {x: i for i, x in enumerate(self.elements)}
        # act[(b, x)] = ^b x for b in K*, x in X
        self.act = {}
        for b in self.field.units():
            for x in self.elements:
                y = action.conjugate(x, b)
                if y not in self.index:
                    raise NotInvariant(f"^{b} {x} = {y} leaves the set")
                self.act[b, x] = y

    @classmethod
    def orbit_of(cls, a):
        return cls(action.orbit(a), a.field)

    @classmethod
    def whole_field(cls, F):
        return cls(F.elements(), F)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, x):
        return x in self.index

    def __eq__(self, other):
        return isinstance(other, FiniteInvariantSet) and self.elements == other.elements

    def __hash__(self):
        return hash(self.elements)

    def __repr__(self):
        return "{" + ", ".join(map(str, self.elements)) + "}"

    def orbits(self):
        seen, out = set(), []
        for x in self.elements:
            if x not in seen:
                orb = action.orbit(x)
                seen.update(orb)
                out.append(orb)
        return out


class OrbitFunction:
    """A total function X -> K stored as a value table aligned with ``domain``."""

    __slots__ = ("domain", "values")

    def __init__(self, domain, values):
        values = tuple(values)
        if len(values) != len(domain):
            raise ValueError("value table does not match the domain")
        self.domain = domain
        self.values = values

    @classmethod
    def from_dict(cls, domain, table):
        return cls(domain, [table[x] for x in domain.elements])

    @classmethod
    def constant(cls, domain, a):
        return cls(domain, [a] * len(domain))

    @classmethod
    def identity(cls, domain):
        return cls(domain, domain.elements)

    def __call__(self, x):
        return self.values[self.domain.index[x]]

    def as_dict(self):
        return dict(zip(self.domain.elements, self.values))

    def _check(self, other):
        if self.domain != other.domain:
            raise DomainMismatch("functions live on different invariant sets")

    def __eq__(self, other):
        return isinstance(other, OrbitFunction) and self.domain == other.domain \
            and self.values == other.values

    def __hash__(self):
        return hash(self.values)

    def __add__(self, other):
        self._check(other)
        return OrbitFunction(self.domain, [x + y for x, y in zip(self.values, other.values)])

    def __sub__(self, other):
        self._check(other)
        return OrbitFunction(self.domain, [x - y for x, y in zip(self.values, other.values)])

    def __neg__(self):
        return OrbitFunction(self.domain, [-x for x in self.values])

    def __repr__(self):
        return "OrbitFunction({" + ", ".join(f"{x}: {v}" for x, v in zip(self.domain, self.values)) + "})"


def all_functions(domain):
    """Every table X -> K, in lexicographic order of the value tuples."""
    K = domain.field.elements()
    for values in product(K, repeat=len(domain)):
        yield OrbitFunction(domain, values)


def skew_mul(f, g):
    """(f <> g)(x) = f(^{g(x)} x) g(x), or 0 where g vanishes."""
    f._check(g)
    X = f.domain
    zero = X.field.zero
    out = []
    for x, gx in zip(X.elements, g.values):
        out.append(f.values[X.index[X.act[gx, x]]] * gx if gx else zero)
    return OrbitFunction(X, out)


def skew_mul_right(f, g):
    """(f <>_r g)(x) = f(x) g(^{f(x)^-1} x), or 0 where f vanishes."""
    f._check(g)
    X = f.domain
    zero = X.field.zero
    out = []
    for x, fx in zip(X.elements, f.values):
        out.append(fx * g.values[X.index[X.act[fx.inverse(), x]]] if fx else zero)
    return OrbitFunction(X, out)


def scalar_product_table(f, a):
    """f <> a for the constant a: x -> f(^a x) a."""
    X = f.domain
    if not a:
        return (X.field.zero,) * len(X)
    return tuple(f.values[X.index[X.act[a, x]]] * a for x in X.elements)


def is_skew_convex(f):
    """f <> (a + b) == f <> a + f <> b for all a, b in K."""
    K = f.domain.field.elements()
    tables = {a: scalar_product_table(f, a) for a in K}
    for a in K:
        ta = tables[a]
        for b in K:
            tb, tab = tables[b], tables[a + b]
            if any(u + v != w for u, v, w in zip(ta, tb, tab)):
                return False
    return True


def _twisted_map(f):
    """x -> ^{f(x)} x as a list of indices, None where f vanishes."""
    X = f.domain
    return [X.index[X.act[fx, x]] if fx else None for x, fx in zip(X.elements, f.values)]


def has_right_inverse(f):
    """Some g has f <> g == 1: every x admits a in K* with f(^a x) = a^-1."""
    X = f.domain
    units = X.field.units()
    for x in X.elements:
        if not any(f(X.act[a, x]) == a.inverse() for a in units):
            return False
    return True


def has_left_inverse(g):
    """Some f has f <> g == 1: g never vanishes and x -> ^{g(x)} x is 1-1."""
    m = _twisted_map(g)
    return None not in m and len(set(m)) == len(m)


def is_skew_invertible(f):
    """f never vanishes and x -> ^{f(x)} x is a bijection of X."""
    m = _twisted_map(f)
    return None not in m and sorted(m) == list(range(len(m)))


def skew_inverse(f):
    """The two-sided inverse g, built from g(^{f(x)} x) = f(x)^-1."""
    if not is_skew_invertible(f):
        raise NotInvertible("function is not skew invertible")
    X = f.domain
    values = [None] * len(X)
    for i, fx in zip(_twisted_map(f), f.values):
        values[i] = fx.inverse()
    return OrbitFunction(X, values)


def convex_invertibility(f):
    """Invertibility of a skew-convex f: f(X) in K* and each x has f(^a x) = a^-1."""
    if not is_skew_convex(f):
        raise NotConvex("criterion applies to skew-convex functions only")
    return all(f.values) and has_right_inverse(f)


def decompose(f):
    """Restrictions of f to the orbits of its domain, ordered by least element."""
    parts = []
    for orb in f.domain.orbits():
        Xi = FiniteInvariantSet(orb, f.domain.field)
        parts.append(OrbitFunction(Xi, [f(x) for x in Xi.elements]))
    return parts


def recompose(parts, domain=None):
    """Glue restrictions on disjoint orbits back into one function."""
    table = {}
    for part in parts:
        for x, v in zip(part.domain.elements, part.values):
            if x in table:
                raise IncompleteCover(f"{x} is covered twice")
            table[x] = v
    if domain is None:
        domain = FiniteInvariantSet(table, parts[0].domain.field)
    elif set(table) != set(domain.elements):
        raise IncompleteCover("parts do not cover the domain")
    return OrbitFunction.from_dict(domain, table)


def is_action_preserving(phi, X):
    return all(phi[X.act[a, x]] == action.conjugate(phi[x], a) for (a, x) in X.act)


def pullback(phi, f, X):
    """f o phi for an action-preserving map phi: X -> domain(f), given as a dict."""
    if any(phi[x] not in f.domain for x in X.elements):
        raise DomainMismatch("phi does not land in the domain of f")
    if not is_action_preserving(phi, X):
        raise NotActionPreserving("phi(^a x) != ^a phi(x)")
    return OrbitFunction(X, [f(phi[x]) for x in X.elements])


def _base_point(X):
    if len(X.orbits()) != 1:
        raise DomainMismatch("the correspondence with endomorphisms needs a single orbit")
    return X.elements[0]


def endo_of_convex(f):
    """phi_f(x) = f(^x x0) x (and phi_f(0) = 0) as a base-field matrix.

    x0 is the least element of the orbit; under the regular action on K* with
    x0 = 1 this is phi_f(x) = f(x) x.
    """
    X = f.domain
    x0 = _base_point(X)
    if not is_skew_convex(f):
        raise NotConvex("only skew-convex functions correspond to endomorphisms")
    return LinearOperator.from_function(X.field, lambda x: f(X.act[x, x0]) * x if x else x)


def stabilizer(x0):
    """Nonzero elements of K fixing x0, i.e. C(x0)*."""
    return [b for b in x0.field.units() if action.conjugate(x0, b) == x0]


def is_g_linear(M, x0):
    G = stabilizer(x0)
    return all(M(x * c) == M(x) * c for x in x0.field.basis() for c in G)


def convex_of_endo(M, X):
    """Inverse of :func:`endo_of_convex`: f(^x x0) = M(x) x^-1."""
    x0 = _base_point(X)
    if not is_g_linear(M, x0):
        raise NotGLinear("operator does not commute with the stabilizer")
    table = {}
    for x in X.field.units():
        table.setdefault(X.act[x, x0], M(x) * x.inverse())
    return OrbitFunction.from_dict(X, table)


def poly_to_function(P, X):
    """x -> P(x) on the invariant set X."""
    return OrbitFunction(X, [evaluate(P, x) for x in X.elements])


def convex_functions(X):
    """All skew-convex tables on X, by brute force over K^X."""
    return [f for f in all_functions(X) if is_skew_convex(f)]
