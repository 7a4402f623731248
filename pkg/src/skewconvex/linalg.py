"""Dense exact linear algebra over a prime field F_p or over the rationals.

Matrices are tuples of row tuples. Entries are ``int`` reduced mod p for F_p
and ``gmpy2.mpq`` for Q, which compares and hashes like
:class:`fractions.Fraction` but is much faster. Everything here is small (the
dimension of a skew field over its base field is at most 4 for the built-ins
and ``n`` for F_{p^n}), so plain row reduction is the right tool.
"""

from gmpy2 import mpq


class BaseField:
    """F_p when ``p`` is a prime, Q when ``p`` is None."""

    __slots__ = ("p",)

    def __init__(self, p=None):
        self.p = p

    def __eq__(self, other):
        return isinstance(other, BaseField) and self.p == other.p

    def __hash__(self):
        return hash(("BaseField", self.p))

    def __repr__(self):
        return "QQ" if self.p is None else f"GF({self.p})"

    @property
    def zero(self):
        return 0 if self.p else mpq(0)

    @property
    def one(self):
        return 1 if self.p else mpq(1)

    def __call__(self, x):
        if self.p:
            return int(x) % self.p
        return mpq(x)

    def add(self, x, y):
        return (x + y) % self.p if self.p else x + y

    def sub(self, x, y):
        return (x - y) % self.p if self.p else x - y

    def mul(self, x, y):
        return (x * y) % self.p if self.p else x * y

    def neg(self, x):
        return (-x) % self.p if self.p else -x

    def inv(self, x):
        if not x:
            raise ZeroDivisionError("inverse of zero in base field")
        return pow(x, -1, self.p) if self.p else 1 / x


def identity(n, bf):
    return tuple(tuple(bf.one if i == j else bf.zero for j in range(n)) for i in range(n))


def zeros(n, bf):
    return tuple(tuple(bf.zero for _ in range(n)) for _ in range(n))


def from_columns(cols, bf):
    n = len(cols)
    return tuple(tuple(bf(cols[j][i]) for j in range(n)) for i in range(len(cols[0])))


def matmul(A, B, bf):
    Bt = list(zip(*B))
    out = []
    for row in A:
        out_row = []
        for col in Bt:
            s = bf.zero
            for x, y in zip(row, col):
                if x and y:
                    s = s + x * y
            out_row.append(bf(s) if bf.p else s)
        out.append(tuple(out_row))
    return tuple(out)


def matvec(A, v, bf):
    out = []
    for row in A:
        s = bf.zero
        for x, y in zip(row, v):
            if x and y:
                s = s + x * y
        out.append(bf(s) if bf.p else s)
    return tuple(out)


def matadd(A, B, bf):
    return tuple(tuple(bf.add(x, y) for x, y in zip(r, s)) for r, s in zip(A, B))


def matsub(A, B, bf):
    return tuple(tuple(bf.sub(x, y) for x, y in zip(r, s)) for r, s in zip(A, B))


def rref(A, bf):
    """Reduced row echelon form; returns (rows, pivot_columns)."""
    M = [list(r) for r in A]
    nrows = len(M)
    ncols = len(M[0]) if M else 0
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, nrows) if M[i][c]), None)
        if pivot is None:
            continue
        M[r], M[pivot] = M[pivot], M[r]
        inv = bf.inv(M[r][c])
        M[r] = [bf.mul(x, inv) for x in M[r]]
        for i in range(nrows):
            if i != r and M[i][c]:
                f = M[i][c]
                M[i] = [bf.sub(x, bf.mul(f, y)) for x, y in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return M, pivots


def rank(A, bf):
    return len(rref(A, bf)[1])


def is_singular(A, bf):
    return rank(A, bf) < len(A)


def nullspace(A, bf):
    """Basis of {v : A v = 0}, one vector per free column."""
    ncols = len(A[0])
    M, pivots = rref(A, bf)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [bf.zero] * ncols
        v[fc] = bf.one
        for row, pc in zip(M, pivots):
            v[pc] = bf.neg(row[fc])
        basis.append(tuple(v))
    return basis


def solve(A, b, bf):
    """Return one solution x of A x = b, or None when b is outside the image."""
    n = len(A)
    ncols = len(A[0])
    aug = [tuple(row) + (bf(bi),) for row, bi in zip(A, b)]
    M, pivots = rref(aug, bf)
    if ncols in pivots:
        return None
    x = [bf.zero] * ncols
    for row, pc in zip(M, pivots):
        x[pc] = row[ncols]
    assert len(M) == n
    return tuple(x)


def det(A, bf):
    """Determinant by row reduction."""
    M = [list(r) for r in A]
    n = len(M)
    d = bf.one
    for c in range(n):
        pivot = next((i for i in range(c, n) if M[i][c]), None)
        if pivot is None:
            return bf.zero
        if pivot != c:
            M[c], M[pivot] = M[pivot], M[c]
            d = bf.neg(d)
        d = bf.mul(d, M[c][c])
        inv = bf.inv(M[c][c])
        for i in range(c + 1, n):
            if M[i][c]:
                f = bf.mul(M[i][c], inv)
                M[i] = [bf.sub(x, bf.mul(f, y)) for x, y in zip(M[i], M[c])]
    return d
