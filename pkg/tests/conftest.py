from fractions import Fraction

import pytest
from hypothesis import settings, strategies as st

from skewconvex.scalars import Field, Scalar
from skewconvex.skewpoly import SkewPolynomial

settings.register_profile("default", max_examples=25, deadline=None)
settings.load_profile("default")

F4 = Field.fq(2, [1, 1, 1])
F4D = Field.fq(2, [1, 1, 1], derivation="g")
F9 = Field.fq(3, [1, 0, 1])
F9D = Field.fq(3, [1, 0, 1], derivation="g")
GC = Field.gaussian("conj")
GI = Field.gaussian("id")
GCD = Field.gaussian("conj", derivation="1+i")
H = Field.quaternion()
HD = Field.quaternion(derivation="j")

FINITE = [F4, F4D, F9, F9D]
CHAR0 = [GC, GI, GCD, H, HD]
ALL = FINITE + CHAR0

# acceptance results, reported at the end of the session
ACCEPTANCE = {}


def _ids(fields):
    return [repr(F) for F in fields]


@pytest.fixture(params=ALL, ids=_ids(ALL))
def field(request):
    return request.param


@pytest.fixture(params=FINITE, ids=_ids(FINITE))
def finite_field(request):
    return request.param


@pytest.fixture(params=CHAR0, ids=_ids(CHAR0))
def char0_field(request):
    return request.param


small_fraction = st.builds(Fraction, st.integers(-6, 6), st.integers(1, 4))


def elements(F, nonzero=False):
    if F.is_finite:
        s = st.integers(0, F.order - 1).map(lambda i: F.elements()[i])
    else:
        s = st.tuples(*[small_fraction] * F.dim).map(F.from_coords)
    return s.filter(bool) if nonzero else s


def polys(F, max_degree=3, nonzero=False):
    s = st.lists(elements(F), max_size=max_degree + 1).map(lambda cs: SkewPolynomial(F, cs))
    return s.filter(bool) if nonzero else s


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        name, ok = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n:2d}  {'PASS' if ok else 'FAIL'}  {name}")


__all__ = ["F4", "F4D", "F9", "F9D", "GC", "GI", "GCD", "H", "HD", "Scalar", "elements", "polys"]
