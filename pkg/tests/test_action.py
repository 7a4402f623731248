import pytest
from hypothesis import assume, given, strategies as st

from conftest import ALL, CHAR0, F4, F4D, F9, FINITE, GC, GI, H, elements
from skewconvex import action
from skewconvex.errors import Unsupported, ZeroConjugator
from skewconvex.skewpoly import evaluate


def test_pinned_conjugations():
    assert action.conjugate(H.parse("i"), H.parse("j")) == H.parse("-i")
    assert action.conjugate(GC.from_int(2), GC.parse("1+i")) == GC.parse("-2i")
    with pytest.raises(ZeroConjugator):
        action.conjugate(H.one, H.zero)


def test_small_orbits():
    fmt = lambda xs: [str(x) for x in xs]
    assert fmt(action.orbit(F4.one)) == ["1", "g", "g+1"]
    assert [fmt(o) for o in action.orbits(F9)] == [
        ["0"], ["1", "2", "g", "2*g"], ["g+1", "g+2", "2*g+1", "2*g+2"]]
    with pytest.raises(Unsupported):
        action.orbit(GC.one)


def test_centralizer_of_one_in_f4():
    # sigma(b) = b means b in F_2
    assert [str(x) for x in action.centralizer(F4.one).elements()] == ["0", "1"]
    assert action.centralizer(H.parse("i")).dimension == 2
    assert action.centralizer(GI.parse("i")).dimension == 2


def test_class_descriptions():
    assert action.class_of(H.parse("k")).describe() == "Re = 0, norm = 1"
    assert action.class_of(GC.parse("1+2i")).describe() == "norm = 5"


@pytest.mark.parametrize("F", FINITE, ids=repr)
def test_finite_orbits_partition_the_field(F):
    seen = [x for orb in action.orbits(F) for x in orb]
    assert sorted(seen, key=lambda x: x.sort_key()) == list(F.elements())
    for a in F.elements():
        assert a in action.orbit(a)
        # orbit-stabilizer
        stab = sum(1 for b in F.units() if action.conjugate(a, b) == a)
        assert stab * len(action.orbit(a)) == F.order - 1
        assert len(action.centralizer(a).elements()) == stab + 1


@pytest.mark.parametrize("F", ALL, ids=repr)
@given(data=st.data())
def test_action_laws(F, data):
    a = data.draw(elements(F))
    b, b2 = data.draw(elements(F, nonzero=True)), data.draw(elements(F, nonzero=True))
    assert action.conjugate(a, F.one) == a
    assert action.conjugate(action.conjugate(a, b2), b) == action.conjugate(a, b * b2)
    c = action.conjugate(a, b)
    assert action.same_class(a, c)
    assert c in action.class_of(a)
    x = action.conjugator(a, c)
    assert x and action.conjugate(a, x) == c


@pytest.mark.parametrize("F", CHAR0, ids=repr)
@given(data=st.data())
def test_invariant_separates_classes(F, data):
    # if the invariants differ no conjugator may exist; if equal one must
    a, c = data.draw(elements(F)), data.draw(elements(F))
    x = action.conjugator(a, c)
    if action.same_class(a, c):
        assert x and action.conjugate(a, x) == c
    else:
        assert x is None


@pytest.mark.parametrize("F", ALL, ids=repr)
@given(data=st.data())
def test_centralizer_is_the_stabilizer(F, data):
    a = data.draw(elements(F))
    C = action.centralizer(a)
    for b in C.basis:
        assert action.conjugate(a, b) == a
    b = data.draw(elements(F, nonzero=True))
    assert (b in C) == (action.conjugate(a, b) == a)


@pytest.mark.parametrize("F", ALL, ids=repr)
@given(data=st.data())
def test_class_polynomial_roots(F, data):
    a = data.draw(elements(F))
    P = action.class_polynomial(a)
    assert P.is_monic()
    b = data.draw(elements(F, nonzero=True))
    assert not evaluate(P, action.conjugate(a, b))
    z = data.draw(elements(F))
    assume(not action.same_class(a, z))
    assert evaluate(P, z)


@pytest.mark.parametrize("F", [F4, F4D, F9], ids=repr)
def test_finite_class_polynomial_degree(F):
    # the right roots are exactly the class
    for orb in action.orbits(F):
        P = action.class_polynomial(orb[0])
        assert [c for c in F.elements() if not evaluate(P, c)] == list(orb)


def test_centralizer_bases():
    assert action.centralizer(GC.from_int(2)).basis == (GC.one,)
    basis = action.centralizer(H.parse("i")).basis
    assert all(b * H.parse("i") == H.parse("i") * b for b in basis) and len(basis) == 2
