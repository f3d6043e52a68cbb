import pytest
from hypothesis import given

from posetalg import FinitePoset
from posetalg.errors import CycleDetected, DuplicateName, NotBounded, UnknownName
from posetalg.poset import bits, compact_set, render_set, single

from conftest import S, leq_matrix, posets


def chain(n):
    names = [str(i) for i in range(n)]
    return FinitePoset.from_covers(names, [(names[i], names[i + 1]) for i in range(n - 1)])


def test_bit_helpers():
    assert list(bits(0b10110)) == [1, 2, 4]
    assert single(0b1000) == 3
    assert single(0) is None and single(0b11) is None


def test_rendering():
    names = ("0", "a", "b'", "1")
    assert render_set(names, 0b0110) == "{a,b'}"
    assert render_set(names, 0b0010) == "a"
    assert render_set(names, 0) == "{}"
    assert compact_set(names, 0b0110) == "ab'"
    assert compact_set(names, 0) == "{}"


def test_from_covers_closes_transitively():
    p = chain(4)
    assert p.leq(0, 3) and not p.leq(3, 0)
    assert p.covers == ((0, 1), (1, 2), (2, 3))


def test_construction_errors():
    with pytest.raises(CycleDetected):
        FinitePoset.from_covers(["a", "b"], [("a", "b"), ("b", "a")])
    with pytest.raises(DuplicateName):
        FinitePoset.from_covers(["a", "a"], [])
    with pytest.raises(UnknownName):
        FinitePoset.from_covers(["a"], [("a", "z")])
    with pytest.raises(CycleDetected):
        FinitePoset.from_leq(["a", "b"], [[True, True], [True, True]])


def test_fig1_cones(fig1):
    assert fig1.lower_cone(S(fig1, "c", "d")) == S(fig1, "0", "a", "b")
    assert fig1.maximal(fig1.lower_cone(S(fig1, "c", "d"))) == S(fig1, "a", "b")
    assert fig1.upper_cone(0) == fig1.full
    assert fig1.bounds() is None
    with pytest.raises(NotBounded):
        fig1.top


def test_bounds_of_fixtures(fig2, fig4):
    assert fig2.poset.names[fig2.bottom] == "0" and fig2.poset.names[fig2.top] == "1"
    assert fig4.size == 12


@given(posets())
def test_dual_swaps_cones(p):
    d = p.dual()
    for A in range(1 << p.size):
        assert d.lower_cone(A) == p.upper_cone(A)
        assert d.maximal(A) == p.minimal(A)


@given(posets())
def test_from_leq_roundtrip(p):
    q = FinitePoset.from_leq(p.names, leq_matrix(p))
    assert q == p
    assert FinitePoset.from_covers(p.names, [(p.names[x], p.names[y]) for x, y in p.covers]) == p


@given(posets())
def test_covers_have_nothing_between(p):
    for x, y in p.covers:
        assert p.leq(x, y) and x != y
        assert not any(z not in (x, y) and p.leq(x, z) and p.leq(z, y) for z in range(p.size))
