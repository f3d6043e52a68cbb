import pytest

from posetalg import (
    ShefferStructure,
    check_sheffer_axioms,
    max_l,
    min_u,
    poset_from_sheffer,
    sheffer_from_poset,
    sheffer_roundtrip,
)
from posetalg.enumeration import PosetStream
from posetalg.errors import AxiomsFail, EmptyArgument

from conftest import S

# x|y = Max L(x', y') on the chain 0 < 1
TWO = ShefferStructure(("0", "1"), [[0b10, 0b01], [0b01, 0b01]])


def test_two_element_stroke():
    assert check_sheffer_axioms(TWO).ok
    cp = poset_from_sheffer(TWO)
    assert cp.poset.leq(0, 1) and cp.comp == (1, 0)
    assert sheffer_from_poset(cp) == TWO


def test_corrupted_stroke_fails_double_stroke_axiom():
    # 0|0 set to {0} instead of {1}
    bad = ShefferStructure(("0", "1"), [[0b01, 0b01], [0b01, 0b01]])
    report = check_sheffer_axioms(bad)
    assert not report["ii"].passed
    with pytest.raises(AxiomsFail):
        poset_from_sheffer(bad)


@pytest.mark.parametrize("name", ["fig2", "fig3", "fig4"])
def test_fixtures_give_sheffer_structures(name, request):
    cp = request.getfixturevalue(name)
    s = sheffer_from_poset(cp)
    report = check_sheffer_axioms(s)
    assert report.ok, report.render()
    assert len(report.verdicts) == 7
    assert poset_from_sheffer(s) == cp
    assert sheffer_roundtrip(cp)


def test_stroke_recovers_both_cone_operators(fig2):
    s = sheffer_from_poset(fig2)
    p = fig2.poset
    for x in range(p.size):
        for y in range(p.size):
            px, py = s.comp(x), s.comp(y)
            assert s.stroke[px][py] == max_l(p, 1 << x | 1 << y)
            assert s.prime(s.stroke[x][y]) == min_u(p, 1 << x | 1 << y)


def test_subset_lift(fig3):
    s = sheffer_from_poset(fig3)
    p = fig3.poset
    A, B = S(p, "a", "b"), S(p, "c")
    assert s.lift(A, B) == max_l(p, fig3.prime(A), fig3.prime(B))
    with pytest.raises(EmptyArgument):
        s.lift(0, B)


def test_complement_from_stroke(fig4):
    s = sheffer_from_poset(fig4)
    assert all(s.comp(x) == fig4.comp[x] for x in range(fig4.size))


@pytest.mark.parametrize("n", [4, 6])
def test_sheffer_on_enumerated_instances(n):
    for cp in PosetStream(n, "complemented", "natural"):
        s = sheffer_from_poset(cp)
        assert check_sheffer_axioms(s).ok
        assert poset_from_sheffer(s) == cp
