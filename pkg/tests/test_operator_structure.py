import pytest
from hypothesis import given, settings

from posetalg import (
    FinitePoset,
    OperatorStructure,
    check_axioms,
    max_l,
    min_u,
    poset_from_structure,
    roundtrip_structure,
    structure_from_poset,
)
from posetalg.errors import AxiomsFail, EmptyArgument, NotBounded

from conftest import S, bounded_posets


def two_chain_structure(join01=0b10):
    # carrier 0 < 1
    join = [[0b01, join01], [join01, 0b10]]
    meet = [[0b01, 0b01], [0b01, 0b10]]
    return OperatorStructure(("0", "1"), join, meet, 0, 1)


def test_fixtures_give_operator_structures(fig2, fig3, fig4):
    for cp in (fig2, fig3, fig4):
        s = structure_from_poset(cp.poset)
        report = check_axioms(s)
        assert report.ok, report.render()
        assert len(report.verdicts) == 6
        assert poset_from_structure(s) == cp.poset
        assert roundtrip_structure(s)


def test_fig2_table_entries(fig2):
    s = structure_from_poset(fig2.poset)
    a, b = fig2.poset.index("a"), fig2.poset.index("b")
    assert s.join[a][b] == min_u(fig2.poset, S(fig2, "a", "b"))
    assert s.meet[a][b] == max_l(fig2.poset, S(fig2, "a", "b"))


def test_unbounded_poset_rejected(fig1):
    with pytest.raises(NotBounded):
        structure_from_poset(fig1)


def test_corrupted_join_breaks_identity_axiom():
    s = two_chain_structure(join01=0b01)
    report = check_axioms(s)
    assert not report["iii"].passed
    assert report["iii"].witness["x"] == "1"
    with pytest.raises(AxiomsFail) as exc:
        poset_from_structure(s)
    assert "iii" in exc.value.report.failed_labels()


def test_table_validation():
    with pytest.raises(ValueError):
        OperatorStructure(("0", "1"), [[1]], [[1, 1], [1, 2]], 0, 1)
    with pytest.raises(ValueError):
        OperatorStructure(("0", "1"), [[1, 4], [2, 2]], [[1, 1], [1, 2]], 0, 1)


def test_lifts_reject_empty_arguments():
    s = two_chain_structure()
    with pytest.raises(EmptyArgument):
        s.lift_join(0, 1)
    with pytest.raises(EmptyArgument):
        s.lift_meet(1, 0)


@settings(max_examples=60, deadline=None)
@given(bounded_posets)
def test_lifts_equal_cone_operators_on_all_subsets(p):
    s = structure_from_poset(p)
    full = 1 << p.size
    for A in range(1, full):
        for B in (1 << (A.bit_length() - 1), A, full - 1):
            assert s.lift_join(A, B) == min_u(p, A, B)
            assert s.lift_meet(A, B) == max_l(p, A, B)


@settings(max_examples=60, deadline=None)
@given(bounded_posets)
def test_roundtrip_on_random_bounded_posets(p):
    s = structure_from_poset(p)
    assert check_axioms(s).ok
    assert poset_from_structure(s) == p
    assert roundtrip_structure(s)


def test_single_point():
    p = FinitePoset(["0"], [1])
    s = structure_from_poset(p)
    assert check_axioms(s).ok and roundtrip_structure(s)
