import pytest

from posetalg import ComplementedPoset, FinitePoset, is_boolean, meets_exist
from posetalg.enumeration import (
    PosetStream,
    canonical_form,
    enumerate_posets,
    exhaustive_check,
    find_counterexample,
    labeled_count,
    naive_count,
    unlabeled_count,
)
from posetalg.errors import SizeTooLarge

# labeled posets on n points, and those counted up to isomorphism
LABELED = {1: 1, 2: 3, 3: 19, 4: 219, 5: 4231}
UNLABELED = {1: 1, 2: 2, 3: 5, 4: 16, 5: 63}


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_stream_matches_naive_recount(n):
    assert labeled_count(n) == naive_count(n) == LABELED[n]


def test_labeled_count_five():
    assert labeled_count(5) == LABELED[5]


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_unlabeled_counts(n):
    assert unlabeled_count(n, "all", "labeled") == UNLABELED[n]
    assert unlabeled_count(n, "all", "natural") == UNLABELED[n]


def test_two_element_bounded_conventions():
    assert labeled_count(2, "bounded") == 2
    assert unlabeled_count(2, "bounded") == 1


def test_streams_yield_valid_distinct_posets():
    seen = set()
    for p in enumerate_posets(4):
        p.validate()
        seen.add(p.down)
    assert len(seen) == LABELED[4]


def test_natural_labeling_respects_index_order():
    for p in PosetStream(5, "all", "natural"):
        for x in range(p.size):
            for y in range(p.size):
                if p.leq(x, y):
                    assert x <= y


def test_filters():
    for p in PosetStream(5, "lattice"):
        assert p.is_bounded() and meets_exist(p)
    for cp in PosetStream(4, "complemented"):
        assert isinstance(cp, ComplementedPoset)
    bools = list(PosetStream(4, "boolean"))
    assert bools and all(is_boolean(cp) for cp in bools)
    assert PosetStream(3, "complemented").count() == 0


def test_determinism_and_resume():
    first = [p.down for p in PosetStream(5, "bounded")]
    assert first == [p.down for p in PosetStream(5, "bounded")]
    s = PosetStream(5, "bounded")
    it = iter(s)
    head = [next(it).down for _ in range(17)]
    resumed = PosetStream.from_cursor(s.cursor())
    assert head + [p.down for p in resumed] == first


def test_shards_partition_the_stream():
    whole = [p.down for p in PosetStream(5, "bounded")]
    parts = [[p.down for p in PosetStream(5, "bounded", shard=k, shards=3)] for k in range(3)]
    assert sorted(sum(parts, [])) == sorted(whole)
    assert sum(map(len, parts)) == len(whole)


def test_size_limits():
    with pytest.raises(SizeTooLarge):
        enumerate_posets(9)
    with pytest.raises(SizeTooLarge):
        enumerate_posets(0)
    with pytest.raises(SizeTooLarge):
        exhaustive_check("cone-lemma", 99)
    with pytest.raises(SizeTooLarge):
        find_counterexample("maxl-associativity", 99)


def test_canonical_form_is_label_invariant():
    p = FinitePoset.from_covers(list("abcd"), [("a", "b"), ("a", "c"), ("c", "d")])
    assert canonical_form(p) == canonical_form(p.relabel([3, 1, 0, 2]))
    q = FinitePoset.from_covers(list("abcd"), [("a", "b"), ("b", "c"), ("c", "d")])
    assert canonical_form(p) != canonical_form(q)


@pytest.mark.parametrize("theorem", ["operator-axioms", "operator-recovery", "roundtrip-operator", "cone-lemma"])
def test_poset_sweeps(theorem):
    report = exhaustive_check(theorem, 4)
    assert report.ok and report.total > 0


@pytest.mark.parametrize("theorem", ["sheffer", "sheffer-roundtrip", "sd-identities", "dual", "dual-roundtrip", "sd-cone-identity"])
def test_complemented_sweeps(theorem):
    report = exhaustive_check(theorem, 6)
    assert report.ok
    assert report.instances[4] > 0
    assert "0 failures" in report.render()


def test_parallel_sweep_matches_serial():
    serial = exhaustive_check("roundtrip-operator", 5, workers=1)
    parallel = exhaustive_check("roundtrip-operator", 5, workers=2)
    assert serial.instances == parallel.instances and parallel.ok


def test_worker_count_from_environment(monkeypatch):
    monkeypatch.setenv("POSETALG_WORKERS", "2")
    assert exhaustive_check("cone-lemma", 3).ok


def test_unknown_tags():
    with pytest.raises(ValueError):
        exhaustive_check("nope", 3)
    with pytest.raises(ValueError):
        find_counterexample("nope", 3)


def test_maxl_counterexample_within_six():
    c = find_counterexample("maxl-associativity", 6)
    assert c is not None and c.poset.size <= 6
    w = c.witness
    from posetalg import max_l

    p = c.poset
    lhs = max_l(p, max_l(p, 1 << w.x, 1 << w.y), 1 << w.z)
    rhs = max_l(p, 1 << w.x, max_l(p, 1 << w.y, 1 << w.z))
    assert lhs != rhs and (lhs, rhs) == (w.lhs, w.rhs)


def test_minu_counterexample():
    c = find_counterexample("minu-associativity", 6)
    assert c is not None and c.poset.size <= 6


def test_lattices_are_associative():
    assert find_counterexample("maxl-associativity-lattice", 5) is None


def test_complemented_counterexamples():
    found = find_counterexample("sd-cone-identity-complemented", 8)
    assert found is not None and found.poset.size <= 8
    assert not is_boolean(found.instance)
    sd = find_counterexample("sd-associativity", 8)
    assert sd is not None
