import pytest

from steinerpoem import (
    InadmissibleOrderError,
    Resolution,
    TripleSystem,
    construct_sts,
    find_resolution,
    search_resolvable_sts,
    verify_sts,
)


def test_sts9_resolves_into_four_classes():
    system = construct_sts(9, seed=0)
    outcome = find_resolution(system)
    assert outcome.status == "resolved"
    res = outcome.resolution
    assert len(res.classes) == 4
    assert all(len(cl) == 3 for cl in res.classes)
    # each class covers each point exactly once
    for cl in res.classes:
        covered = sorted(p for tri in cl for p in tri)
        assert covered == list(range(9))
    # flattened classes equal the triple set exactly
    flat = sorted(t for cl in res.classes for t in cl)
    assert tuple(flat) == system.triples


def test_find_resolution_is_deterministic():
    system = construct_sts(9, seed=3)
    a = find_resolution(system)
    b = find_resolution(system)
    assert a.resolution.classes == b.resolution.classes
    assert a.nodes == b.nodes


def test_sts7_is_not_resolvable():
    outcome = find_resolution(construct_sts(7, seed=0))
    assert outcome.status == "unresolvable"
    assert "not divisible by 3" in outcome.reason


def test_direct_sts15_certified_unresolvable():
    outcome = find_resolution(construct_sts(15, seed=0))
    assert outcome.status == "unresolvable"
    assert "search exhausted" in outcome.reason
    assert outcome.nodes > 0


def test_budget_exceeded_is_explicit():
    system = construct_sts(9, seed=0)
    outcome = find_resolution(system, max_nodes=1)
    assert outcome.status == "budget-exceeded"
    assert "bound exceeded" in outcome.reason
    assert outcome.resolution is None


def test_find_resolution_rejects_invalid_systems():
    broken = TripleSystem.build(9, [(0, 1, 2)])
    with pytest.raises(ValueError, match="valid triple system"):
        find_resolution(broken)


def test_resolution_build_validates_classes():
    system = construct_sts(9, seed=0)
    good = find_resolution(system).resolution
    # wrong class count
    with pytest.raises(ValueError, match="expected 4 parallel classes"):
        Resolution.build(system, good.classes[:3])
    # a class that repeats a point
    classes = [list(cl) for cl in good.classes]
    classes[0][0] = classes[1][0]
    with pytest.raises(ValueError, match="not covered exactly once"):
        Resolution.build(system, classes)


def test_search_resolvable_sts_is_deterministic():
    sys_a, res_a = search_resolvable_sts(15, seed=0)
    sys_b, res_b = search_resolvable_sts(15, seed=0)
    assert sys_a == sys_b
    assert res_a.classes == res_b.classes
    assert verify_sts(sys_a).ok
    assert len(res_a.classes) == 7
    assert all(len(cl) == 5 for cl in res_a.classes)


def test_search_resolvable_sts_uses_direct_construction_when_it_resolves():
    system, res = search_resolvable_sts(9, seed=0)
    assert system == construct_sts(9, seed=0)
    assert len(res.classes) == 4


def test_search_resolvable_rejects_wrong_residue():
    with pytest.raises(InadmissibleOrderError, match="3 mod 6"):
        search_resolvable_sts(7, seed=0)
    with pytest.raises(InadmissibleOrderError, match="3 mod 6"):
        search_resolvable_sts(13, seed=0)
