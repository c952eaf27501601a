import json

import pytest

from steinerpoem import (
    InterchangeError,
    construct_sts,
    dump_system,
    find_resolution,
    load_document,
)


def test_round_trip_without_classes():
    system = construct_sts(13, seed=4)
    text = dump_system(system, points=[f"w{i}" for i in range(13)])
    loaded = load_document(text)
    assert loaded.system == system
    assert loaded.points == tuple(f"w{i}" for i in range(13))
    assert loaded.resolution is None


def test_round_trip_with_classes():
    system = construct_sts(9, seed=1)
    res = find_resolution(system).resolution
    text = dump_system(system, resolution=res)
    loaded = load_document(text)
    assert loaded.system == system
    assert loaded.resolution.classes == res.classes
    # serialization is stable
    assert dump_system(loaded.system, loaded.points, loaded.resolution) == text


def test_default_points():
    doc = json.loads(dump_system(construct_sts(7, seed=0)))
    assert doc["points"] == [f"p{i}" for i in range(1, 8)]


@pytest.mark.parametrize(
    "mutate,message",
    [
        (lambda d: d.pop("order"), "order: required key missing"),
        (lambda d: d.update(order="9"), "order: expected an integer"),
        (lambda d: d["points"].pop(), "points: expected 9 entries, got 8"),
        (lambda d: d["points"].__setitem__(0, 7), "points\\[0\\]: expected a nonempty string"),
        (lambda d: d["triples"].__setitem__(0, [1, 2]), "triples\\[0\\]: expected a list of 3"),
        (lambda d: d["triples"].__setitem__(0, [2, 1, 0]), "triples\\[0\\]: entries must be strictly ascending"),
        (lambda d: d["triples"].__setitem__(0, [0, 1, 9]), "triples\\[0\\]: point 9 out of range"),
    ],
)
def test_loader_positional_errors(mutate, message):
    system = construct_sts(9, seed=1)
    doc = json.loads(dump_system(system))
    mutate(doc)
    with pytest.raises(InterchangeError, match=message):
        load_document(json.dumps(doc))


def test_loader_rejects_unsorted_rows():
    doc = {
        "order": 7,
        "points": [f"p{i}" for i in range(7)],
        "triples": [[0, 3, 4], [0, 1, 2]],
    }
    with pytest.raises(InterchangeError, match="sorted lexicographically"):
        load_document(json.dumps(doc))


def test_loader_rejects_bad_json():
    with pytest.raises(InterchangeError, match="not valid JSON"):
        load_document("{nope")


def test_loader_rejects_duplicate_class_membership():
    system = construct_sts(9, seed=1)
    res = find_resolution(system).resolution
    doc = json.loads(dump_system(system, resolution=res))
    doc["classes"][1][0] = doc["classes"][0][0]
    with pytest.raises(InterchangeError, match="appears in classes 0 and 1"):
        load_document(json.dumps(doc))


def test_loader_rejects_classes_that_do_not_partition():
    system = construct_sts(9, seed=1)
    res = find_resolution(system).resolution
    doc = json.loads(dump_system(system, resolution=res))
    doc["classes"] = doc["classes"][:2]
    with pytest.raises(InterchangeError, match="classes"):
        load_document(json.dumps(doc))


def test_loader_accepts_structurally_valid_but_unverified_triples():
    # the loader checks structure only; verification is a separate concern
    doc = {"order": 7, "points": [f"p{i}" for i in range(7)], "triples": [[0, 1, 2]]}
    loaded = load_document(json.dumps(doc))
    assert loaded.system.block_count == 1
