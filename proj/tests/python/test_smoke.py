import json
import pathlib

import pytest

import cquiver

DATA = pathlib.Path(__file__).resolve().parent.parent / "data"


def test_interval_ext_closed_form():
    assert cquiver.interval_ext((0, 0), (1, 1)) == 1
    assert cquiver.interval_ext((1, 1), (0, 0)) == 0
    assert cquiver.interval_ext((None, -1), (0, 3)) == 1


def test_hom_ext_dims_matches_interval_rule():
    window = {"shape": "linear", "lo": 0, "hi": 1}
    simple0 = {"quiver": window, "dims": [1, 0], "mats": {}}
    simple1 = {"quiver": window, "dims": [0, 1], "mats": {}}
    assert cquiver.hom_ext_dims(simple0, simple1) == (0, 1)
    assert cquiver.hom_ext_dims(simple1, simple0) == (0, 0)


def test_malformed_input_raises_value_error():
    with pytest.raises(ValueError):
        cquiver.hom_ext_dims({"quiver": {"shape": "tree"}, "dims": []}, {})


def test_compatibility():
    a = {"lo": {"kind": "grid", "i": 0}, "lo_closed": False, "hi": {"kind": "grid", "i": 1}, "hi_closed": False}
    b = {"lo": {"kind": "grid", "i": 1}, "lo_closed": False, "hi": {"kind": "grid", "i": 2}, "hi_closed": False}
    c = dict(b, lo_closed=True)
    assert cquiver.is_compatible(a, b)
    assert not cquiver.is_compatible(dict(a, hi_closed=True), c)


def test_equivariant_counts():
    for m, expected in [(1, 2), (2, 6), (3, 20), (4, 70)]:
        assert len(cquiver.enumerate_maximal_rigid(m)) == expected
        assert cquiver.equivariant_count_formula(m) == expected


def test_star_is_an_involution():
    for s in cquiver.enumerate_maximal_rigid(3):
        assert cquiver.star(cquiver.star(s)) == s


def test_alpha_counts_and_fixture():
    assert [cquiver.count_alpha(n, "enumerate") for n in (1, 2)] == [12, 280]
    assert cquiver.count_alpha(3) == 7392
    reps = cquiver.enumerate_alpha(1)
    assert len(reps) == 12
    fixture = json.loads((DATA / "n1_maximal_rigid.json").read_text())["representations"]
    for rep in fixture:
        assert cquiver.check_alpha(rep) == {"valid": True, "violation": None, "gap": None, "rigid": True}


def test_check_alpha_reports_violations():
    bad = json.loads((DATA / "invalid_two_families.json").read_text())
    result = cquiver.check_alpha(bad)
    assert not result["valid"]
    assert result["violation"] == "|phi| = 2 != 1"
    assert result["gap"] == 0
    nonrigid = json.loads((DATA / "nonrigid_valid.json").read_text())
    assert cquiver.check_alpha(nonrigid)["rigid"] is False


def test_tau_pairs_up_the_twelve():
    images = {}
    for rep in cquiver.enumerate_alpha(1):
        key = json.dumps(cquiver.tau(rep), sort_keys=True)
        images[key] = images.get(key, 0) + 1
    assert sorted(images.values()) == [2] * 6


def test_fold_dimension_vector():
    folded = cquiver.fold_to_cyclic({"m": 3, "orbits": [{"kind": "fin", "a": 2, "len": 5}]})
    assert folded["dims"] == [2, 1, 2]
    assert folded["quiver"] == {"shape": "cyclic", "m": 3}
