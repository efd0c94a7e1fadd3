import json

import pytest

import iep


def test_enumerate_septuples_contains_known_tuple():
    septs = iep.enumerate_septuples(13, 50, 49)
    assert [5, 8, 2, -12, 5, 16, 7] in septs
    assert all(len(s) == 7 for s in septs)


def test_septuples_empty_range():
    assert iep.enumerate_septuples(1, 0, 1) == []


def test_maximal_order_disc():
    for p in (2, 7, 11, 13):
        order = iep.maximal_order(p)
        assert order["disc"] == p * p


def test_maximal_order_rejects_composite():
    with pytest.raises(iep.ConfigError):
        iep.maximal_order(15)


def test_achievable_residues_p7():
    assert iep.achievable_residues(7) == [0, 1, 2, 4]


def test_norm_elements_p7():
    ones = iep.norm_elements(7, 1)
    assert ones == [["0", "-1", "0", "0"], ["0", "1", "0", "0"]]
    assert iep.norm_elements(7, 0) == [["0", "0", "0", "0"]]


def test_run_worked_example():
    config = {
        "field": {
            "A": 13,
            "B": 50,
            "C": 49,
            "mode": "imaginary_quadratic",
            "D": -1,
            "f": 1,
            "zeta": "zeta4",
            "automorphisms": [["16", "-8", "1"]],
        },
        "primes": [7],
    }
    report = json.loads(iep.run_json(json.dumps(config)))
    assert report["totals"] == {"7": 1}
    septuples = [c["representative"]["septuple"] for c in report["primes"][0]["classes"]]
    assert ["3", "10", "4", "-24", "17", "74", "7"] in septuples


def test_run_rejects_bad_config():
    with pytest.raises(iep.ConfigError):
        iep.run_json("{}")
