"""End-to-end smoke tests for the python module."""

import json
import os
import pathlib

import pytest

import ranklab


def schema():
    path = os.environ.get("RANKLAB_SCHEMA")
    if path is None:
        path = pathlib.Path(__file__).resolve().parents[2] / "docs" / "report.schema.json"
    with open(path) as f:
        return json.load(f)


try:
    import jsonschema

    VALIDATOR = jsonschema.Draft7Validator(schema())
except ImportError:  # pragma: no cover
    VALIDATOR = None


def validate(doc):
    if VALIDATOR is not None:
        VALIDATOR.validate(doc)


def label_pairs(labelset):
    return [(l["s"], l["a"]) for l in labelset["labels"]]


def test_rank_report_cubic():
    rep = ranklab.rank([1, 0, 0, 1])  # x^3 + y^3
    validate(rep)
    assert rep["kind"] == "rank"
    assert rep["complex"]["rank"] == 2
    assert rep["admissible"]["rank"] == 2
    assert rep["real"]["exact"] is True
    assert rep["real"]["hi"] == 2
    assert label_pairs(rep["labels"]) == [(2, 0)]
    assert rep["labels"]["exactness"] == "complete"


def test_scalar_helpers():
    assert ranklab.complex_rank([0, 1, 0, 0]) == 3  # x^2 y
    assert ranklab.admissible_rank([0, 1, 0, 0]) == 3
    assert ranklab.real_rank([1, 0, -1]) == (2, 2, True)
    assert ranklab.a_rank([1, 0, 1], 1) == (1, 1, True)


def test_rational_coefficients():
    # scale invariance: 2/3 x^2 - 4/3 y^2 is canonically x^2 - 2 y^2
    rep = ranklab.rank(["2/3", 0, "-4/3"])
    assert rep["form"]["coefficients"] == ["1", "0", "-2"]


def test_labels_and_non_normative():
    doc = ranklab.labels([1, 0, -1])
    validate(doc)
    assert doc["non_normative"] is False
    assert label_pairs(doc) == [(2, 0), (2, 1)]

    spanning = ranklab.labels([1, 0, 0, 1], at=4)
    validate(spanning)
    assert spanning["non_normative"] is True
    assert label_pairs(spanning) == [(4, 0), (4, 1), (4, 2)]


def test_decompose_round_trip():
    doc = ranklab.decompose([1, 0, 0, 1])
    validate(doc)
    assert doc["kind"] == "decompose-run"
    assert doc["verification"]["pass"] is True
    assert doc["decomposition"]["residual_bound"] == "0"

    paired = ranklab.decompose([1, 0, -1], label=(2, 1))
    validate(paired)
    assert paired["verification"]["pass"] is True
    assert paired["decomposition"]["label"] == {"s": 2, "a": 1}


def test_decompose_rejections():
    with pytest.raises(ValueError):
        ranklab.decompose([1, 0, 1], label=(2, 1))  # x^2 + y^2 has no conjugate-pair label
    with pytest.raises(ValueError):
        ranklab.decompose([1, 0, 1], label=(3, 2))  # 2a > s
    with pytest.raises(ValueError):
        ranklab.rank([1])  # a single coefficient is not a form
    with pytest.raises(ValueError):
        ranklab.rank(["x", 1, 2])


def test_sample_determinism_across_jobs():
    one = ranklab.sample(4, 60, seed=11, jobs=1)
    eight = ranklab.sample(4, 60, seed=11, jobs=8)
    assert one == eight
    validate(one)
    assert sum(one["complex"].values()) == 60

    assert ranklab.sample_csv(3, 25, seed=7, jobs=1) == ranklab.sample_csv(3, 25, seed=7, jobs=4)


def test_sample_form_matches_report_streams():
    rep = ranklab.sample(2, 5, seed=9, jobs=2, keep_reports=True)
    validate(rep)
    for i, rec in enumerate(rep["samples"]):
        assert rec["index"] == i
        want = [str(c) for c in ranklab.sample_form(2, 100, 9, i)]
        assert rec["report"]["form"]["coefficients"] == want


def test_verify_and_survey():
    ok, rep = ranklab.verify("generic-admissible", 3, 80, seed=1, jobs=4)
    validate(rep)
    assert ok is True
    assert rep["stats"]["expected-rank"] == "2"

    ok, rep = ranklab.survey(0, 2, 60, seed=3, jobs=2)
    validate(rep)
    assert ok is True


def test_version():
    assert ranklab.__version__ == "1.0.0"
