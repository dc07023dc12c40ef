import itertools

import pytest

from src import validation
from src.utils import load_config, merge_config, to_json


@pytest.mark.parametrize("suite", validation.SUITES, ids=lambda suite: suite.__name__)
def test_suite_passes(suite, fast_config):
    result = suite(fast_config)
    assert result.passed, str(result)


def test_suite_result_str():
    result = validation.SuiteResult("demo", [f"case {i}" for i in range(7)])
    assert not result.passed
    assert str(result) == "FAIL demo: case 0; case 1; case 2; case 3; case 4 (+2 more)"
    assert str(validation.SuiteResult("demo")) == "PASS demo"


def test_default_config():
    config = load_config()
    assert config["catalog_path"] is None
    assert config["selftest"]["property_n_max"] == 500
    assert config["selftest"]["parity_n"]["product_dihedral"] == [24, 60, 96]


def test_merge_config_is_recursive():
    merged = merge_config({"a": {"b": 1, "c": 2}, "d": 3}, {"a": {"b": 5}})
    assert merged == {"a": {"b": 5, "c": 2}, "d": 3}


def test_to_json_is_compact():
    assert to_json({"name": "ℤ₂", "n": [1, 2]}) == '{"name":"ℤ₂","n":[1,2]}'


def test_determinism_compares_rendered_rows(fast_config, monkeypatch):
    calls = itertools.count()
    monkeypatch.setattr(validation, "emit_row_json", lambda n, **kwargs: f"{n}:{next(calls)}")
    result = validation.determinism(fast_config)
    assert not result.passed
    assert result.failures[0] == "K7"
