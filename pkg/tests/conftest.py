import pytest
from click.testing import CliRunner

from src.utils import load_config

# Bounds small enough for the unit suite; `selftest` runs the full defaults.
FAST_SELFTEST = {
    "selftest": {
        "property_n_max": 60,
        "search_space_n_max": 40,
        "no_d2_n_max": 200,
        "automorphism_n_range": [7, 9],
        "cayley_max_parameter": 5,
    }
}


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def fast_config():
    return load_config(FAST_SELFTEST)


@pytest.fixture
def write_catalog(tmp_path):
    def write(text, name="catalog.txt"):
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return str(path)
    return write
