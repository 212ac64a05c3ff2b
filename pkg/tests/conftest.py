"""Shared pytest fixtures for propernet tests."""
import logging
import os
from pathlib import Path
from unittest.mock import patch

import pytest

from propernet.config import reset_config
from propernet.metrics.nullmodel import NullModel

from tests.fixtures.sample_data import (
    DYADIC_IDENTICAL_WINDOWS_CSV,
    DYADIC_TEN_WINDOWS_CSV,
    DYADIC_TRIANGLE_CSV,
    WAP_MERGEABLE_CSV,
    WAP_TWO_LOCATIONS_CSV,
    snapshot,
)


@pytest.fixture
def test_env():
    """Provide the default PROPERNET_* environment."""
    return {
        'PROPERNET_ALPHA': '0.05',
        'PROPERNET_MODE': 'consecutive',
        'PROPERNET_DECIMALS': '2',
        'PROPERNET_STRICT_COLOCATION': 'false',
        'PROPERNET_RECIPROCAL_LINKS': 'false',
        'PROPERNET_EXACT_PATH_LIMIT': '5000',
        'PROPERNET_PATH_SAMPLE_SOURCES': '64',
        'PROPERNET_SAMPLE_SEED': '0',
        'PROPERNET_LOG_LEVEL': 'WARNING',
    }


@pytest.fixture
def clean_env(test_env):
    """Run with only the default PROPERNET_* variables set."""
    with patch.dict(os.environ, test_env, clear=True):
        reset_config()
        yield test_env
    reset_config()


@pytest.fixture
def null_model():
    """Provide a fresh NullModel with its own cache."""
    return NullModel()


@pytest.fixture
def star_pair():
    """Star c-{1,2,3,4} followed by star c-{1,2}."""
    prev = snapshot(0, 60, [("c", "1"), ("c", "2"), ("c", "3"), ("c", "4")])
    nxt = snapshot(60, 120, [("c", "1"), ("c", "2")])
    return prev, nxt


@pytest.fixture
def triangle():
    return snapshot(0, 60, [("a", "b"), ("b", "c"), ("a", "c")])


@pytest.fixture
def path_graph():
    return snapshot(0, 60, [("a", "b"), ("b", "c")])


def _write(directory: Path, name: str, text: str) -> Path:
    path = directory / name
    path.write_text(text, encoding="utf-8")
    return path


@pytest.fixture
def write_log(tmp_path):
    """Write CSV text into the test directory and return its path."""
    def write(text: str, name: str = "log.csv") -> Path:
        return _write(tmp_path, name, text)
    return write


@pytest.fixture
def wap_mergeable_file(write_log):
    return write_log(WAP_MERGEABLE_CSV, "wap.csv")


@pytest.fixture
def wap_two_locations_file(write_log):
    return write_log(WAP_TWO_LOCATIONS_CSV, "wap_two.csv")


@pytest.fixture
def dyadic_ten_windows_file(write_log):
    return write_log(DYADIC_TEN_WINDOWS_CSV, "dyadic.csv")


@pytest.fixture
def dyadic_identical_file(write_log):
    return write_log(DYADIC_IDENTICAL_WINDOWS_CSV, "identical.csv")


@pytest.fixture
def dyadic_triangle_file(write_log):
    return write_log(DYADIC_TRIANGLE_CSV, "triangle.csv")


@pytest.fixture(autouse=True)
def setup_logging():
    """Automatically configure logging for tests."""
    logging.getLogger('propernet').setLevel(logging.WARNING)
