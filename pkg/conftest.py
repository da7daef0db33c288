"""
Shared pytest configuration: hypothesis profiles and common fixtures
"""

import os
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

from config.settings import get_settings
from models.plot_spec import PlotSpec, WideSlices
from models.table import DataTable

settings.register_profile("dev", max_examples=100, deadline=None)
settings.register_profile(
    "ci", max_examples=500, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("ci" if os.environ.get("CI") else "dev")

ROOT = Path(__file__).resolve().parent
DEMO_DIR = ROOT / "data" / "demo"
CORPUS_DIR = ROOT / "tests" / "corpus"


@pytest.fixture(autouse=True)
def fresh_settings():
    """Settings are cached per process; tests that patch env need a clean read"""
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture
def demo_dir() -> Path:
    return DEMO_DIR


@pytest.fixture
def corpus_dir() -> Path:
    return CORPUS_DIR


@pytest.fixture
def sales_table() -> DataTable:
    return DataTable.from_records(
        [
            {"name": "a", "x": 1.0, "y": 2.0, "NA": 4, "EU": 4, "JP": 8},
            {"name": "b", "x": 3.0, "y": 1.0, "NA": 7, "EU": 0, "JP": 0},
            {"name": "c", "x": 2.0, "y": 5.0, "NA": 0, "EU": 5, "JP": 1},
        ],
        source=Path("sales.csv"),
    )


@pytest.fixture
def sales_spec() -> PlotSpec:
    return PlotSpec(
        x_column="x",
        y_column="y",
        slice_spec=WideSlices(columns=["NA", "EU", "JP"]),
    )
