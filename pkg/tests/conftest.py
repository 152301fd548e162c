import os
import sys

import pytest
from hypothesis import settings

sys.path.insert(0, os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "src"))

settings.register_profile("rookcalc", derandomize=True, max_examples=60, deadline=None)
settings.load_profile("rookcalc")


@pytest.fixture(autouse=True)
def fresh_tables():
    """Every test starts from empty recurrence caches"""
    from rookcalc.stirling import clear_tables
    clear_tables()
    yield


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: full-size sweeps and enumerations, deselect with -m 'not slow'")
