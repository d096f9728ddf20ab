import warnings

import pytest


def pytest_configure(config):
    """Configure pytest - add custom markers and handle warnings"""
    config.addinivalue_line("markers", "integration: slow whole-catalog checks")

    # numpy reports overflow in a few formulas far from their optima
    warnings.filterwarnings("ignore", category=RuntimeWarning, module="numpy.*")


@pytest.fixture
def audit_cache(tmp_path):
    """Audit cache file isolated from ~/.optbench"""
    return tmp_path / "audit_cache.json"
