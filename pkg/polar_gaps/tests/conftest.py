import sys
import os

# Add project root to Python path
project_root = os.path.abspath(os.path.join(os.path.dirname(__file__), '..', '..'))
sys.path.insert(0, project_root)

"""
Global pytest configuration and fixtures for polar_gaps tests.
"""
import pytest
from .utils import (
    gf2,
    gf3,
    gf4,
    f2t,
    forms_dir,
    q_plus_3_2,
    q_4_2,
    q_minus_5_2,
    conic_3,
    f2t_form,
    anisotropic_plane,
    hyperbolic_space,
    parabolic_space,
    elliptic_space,
    conic_space,
    test_settings,
)


def pytest_configure(config):
    """Configure pytest with custom settings and markers."""
    config.addinivalue_line("markers", "unit: Unit tests")
    config.addinivalue_line("markers", "integration: Integration tests")
    config.addinivalue_line("markers", "slow: Tests that take longer than 1 second to run")


@pytest.fixture(autouse=True)
def isolated_environment(monkeypatch):
    """Keep POLAR_GAPS_* variables of the calling shell out of the tests."""
    for name in list(os.environ):
        if name.startswith("POLAR_GAPS_"):
            monkeypatch.delenv(name, raising=False)


# Re-export fixtures from utils
__all__ = [
    'gf2',
    'gf3',
    'gf4',
    'f2t',
    'forms_dir',
    'q_plus_3_2',
    'q_4_2',
    'q_minus_5_2',
    'conic_3',
    'f2t_form',
    'anisotropic_plane',
    'hyperbolic_space',
    'parabolic_space',
    'elliptic_space',
    'conic_space',
    'test_settings',
    'isolated_environment',
]
