"""
Form and polar space fixtures for polar_gaps tests.
"""
from pathlib import Path

import pytest

from polar_gaps.src.algebra.field import FieldSpec
from polar_gaps.src.algebra.forms import QuadraticForm
from polar_gaps.src.geometry.polar_space import PolarSpace, build_polar_space
from config.settings import Settings

PROJECT_ROOT = Path(__file__).resolve().parents[4]


@pytest.fixture
def gf2() -> FieldSpec:
    return FieldSpec.gf(2)


@pytest.fixture
def gf3() -> FieldSpec:
    return FieldSpec.gf(3)


@pytest.fixture
def gf4() -> FieldSpec:
    """GF(4) = GF(2)[x]/(x^2 + x + 1)."""
    return FieldSpec.gf_extension(2, 2, (1, 1, 1))


@pytest.fixture
def f2t() -> FieldSpec:
    return FieldSpec.f2t()


@pytest.fixture
def forms_dir() -> Path:
    """Directory of the example form files shipped with the repo."""
    return PROJECT_ROOT / "forms"


@pytest.fixture
def q_plus_3_2(gf2) -> QuadraticForm:
    """x0x1 + x2x3 over GF(2)."""
    return QuadraticForm.from_terms(gf2, 4, {(0, 1): 1, (2, 3): 1})


@pytest.fixture
def q_4_2(gf2) -> QuadraticForm:
    """x0^2 + x1x2 + x3x4 over GF(2)."""
    return QuadraticForm.from_terms(gf2, 5, {(0, 0): 1, (1, 2): 1, (3, 4): 1})


@pytest.fixture
def q_minus_5_2(gf2) -> QuadraticForm:
    """x0x1 + x2x3 + x4^2 + x4x5 + x5^2 over GF(2)."""
    return QuadraticForm.from_terms(gf2, 6, {(0, 1): 1, (2, 3): 1, (4, 4): 1, (4, 5): 1, (5, 5): 1})


@pytest.fixture
def conic_3(gf3) -> QuadraticForm:
    """x0x1 + x2^2 over GF(3)."""
    return QuadraticForm.from_terms(gf3, 3, {(0, 1): 1, (2, 2): 1})


@pytest.fixture
def f2t_form(f2t) -> QuadraticForm:
    """x0x1 + x2^2 + x2x3 + x3^2 + t x4^2 over F2(t)."""
    return QuadraticForm.from_terms(f2t, 5, {(0, 1): 1, (2, 2): 1, (2, 3): 1, (3, 3): 1, (4, 4): f2t.t})


@pytest.fixture
def anisotropic_plane(gf2) -> QuadraticForm:
    """x0^2 + x0x1 + x1^2 over GF(2): no singular points."""
    return QuadraticForm.from_terms(gf2, 2, {(0, 0): 1, (0, 1): 1, (1, 1): 1})


# Polar spaces are immutable once built, so one instance serves the session.

@pytest.fixture(scope="session")
def hyperbolic_space() -> PolarSpace:
    """Q+(3,2): the 3x3 grid."""
    F = FieldSpec.gf(2)
    return build_polar_space(QuadraticForm.from_terms(F, 4, {(0, 1): 1, (2, 3): 1}))


@pytest.fixture(scope="session")
def parabolic_space() -> PolarSpace:
    """Q(4,2): generalized quadrangle of order (2,2)."""
    F = FieldSpec.gf(2)
    return build_polar_space(QuadraticForm.from_terms(F, 5, {(0, 0): 1, (1, 2): 1, (3, 4): 1}))


@pytest.fixture(scope="session")
def elliptic_space() -> PolarSpace:
    """Q-(5,2): generalized quadrangle of order (2,4)."""
    F = FieldSpec.gf(2)
    terms = {(0, 1): 1, (2, 3): 1, (4, 4): 1, (4, 5): 1, (5, 5): 1}
    return build_polar_space(QuadraticForm.from_terms(F, 6, terms))


@pytest.fixture(scope="session")
def conic_space() -> PolarSpace:
    """Conic over GF(3): rank 1, four points, no lines."""
    F = FieldSpec.gf(3)
    return build_polar_space(QuadraticForm.from_terms(F, 3, {(0, 1): 1, (2, 2): 1}))


@pytest.fixture
def test_settings() -> Settings:
    """Small settings matching config/test_config.json."""
    return Settings(trials=3, seed=7, point_budget=100000, subspace_budget=20000, output="structured",
                    log_level="INFO", degree_cap=32, search_degree=2, search_budget=5000,
                    catalog_equivalents=1, catalog_workers=1, timings=False)
