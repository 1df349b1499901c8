import math

import pytest

from src.families import LoxodromeKind
from src.geodesic import make_closed_form
from src.loxodrome import make_loxodrome
from src.profile_expr import parse
from src.surface import MeridianKind, RotationalSurface


@pytest.fixture(autouse=True)
def log_dir(tmp_path, monkeypatch):
    """Keep log files out of the working tree."""
    path = tmp_path / "logs"
    monkeypatch.setenv("PIGEOM_LOG_DIR", str(path))
    return path


@pytest.fixture
def exp_profile():
    return parse("exp(u)")


@pytest.fixture
def cos_profile():
    return parse("cos(u)")


@pytest.fixture
def r1(exp_profile):
    return RotationalSurface(MeridianKind.SPACELIKE_MERIDIAN, exp_profile)


@pytest.fixture
def r2(cos_profile):
    return RotationalSurface(MeridianKind.TIMELIKE_MERIDIAN, cos_profile)


@pytest.fixture
def example_loxodrome(exp_profile):
    """Space-like loxodrome at theta = pi/4 on the exp-profile surface, t in (1, 2)."""
    return make_loxodrome(LoxodromeKind.SS, math.pi / 4, exp_profile, t_domain=(1.0, 2.0))


@pytest.fixture
def example_geodesic(cos_profile):
    """c = 1, c1 = 4, c2 = 2, c5 = 0 on the cos-profile surface, t in (0, 2)."""
    return make_closed_form(1.0, 4.0, 2.0, 0.0, profile=cos_profile, t_domain=(0.0, 2.0))
