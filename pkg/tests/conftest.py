import pytest
from click.testing import CliRunner
from hypothesis import HealthCheck, settings

from app.models import AbelianGroup, PrimePower

# fixed example sequences, no example database and no per-example deadline
settings.register_profile('capax', derandomize=True, database=None, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile('capax')


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def z2_squared():
    return AbelianGroup.fg(0, {PrimePower(2, 1): 2})


@pytest.fixture
def mixed_moore_group():
    # Z_2^2 + Z_3 + Z^2
    return AbelianGroup.fg(2, {PrimePower(2, 1): 2, PrimePower(3, 1): 1})
