import functools

import pytest
from hypothesis import HealthCheck, settings

from extrired.instance import build_category, load_fixture

settings.register_profile("default", deadline=None, max_examples=40,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@functools.lru_cache(maxsize=None)
def fixture_cat(name):
    spec = load_fixture(name)
    return spec, build_category(spec)


@pytest.fixture(scope="session")
def cat():
    return fixture_cat
