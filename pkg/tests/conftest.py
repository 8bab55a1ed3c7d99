import random

import pytest
from hypothesis import HealthCheck, settings

from spreadhom import PrimeField

settings.register_profile(
    "suite",
    deadline=None,
    max_examples=50,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("suite")


@pytest.fixture
def field():
    return PrimeField()


@pytest.fixture
def rng():
    return random.Random(20260819)
