import random

import numpy as np
import pytest
from hypothesis import HealthCheck, settings

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@pytest.fixture
def prng():
    return random.Random(20240601)


@pytest.fixture
def nrng():
    return np.random.default_rng(20240601)
