import os
import random

import pytest

from ecsteg_shared.arith import Prime
from ecsteg_shared.curves import CurveParams, registry_get
from ecsteg_shared.feature_toggling import FeatureToggling


@pytest.fixture()
def source_root():
    return os.path.dirname(os.path.dirname(os.path.abspath(__file__)))


@pytest.fixture(autouse=True)
def env_save():
    environment_pre = [
        (key, val) for key, val in os.environ.items() if key != "PYTEST_CURRENT_TEST"
    ]
    yield
    environment_post = [
        (key, val) for key, val in os.environ.items() if key != "PYTEST_CURRENT_TEST"
    ]
    if set(environment_pre) != set(environment_post):
        raise EnvironmentError(
            "Your environment has changed after that test, please reset"
        )


@pytest.fixture(autouse=True)
def reset_feature_toggling():
    yield
    FeatureToggling.reset()


@pytest.fixture()
def rng():
    return random.Random(1234)


@pytest.fixture()
def f11():
    return Prime(11)


@pytest.fixture()
def small_curve():
    """y^2 = x^3 + 2x + 3 over F_11, 13 points."""
    return CurveParams("small-11", 11, 2, 3)


@pytest.fixture()
def toy_1019():
    return registry_get("toy-1019")


@pytest.fixture()
def toy_1039():
    return registry_get("toy-1039")
