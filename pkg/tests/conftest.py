import os
import sys

import pytest
from hypothesis import HealthCheck, settings

sys.path.insert(0, os.path.dirname(__file__))

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

from toric_seshadri.battery import battery_fans, bl_p_p2  # noqa: E402
from toric_seshadri.lattice_fan import projective_space  # noqa: E402

DATA = os.path.join(os.path.dirname(__file__), "..", "data")


@pytest.fixture
def p2():
    return projective_space(2)


@pytest.fixture
def blp2():
    return bl_p_p2()


@pytest.fixture(scope="session")
def fans():
    return battery_fans()


@pytest.fixture
def data_dir():
    return os.path.abspath(DATA)
