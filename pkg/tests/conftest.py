import numpy as np
import pytest

from windlayout import TurbineSpec, build_grid


@pytest.fixture(scope="session")
def spec():
    return TurbineSpec()


@pytest.fixture(scope="session")
def onshore_spec():
    # small onshore-class machine over rough terrain: wide wakes vs the rotor
    return TurbineSpec(rotor_radius=20.0, hub_height=60.0, surface_roughness=0.3,
                       rated_power=630.0)


@pytest.fixture(scope="session")
def default_grid():
    return build_grid(4000.0, 20)


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)
