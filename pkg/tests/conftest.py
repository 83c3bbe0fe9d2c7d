from pathlib import Path

import pytest

from mppabsorber import (
    BASELINE_DESIGN,
    DEFAULT_GRID,
    DEFAULT_MPPS,
    OPTIMIZED_DESIGN,
    MppSpec,
    absorption_spectrum,
    build_chain,
    single_chamber_chain,
)

CONFIG_DIR = Path(__file__).resolve().parents[1] / "configs"


@pytest.fixture(scope="session")
def baseline_chain():
    return build_chain(BASELINE_DESIGN, DEFAULT_MPPS)


@pytest.fixture(scope="session")
def optimized_chain():
    return build_chain(OPTIMIZED_DESIGN, DEFAULT_MPPS)


@pytest.fixture(scope="session")
def single_chain():
    return single_chamber_chain(MppSpec(thickness=0.6, aperture=0.2, porosity=0.025))


@pytest.fixture(scope="session")
def baseline_spectrum(baseline_chain):
    return absorption_spectrum(baseline_chain, DEFAULT_GRID)


@pytest.fixture(scope="session")
def optimized_spectrum(optimized_chain):
    return absorption_spectrum(optimized_chain, DEFAULT_GRID)


@pytest.fixture(scope="session")
def single_spectrum(single_chain):
    return absorption_spectrum(single_chain, DEFAULT_GRID)


@pytest.fixture(scope="session")
def config_dir():
    return CONFIG_DIR
