import numpy as np
import pytest

from photon_fusion.constants import HBAR_EV, MU_BOHR_EV
from photon_fusion.dynamics import ModelParams
from photon_fusion.exclusion import ExperimentConfig, ObservedRotation, RotationLimit

TAU = 1.0e-8   # s
FIELD = 1.0    # T


def params_from_groups(u: float, phi_delta: float, b: float = FIELD, tau: float = TAU) -> ModelParams:
    """ModelParams with 2 beta mu_B B / Delta = u and Delta tau / 2 hbar = phi_delta."""
    delta = 2.0 * phi_delta * HBAR_EV / tau
    w = 0.5 * u * delta
    return ModelParams(delta=delta, beta=w / (MU_BOHR_EV * b))


@pytest.fixture(scope="session")
def make_params():
    return params_from_groups


@pytest.fixture(scope="session")
def random_params():
    """Reproducible draws spanning u in [1e-6, u_max] (log) and phi_delta in [0, 50]."""
    def draw(count: int, seed: int = 20240611, u_max: float = 1e3):
        rng = np.random.default_rng(seed)
        u = 10.0 ** rng.uniform(-6.0, np.log10(u_max), count)
        phi = rng.uniform(0.0, 50.0, count)
        return [params_from_groups(ui, pi) for ui, pi in zip(u, phi)]
    return draw


@pytest.fixture(scope="session")
def pvlas_like() -> ExperimentConfig:
    return ExperimentConfig(
        name="pvlas-like", b=5.5, l=1.0, wavelength=1.064e-6, passes=44000,
        polarization_angle=np.pi / 4, measurement=ObservedRotation(3.9e-12, 0.5e-12),
    )


@pytest.fixture(scope="session")
def brft_like() -> ExperimentConfig:
    return ExperimentConfig(
        name="brft-like", b=3.25, l=8.8, wavelength=5.145e-7, passes=254,
        polarization_angle=np.pi / 4, measurement=RotationLimit(3.5e-10),
    )
