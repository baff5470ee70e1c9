"""
Spin states of the two-fermion photon.

Every StateVector is written over the z-quantized basis, in the order

    |1,1>_z, |1,0>_z, |1,-1>_z, |0,0>

The magnetic field is always along z. Two beam geometries exist: propagation
along y (the field is transverse, polarization z or x) and propagation along z
(the field is longitudinal, polarization x).

The x-polarized state for propagation along y is returned in the printed form
(|1,1>_z + i|1,-1>_z)/sqrt(2). Written over the y basis it is usually labelled
epsilon_y even though the polarization points along x. Its helicity form
(|1,M_y=1> + i|1,M_y=-1>)/sqrt(2) is not orthogonal to epsilon_z under the same
d-functions, so rotate_y_to_z is checked against the form that is:
(|1,M_y=1> + |1,M_y=-1>)/sqrt(2) -> (|1,1>_z + |1,-1>_z)/sqrt(2). Both have no
|1,0> component, which is all the field couples to.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Tuple

import numpy as np

from photon_fusion.errors import UsageError

SQRT1_2 = float(np.sqrt(0.5))

# Positions of the basis kets inside a StateVector.
M_INDEX = {1: 0, 0: 1, -1: 2}
SINGLET_INDEX = 3


class Axis(str, Enum):
    X = "x"
    Y = "y"
    Z = "z"


@dataclass(frozen=True)
class BasisState:
    s: int
    m: int
    axis: Axis = Axis.Z

    def __post_init__(self) -> None:
        if self.s not in (0, 1):
            raise UsageError(f"total spin must be 0 or 1, got {self.s}")
        if abs(self.m) > self.s:
            raise UsageError(f"|m| must not exceed s, got s={self.s}, m={self.m}")
        if self.axis not in (Axis.Y, Axis.Z):
            raise UsageError(f"quantization axis must be y or z, got {self.axis}")

    @property
    def index(self) -> int:
        return SINGLET_INDEX if self.s == 0 else M_INDEX[self.m]


class StateVector:
    """Four complex amplitudes over (|1,1>, |1,0>, |1,-1>, |0,0>)."""

    def __init__(self, amplitudes) -> None:
        amps = np.array(amplitudes, dtype=complex).reshape(-1)
        if amps.shape != (4,):
            raise UsageError(f"a state vector has 4 amplitudes, got {amps.shape[0]}")
        if not np.all(np.isfinite(amps)):
            raise UsageError("amplitudes must be finite")
        amps.setflags(write=False)
        self.__amplitudes = amps

    @classmethod
    def basis(cls, state: BasisState) -> "StateVector":
        amps = np.zeros(4, dtype=complex)
        amps[state.index] = 1.0
        return cls(amps)

    @property
    def amplitudes(self) -> np.ndarray:
        return self.__amplitudes

    def amplitude(self, s: int, m: int) -> complex:
        return complex(self.__amplitudes[BasisState(s, m).index])

    def norm(self) -> float:
        return float(np.linalg.norm(self.__amplitudes))

    def __repr__(self) -> str:
        return f"StateVector({self.__amplitudes.tolist()!r})"


@dataclass(frozen=True)
class PolarizationSpec:
    propagation_axis: Axis
    polarization_axis: Axis

    def __post_init__(self) -> None:
        object.__setattr__(self, "propagation_axis", Axis(self.propagation_axis))
        object.__setattr__(self, "polarization_axis", Axis(self.polarization_axis))
        if self.propagation_axis not in (Axis.Y, Axis.Z):
            raise UsageError(f"propagation must be along y or z, got {self.propagation_axis.value}")
        if self.polarization_axis not in (Axis.X, Axis.Z):
            raise UsageError(f"polarization must be along x or z, got {self.polarization_axis.value}")
        if self.polarization_axis == self.propagation_axis:
            raise UsageError("polarization must be orthogonal to propagation, "
                             f"both are along {self.propagation_axis.value}")


# ──────────────────────────────────────────────────────────────
# Wigner d-functions (spin 1)
# ──────────────────────────────────────────────────────────────
def wigner_small_d(m_row: int, m_col: int, theta: float) -> float:
    if m_row not in M_INDEX or m_col not in M_INDEX:
        raise UsageError(f"spin-1 projections must be in {{-1, 0, 1}}, got ({m_row}, {m_col})")
    return float(wigner_d_matrix(theta)[M_INDEX[m_row], M_INDEX[m_col]])


def wigner_d_matrix(theta: float) -> np.ndarray:
    """d^1(theta), rows and columns ordered m = 1, 0, -1."""
    c = np.cos(theta)
    s = np.sin(theta) * SQRT1_2
    return np.array([
        [(1 + c) / 2, -s, (1 - c) / 2],
        [s, c, -s],
        [(1 - c) / 2, s, (1 + c) / 2],
    ])


def rotate(state: StateVector, theta: float) -> StateVector:
    """Apply d^1(theta) to the triplet; the singlet is rotation invariant."""
    amps = state.amplitudes.copy()
    amps[:3] = wigner_d_matrix(theta) @ amps[:3]
    return StateVector(amps)


def rotate_y_to_z(state: StateVector) -> StateVector:
    """|S,M_y> = sum_Mz |S,M_z> d^S_{Mz,My}(pi/2). Input amplitudes are over the y basis."""
    return rotate(state, np.pi / 2)


# ──────────────────────────────────────────────────────────────
# Photon polarization states
# ──────────────────────────────────────────────────────────────
def polarization_state(spec: PolarizationSpec) -> StateVector:
    if spec.propagation_axis == Axis.Z:
        # Helicity is M_z itself: x = (e_-1 - e_+1)/sqrt(2).
        return StateVector([-SQRT1_2, 0.0, SQRT1_2, 0.0])
    if spec.polarization_axis == Axis.Z:
        helicity = StateVector([-SQRT1_2, 0.0, SQRT1_2, 0.0])
        return rotate_y_to_z(helicity)
    return StateVector([SQRT1_2, 0.0, 1j * SQRT1_2, 0.0])


def linear_polarization_state(alpha: float) -> StateVector:
    """Propagation along y, linear polarization at angle alpha to B."""
    if not np.isfinite(alpha):
        raise UsageError(f"polarization angle must be finite, got {alpha}")
    parallel = polarization_state(PolarizationSpec(Axis.Y, Axis.Z)).amplitudes
    perpendicular = polarization_state(PolarizationSpec(Axis.Y, Axis.X)).amplitudes
    return StateVector(np.cos(alpha) * parallel + np.sin(alpha) * perpendicular)


def decompose_polarization(state: StateVector) -> Tuple[complex, complex]:
    """Jones pair (parallel to B, perpendicular to B) of a y-propagating photon."""
    parallel = polarization_state(PolarizationSpec(Axis.Y, Axis.Z)).amplitudes
    perpendicular = polarization_state(PolarizationSpec(Axis.Y, Axis.X)).amplitudes
    return (complex(np.vdot(parallel, state.amplitudes)),
            complex(np.vdot(perpendicular, state.amplitudes)))
