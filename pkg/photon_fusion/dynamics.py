"""
Two-level mixing of the ordinary photon |1,0> with the second photon |0,0>.

The spin Hamiltonian -Delta s1.s2 puts the triplet at E1 = -Delta/4 and the
singlet at E0 = 3 Delta/4. A field B along z couples only |1,0> and |0,0>, with
matrix element w = beta mu_B B. Every closed form below is evaluated through

    delta_bar = hypot(Delta, 2w)        dressed splitting
    phi_bar   = delta_bar tau / 2 hbar  dressed half phase
    phi_delta = Delta tau / 2 hbar      bare half phase

so that Delta = 0 and B = 0 are ordinary points rather than special cases.

Energies are in eV and times in s throughout; hbar is taken in eV s.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple, Union

import numpy as np
from scipy.linalg import expm, polar

from photon_fusion.constants import C, HBAR_EV, MU_BOHR_EV
from photon_fusion.errors import DomainError, UsageError
from photon_fusion.spin_algebra import (Axis, PolarizationSpec, StateVector, decompose_polarization,
                                        linear_polarization_state, polarization_state)


@dataclass(frozen=True)
class ModelParams:
    delta: float  # eV
    beta: float

    def __post_init__(self) -> None:
        for name in ("delta", "beta"):
            value = getattr(self, name)
            if not np.isfinite(value) or value < 0:
                raise UsageError(f"{name} must be finite and >= 0, got {value}")


Geometry = Union[PolarizationSpec, float]

# Parallel Jones amplitudes at or below this are rounding of an exact zero (cos(pi/2) and the like).
NULL_AMPLITUDE = 4 * np.finfo(float).eps


@dataclass(frozen=True)
class FieldRegion:
    b: float                 # T
    l: float                 # m
    passes: int = 1
    geometry: Geometry = PolarizationSpec(Axis.Y, Axis.Z)

    def __post_init__(self) -> None:
        if not np.isfinite(self.b) or self.b < 0:
            raise UsageError(f"field must be finite and >= 0, got {self.b}")
        if not np.isfinite(self.l) or self.l <= 0:
            raise UsageError(f"field length must be finite and > 0, got {self.l}")
        if int(self.passes) != self.passes or self.passes < 1:
            raise UsageError(f"passes must be a positive integer, got {self.passes}")

    @property
    def tau(self) -> float:
        return self.l / C

    def state(self) -> StateVector:
        if isinstance(self.geometry, PolarizationSpec):
            return polarization_state(self.geometry)
        return linear_polarization_state(float(self.geometry))


@dataclass(frozen=True)
class MixedEigensystem:
    theta: float
    e_bar_1: float
    e_bar_0: float
    delta_bar: float


@dataclass(frozen=True)
class Observables:
    p_conversion: float
    rotation: float
    phase_diff: float
    ellipticity: float
    birefringence: float


# ──────────────────────────────────────────────────────────────
# Dimensionless groups
# ──────────────────────────────────────────────────────────────
def coupling(params: ModelParams, b: float) -> float:
    """Off-diagonal element <1,0|V|0,0> = beta mu_B B, in eV."""
    return params.beta * MU_BOHR_EV * b


def half_phase(energy: float, tau: float) -> float:
    return energy * tau / (2.0 * HBAR_EV)


def _dressed(params: ModelParams, b: float) -> Tuple[float, float]:
    w2 = 2.0 * coupling(params, b)
    return w2, float(np.hypot(params.delta, w2))


def _check_tau(tau: float) -> None:
    if not np.isfinite(tau) or tau < 0:
        raise UsageError(f"time must be finite and >= 0, got {tau}")


# ──────────────────────────────────────────────────────────────
# Eigensystem
# ──────────────────────────────────────────────────────────────
def mixing_angle(params: ModelParams, b: float) -> float:
    """tan(2 theta) = 2 beta mu_B B / Delta, theta in [0, pi/4]."""
    w2, _ = _dressed(params, b)
    return 0.5 * float(np.arctan2(w2, params.delta))


def eigensystem(params: ModelParams, b: float) -> MixedEigensystem:
    _, delta_bar = _dressed(params, b)
    mean = params.delta / 4.0   # (E1 + E0) / 2
    return MixedEigensystem(
        theta=mixing_angle(params, b),
        e_bar_1=mean - delta_bar / 2.0,
        e_bar_0=mean + delta_bar / 2.0,
        delta_bar=delta_bar,
    )


def hamiltonian(params: ModelParams, b: float) -> np.ndarray:
    """H0 + V over (|1,1>, |1,0>, |1,-1>, |0,0>), in eV."""
    e1 = -params.delta / 4.0
    e0 = 3.0 * params.delta / 4.0
    h = np.diag([e1, e1, e1, e0]).astype(complex)
    h[1, 3] = h[3, 1] = coupling(params, b)
    return h


# ──────────────────────────────────────────────────────────────
# Time evolution
# ──────────────────────────────────────────────────────────────
def evolve(state: StateVector, params: ModelParams, b: float, tau: float) -> StateVector:
    """Exact propagator of hamiltonian() over [0, tau]."""
    _check_tau(tau)
    w2, delta_bar = _dressed(params, b)
    phi_bar = half_phase(delta_bar, tau)
    if delta_bar > 0:
        sin2, cos2 = w2 / delta_bar, params.delta / delta_bar
    else:
        sin2, cos2 = 0.0, 1.0
    cs, sn = np.cos(phi_bar), np.sin(phi_bar)
    mean_phase = np.exp(-1j * half_phase(params.delta, tau) / 2.0)   # exp(-i (E1+E0) tau / 2 hbar)
    block = mean_phase * np.array([
        [cs + 1j * cos2 * sn, -1j * sin2 * sn],
        [-1j * sin2 * sn, cs - 1j * cos2 * sn],
    ])

    amps = state.amplitudes.copy()
    triplet_phase = np.conj(mean_phase)                              # exp(-i E1 tau / hbar)
    amps[0] *= triplet_phase
    amps[2] *= triplet_phase
    amps[[1, 3]] = block @ amps[[1, 3]]
    return StateVector(amps)


def numeric_oracle(state: StateVector, params: ModelParams, b: float, tau: float,
                   n_steps: int = 1_000_000) -> StateVector:
    """
    Brute-force evolution: the exact propagator of one step tau/n_steps,
    multiplied n_steps times (binary powering). Shares nothing with evolve()
    except hamiltonian(). The powered matrix is replaced by its unitary polar
    factor so that rounding in the step does not accumulate into the norm.
    """
    _check_tau(tau)
    if int(n_steps) != n_steps or n_steps < 1:
        raise UsageError(f"n_steps must be a positive integer, got {n_steps}")
    step = expm(-1j * hamiltonian(params, b) * (tau / n_steps) / HBAR_EV)
    propagator, _ = polar(np.linalg.matrix_power(step, int(n_steps)))
    return StateVector(propagator @ state.amplitudes)


# ──────────────────────────────────────────────────────────────
# Conversion probability
# ──────────────────────────────────────────────────────────────
def conversion_probability(params: ModelParams, b: float, tau: float) -> float:
    """P(gamma_1 -> gamma_0) = sin^2(2 theta) sin^2(delta_bar tau / 2 hbar)."""
    _check_tau(tau)
    w2, delta_bar = _dressed(params, b)
    if delta_bar == 0:
        return 0.0
    return float((w2 / delta_bar) ** 2 * np.sin(half_phase(delta_bar, tau)) ** 2)


def conversion_probability_small_field(params: ModelParams, b: float, tau: float) -> float:
    """Leading order in 2 beta mu_B B / Delta: (w tau/hbar)^2 sinc^2(Delta tau / 2 hbar)."""
    _check_tau(tau)
    x = coupling(params, b) * tau / HBAR_EV
    phi_delta = half_phase(params.delta, tau)
    return float(x ** 2 * np.sinc(phi_delta / np.pi) ** 2)


# ──────────────────────────────────────────────────────────────
# Phase difference
# ──────────────────────────────────────────────────────────────
def phase_difference(params: ModelParams, b: float, tau: float) -> float:
    """
    arctan[cos(2 theta) tan(phi_bar)] - phi_delta, with the arctan continued
    through every half period of the tangent (k pi + arctan(c tan y),
    y = phi_bar - k pi). Rearranged as

        (1 - c) phi_bar + [arctan(c tan y) - y]

    so the result does not come from subtracting two nearly equal phases.
    """
    _check_tau(tau)
    _, delta_bar = _dressed(params, b)
    if delta_bar == 0:
        return 0.0
    theta = mixing_angle(params, b)
    one_minus_c = 2.0 * np.sin(theta) ** 2
    c = params.delta / delta_bar
    phi_bar = half_phase(delta_bar, tau)
    y = phi_bar - np.rint(phi_bar / np.pi) * np.pi
    sy, cy = np.sin(y), np.cos(y)
    wrapped = np.arctan2(-one_minus_c * sy * cy, cy * cy + c * sy * sy)
    return float(one_minus_c * phi_bar + wrapped)


def phase_difference_small_mixing(params: ModelParams, b: float, tau: float) -> float:
    """(w/Delta)^2 (Delta tau/hbar - sin(Delta tau/hbar)), leading order in theta."""
    _check_tau(tau)
    if params.delta == 0:
        raise DomainError("small-mixing phase expansion needs Delta > 0; use phase_difference")
    x = params.delta * tau / HBAR_EV
    return float((coupling(params, b) / params.delta) ** 2 * (x - np.sin(x)))


def jones_transfer(params: ModelParams, b: float, tau: float) -> complex:
    """
    Parallel over perpendicular Jones amplitude after one pass, from evolve().
    |t|^2 = 1 - P and arg t = delta_phi (mod 2 pi).
    """
    parallel = polarization_state(PolarizationSpec(Axis.Y, Axis.Z))
    perpendicular = polarization_state(PolarizationSpec(Axis.Y, Axis.X))
    a_par, _ = decompose_polarization(evolve(parallel, params, b, tau))
    _, a_perp = decompose_polarization(evolve(perpendicular, params, b, tau))
    return a_par / a_perp


# ──────────────────────────────────────────────────────────────
# Optical observables
# ──────────────────────────────────────────────────────────────
def geometry_factor(alpha: float) -> float:
    """sin(alpha) cos(alpha): 1/2 with B at 45 degrees to the polarization."""
    return float(np.sin(alpha) * np.cos(alpha))


def birefringence_small_mixing(params: ModelParams, b: float, tau: float, wavelength: float) -> float:
    """n_par - n_perp = (lambda / 2 pi c tau) (w/Delta)^2 (Delta tau/hbar - sin(Delta tau/hbar))."""
    if tau <= 0:
        raise UsageError(f"time must be > 0, got {tau}")
    return wavelength / (2.0 * np.pi * C * tau) * phase_difference_small_mixing(params, b, tau)


def observables(params: ModelParams, region: FieldRegion, wavelength: float) -> Observables:
    """
    Per-pass P and delta_phi of the component parallel to B; rotation and
    ellipticity scaled by geometry_factor() of the angle between polarization
    and B and by the number of passes. rho = P/2 and epsilon = delta_phi/2 at
    45 degrees.
    """
    if not np.isfinite(wavelength) or wavelength <= 0:
        raise UsageError(f"wavelength must be finite and > 0, got {wavelength}")
    a_par, _ = decompose_polarization(region.state())
    if abs(a_par) <= NULL_AMPLITUDE:
        # Propagation along B, or polarization perpendicular to it: nothing couples.
        return Observables(0.0, 0.0, 0.0, 0.0, 0.0)

    # Only (y, z) survives among the fixed geometries: polarization along B.
    alpha = 0.0 if isinstance(region.geometry, PolarizationSpec) else float(region.geometry)
    weight = geometry_factor(alpha)
    tau = region.tau
    p = conversion_probability(params, region.b, tau)
    dphi = phase_difference(params, region.b, tau)
    return Observables(
        p_conversion=p,
        rotation=region.passes * p * weight,
        phase_diff=dphi,
        ellipticity=region.passes * dphi * weight,
        birefringence=dphi * wavelength / (2.0 * np.pi * region.l),
    )
