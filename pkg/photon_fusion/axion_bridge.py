"""
Dictionary between the fusion model and axion-like-particle (ALP) mixing.

ALP mixing of the B-parallel photon with the pseudoscalar is the two-level
problem (Raffelt-Stodolsky, natural units, lengths in eV^-1)

    [[0,         g B / 2     ],
     [g B / 2,  -m_a^2 / 2 w ]]

so P = sin^2(2 theta_a) sin^2(Delta_osc L / 2) with
tan(2 theta_a) = g B / (m_a^2 / 2 w) and Delta_osc = hypot(m_a^2 / 2 w, g B).

The fusion model has the same structure in time with tau = L/c. Requiring both
probabilities to be equal fixes the dictionary:

    Delta        = m_a^2 / (2 w)     (delta_factor = 1/2)
    beta mu_B B  = g B / 2           (coupling_factor = 1/2)

A literal reading of "Delta corresponds to m_a^2/w" is kept as
LITERAL_CONVENTION; it does not reproduce the ALP probability.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Sequence

import numpy as np

from photon_fusion.constants import (C, MU_BOHR_EV, TESLA_TO_EV2, inverse_ev_to_meter, inverse_gev_to_inverse_ev,
                                     meter_to_inverse_ev)
from photon_fusion.dynamics import ModelParams, conversion_probability
from photon_fusion.errors import UsageError

SCALING_COLUMNS = ("length_m", "p_fusion_omega1", "p_fusion_omega2", "p_alp_omega1", "p_alp_omega2")


@dataclass(frozen=True)
class AxionParams:
    m_a: float    # eV
    g: float      # GeV^-1
    omega: float  # eV

    def __post_init__(self) -> None:
        for name in ("m_a", "omega"):
            value = getattr(self, name)
            if not np.isfinite(value) or value <= 0:
                raise UsageError(f"{name} must be finite and > 0, got {value}")
        if not np.isfinite(self.g) or self.g < 0:
            raise UsageError(f"g must be finite and >= 0, got {self.g}")


@dataclass(frozen=True)
class AxionConvention:
    delta_factor: float     # Delta = delta_factor * m_a^2 / omega
    coupling_factor: float  # beta mu_B B = coupling_factor * g B
    note: str = ""


EQUIVALENT_CONVENTION = AxionConvention(
    delta_factor=0.5, coupling_factor=0.5,
    note="fixed by equality of the fusion and ALP conversion probabilities",
)
LITERAL_CONVENTION = AxionConvention(
    delta_factor=1.0, coupling_factor=0.5,
    note="Delta = m_a^2/omega taken literally; not probability-equivalent",
)


def _beta_per_coupling() -> float:
    # beta / g for coupling_factor = 1, with g in GeV^-1 (independent of B).
    return inverse_gev_to_inverse_ev(1.0) * TESLA_TO_EV2 / MU_BOHR_EV


def to_model_params(a: AxionParams, b: float,
                    convention: AxionConvention = EQUIVALENT_CONVENTION) -> ModelParams:
    """
    Fusion parameters equivalent to an ALP. beta does not depend on b because
    both off-diagonal elements are linear in B; b is accepted for symmetry with
    axion_conversion_probability.
    """
    if not np.isfinite(b) or b < 0:
        raise UsageError(f"field must be finite and >= 0, got {b}")
    return ModelParams(
        delta=convention.delta_factor * a.m_a ** 2 / a.omega,
        beta=convention.coupling_factor * a.g * _beta_per_coupling(),
    )


def to_axion_params(p: ModelParams, omega: float,
                    convention: AxionConvention = EQUIVALENT_CONVENTION) -> AxionParams:
    """Inverse of to_model_params at photon energy omega."""
    return AxionParams(
        m_a=float(np.sqrt(p.delta * omega / convention.delta_factor)),
        g=p.beta / (convention.coupling_factor * _beta_per_coupling()),
        omega=omega,
    )


def _alp_terms(a: AxionParams, b: float):
    q = a.m_a ** 2 / (2.0 * a.omega)                              # eV
    gb = inverse_gev_to_inverse_ev(a.g) * b * TESLA_TO_EV2      # eV
    return q, gb, float(np.hypot(q, gb))


def axion_conversion_probability(a: AxionParams, b: float, l: float) -> float:
    if l < 0 or b < 0:
        raise UsageError(f"field and length must be >= 0, got b={b}, l={l}")
    _, gb, delta_osc = _alp_terms(a, b)
    if delta_osc == 0:
        return 0.0
    return float((gb / delta_osc) ** 2 * np.sin(delta_osc * meter_to_inverse_ev(l) / 2.0) ** 2)


def alp_oscillation_nodes(a: AxionParams, b: float, count: int) -> List[float]:
    """First `count` lengths in m where the ALP probability vanishes."""
    _, _, delta_osc = _alp_terms(a, b)
    if delta_osc == 0:
        return []
    period = 2.0 * np.pi / delta_osc                               # eV^-1
    return [inverse_ev_to_meter(k * period) for k in range(1, count + 1)]


def oscillation_scaling_report(a: AxionParams, p: ModelParams, b: float,
                               l_grid: Sequence[float], omega_ratio: float = 2.0) -> List[Dict[str, float]]:
    """
    P(L) of both models at omega and omega_ratio * omega. The fusion model has
    no photon energy in it, so its two columns are the same numbers.
    """
    if omega_ratio <= 0:
        raise UsageError(f"omega_ratio must be > 0, got {omega_ratio}")
    a2 = AxionParams(m_a=a.m_a, g=a.g, omega=a.omega * omega_ratio)
    rows = []
    for l in l_grid:
        if not np.isfinite(l) or l < 0:
            raise UsageError(f"lengths must be finite and >= 0, got {l}")
        p_fusion = conversion_probability(p, b, l / C)
        rows.append(dict(zip(SCALING_COLUMNS, (
            float(l), p_fusion, p_fusion,
            axion_conversion_probability(a, b, l),
            axion_conversion_probability(a2, b, l),
        ))))
    return rows
