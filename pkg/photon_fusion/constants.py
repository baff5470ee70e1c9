"""
Physical constants and unit conversions
---------------------------------------

Values are the CODATA 2018 recommended values. They are pinned here and never
read from configuration, so every output is reproducible bit-for-bit.

Natural units are Heaviside-Lorentz with hbar = c = 1, the convention used by
the axion-photon mixing literature.

Tesla to eV^2
    In Heaviside-Lorentz units the field energy density is B^2/2, in SI it is
    B^2/(2 mu_0). Equating both and converting J/m^3 to eV^4 with (hbar c)^3:

        B[eV^2] = B[T] * sqrt((hbar c)^3 / mu_0) / eV^2   (~195.35 eV^2 per T)
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = ['PhysicalConstants', 'CODATA_2018', 'HBAR', 'MU_BOHR', 'C', 'ELECTRONVOLT',
           'MU_0', 'HBAR_EV', 'MU_BOHR_EV', 'HBAR_C_EV_M', 'TESLA_TO_EV2', 'GEV',
           'QED_BIREFRINGENCE_PER_T2', 'ev_to_joule', 'joule_to_ev', 'tesla_to_ev2',
           'ev2_to_tesla', 'meter_to_inverse_ev', 'inverse_ev_to_meter',
           'inverse_gev_to_inverse_ev', 'qed_reference_birefringence']


@dataclass(frozen=True)
class PhysicalConstants:
    hbar: float          # J s
    mu_bohr: float       # J/T
    c: float             # m/s
    electronvolt: float  # J
    mu_0: float          # N/A^2


CODATA_2018 = PhysicalConstants(
    hbar=1.054571817e-34,
    mu_bohr=9.2740100783e-24,
    c=299792458.0,
    electronvolt=1.602176634e-19,
    mu_0=1.25663706212e-6,
)

HBAR = CODATA_2018.hbar
MU_BOHR = CODATA_2018.mu_bohr
C = CODATA_2018.c
ELECTRONVOLT = CODATA_2018.electronvolt
MU_0 = CODATA_2018.mu_0

HBAR_EV = HBAR / ELECTRONVOLT                 # eV s
MU_BOHR_EV = MU_BOHR / ELECTRONVOLT           # eV/T
HBAR_C_EV_M = HBAR * C / ELECTRONVOLT         # eV m
TESLA_TO_EV2 = float(np.sqrt((HBAR * C) ** 3 / MU_0)) / ELECTRONVOLT ** 2
GEV = 1.0e9                                   # eV

# Standard QED vacuum birefringence, n_par - n_perp per T^2.
QED_BIREFRINGENCE_PER_T2 = 4.0e-24


def ev_to_joule(e: float) -> float:
    return e * ELECTRONVOLT


def joule_to_ev(e: float) -> float:
    return e / ELECTRONVOLT


def tesla_to_ev2(b: float) -> float:
    """Magnetic field in T -> eV^2 (Heaviside-Lorentz natural units)."""
    return b * TESLA_TO_EV2


def ev2_to_tesla(b: float) -> float:
    return b / TESLA_TO_EV2


def meter_to_inverse_ev(l: float) -> float:
    return l / HBAR_C_EV_M


def inverse_ev_to_meter(l: float) -> float:
    return l * HBAR_C_EV_M


def inverse_gev_to_inverse_ev(g: float) -> float:
    return g / GEV


def qed_reference_birefringence(b: float) -> float:
    """QED reference n_par - n_perp for a field b in T (reference line only)."""
    return QED_BIREFRINGENCE_PER_T2 * b * b
