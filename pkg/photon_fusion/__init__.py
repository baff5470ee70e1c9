"""Magnetically induced vacuum dichroism and birefringence in the photon fusion model."""

from photon_fusion.axion_bridge import AxionParams, axion_conversion_probability, to_model_params
from photon_fusion.dynamics import (FieldRegion, ModelParams, Observables, conversion_probability, evolve,
                                    observables, phase_difference)
from photon_fusion.errors import ConfigError, DomainError, PhotonFusionError, UsageError
from photon_fusion.exclusion import ExperimentConfig, grid_scan, limit_curve, signal_curve

__version__ = "0.1.0"
