"""
Run configuration: an experiment, an optional model and output choices.

Field names carry their units (b_tesla, l_meter, delta_ev, g_per_gev, ...).
Unknown keys are rejected so a misspelt unit never passes silently.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Dict, Mapping, Optional, Union

from photon_fusion.axion_bridge import AxionParams
from photon_fusion.dynamics import ModelParams
from photon_fusion.errors import ConfigError, PhotonFusionError
from photon_fusion.exclusion import ExperimentConfig, ObservedRotation, RotationLimit

OUTPUT_FORMATS = ("csv", "json")

EXPERIMENT_KEYS = {"name", "b_tesla", "l_meter", "lambda_meter", "passes", "polarization_angle_rad",
                   "observed_rotation_rad", "sigma_rad", "limit_rotation_2sigma_rad", "provenance"}
SIGNAL_KEYS = {"observed_rotation_rad", "sigma_rad"}
LIMIT_KEYS = {"limit_rotation_2sigma_rad"}
FUSION_KEYS = {"delta_ev", "beta"}
AXION_KEYS = {"m_a_ev", "g_per_gev", "omega_ev"}
RUN_KEYS = {"experiment", "model", "output_format", "output_path"}

Model = Union[ModelParams, AxionParams]


@dataclass(frozen=True)
class RunConfig:
    experiment: ExperimentConfig
    model: Optional[Model] = None
    output_format: Optional[str] = None
    output_path: Optional[str] = None


def _require_mapping(value: Any, field: str) -> Mapping[str, Any]:
    if not isinstance(value, Mapping):
        raise ConfigError(field, f"expected an object, got {type(value).__name__}")
    return value


def _check_keys(data: Mapping[str, Any], allowed: set, where: str) -> None:
    unknown = sorted(set(data) - allowed)
    if unknown:
        raise ConfigError(f"{where}.{unknown[0]}", "unknown field")


def _number(data: Mapping[str, Any], key: str, where: str) -> float:
    if key not in data:
        raise ConfigError(f"{where}.{key}", "missing field")
    value = data[key]
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ConfigError(f"{where}.{key}", f"expected a number, got {value!r}")
    return float(value)


def _integer(data: Mapping[str, Any], key: str, where: str) -> int:
    value = data.get(key)
    if isinstance(value, bool) or not isinstance(value, int):
        raise ConfigError(f"{where}.{key}", f"expected an integer, got {value!r}")
    return value


def experiment_from_dict(data: Any, where: str = "experiment") -> ExperimentConfig:
    data = _require_mapping(data, where)
    _check_keys(data, EXPERIMENT_KEYS, where)
    present = set(data)
    if SIGNAL_KEYS & present and LIMIT_KEYS & present:
        raise ConfigError(where, "give either observed_rotation_rad/sigma_rad or limit_rotation_2sigma_rad, not both")
    if SIGNAL_KEYS & present:
        measurement = ObservedRotation(_number(data, "observed_rotation_rad", where),
                                       _number(data, "sigma_rad", where))
    elif LIMIT_KEYS & present:
        measurement = RotationLimit(_number(data, "limit_rotation_2sigma_rad", where))
    else:
        raise ConfigError(where, "missing measurement: observed_rotation_rad/sigma_rad or limit_rotation_2sigma_rad")

    name = data.get("name")
    if not isinstance(name, str) or not name:
        raise ConfigError(f"{where}.name", f"expected a non-empty string, got {name!r}")
    provenance = data.get("provenance", "")
    if not isinstance(provenance, str):
        raise ConfigError(f"{where}.provenance", f"expected a string, got {provenance!r}")
    try:
        return ExperimentConfig(
            name=name,
            b=_number(data, "b_tesla", where),
            l=_number(data, "l_meter", where),
            wavelength=_number(data, "lambda_meter", where),
            passes=_integer(data, "passes", where),
            polarization_angle=_number(data, "polarization_angle_rad", where),
            measurement=measurement,
            provenance=provenance,
        )
    except ConfigError:
        raise
    except PhotonFusionError as e:
        raise ConfigError(where, str(e)) from e


def model_from_dict(data: Any, where: str = "model") -> Model:
    data = _require_mapping(data, where)
    keys = set(data)
    try:
        if keys & FUSION_KEYS and not keys & AXION_KEYS:
            _check_keys(data, FUSION_KEYS, where)
            return ModelParams(delta=_number(data, "delta_ev", where), beta=_number(data, "beta", where))
        if keys & AXION_KEYS and not keys & FUSION_KEYS:
            _check_keys(data, AXION_KEYS, where)
            return AxionParams(m_a=_number(data, "m_a_ev", where), g=_number(data, "g_per_gev", where),
                               omega=_number(data, "omega_ev", where))
    except ConfigError:
        raise
    except PhotonFusionError as e:
        raise ConfigError(where, str(e)) from e
    if keys & FUSION_KEYS:
        raise ConfigError(where, "mixes fusion (delta_ev, beta) and axion (m_a_ev, g_per_gev, omega_ev) fields")
    _check_keys(data, FUSION_KEYS | AXION_KEYS, where)
    raise ConfigError(where, "expected {delta_ev, beta} or {m_a_ev, g_per_gev, omega_ev}")


def run_config_from_dict(data: Any) -> RunConfig:
    data = _require_mapping(data, "config")
    _check_keys(data, RUN_KEYS, "config")
    if "experiment" not in data:
        raise ConfigError("config.experiment", "missing field")
    output_format = data.get("output_format")
    if output_format is not None and output_format not in OUTPUT_FORMATS:
        raise ConfigError("config.output_format", f"expected one of {OUTPUT_FORMATS}, got {output_format!r}")
    output_path = data.get("output_path")
    if output_path is not None and not isinstance(output_path, str):
        raise ConfigError("config.output_path", f"expected a string or null, got {output_path!r}")
    model = data.get("model")
    return RunConfig(
        experiment=experiment_from_dict(data["experiment"]),
        model=None if model is None else model_from_dict(model),
        output_format=output_format,
        output_path=output_path,
    )


def experiment_to_dict(e: ExperimentConfig) -> Dict[str, Any]:
    out: Dict[str, Any] = {
        "name": e.name,
        "b_tesla": e.b,
        "l_meter": e.l,
        "lambda_meter": e.wavelength,
        "passes": e.passes,
        "polarization_angle_rad": e.polarization_angle,
    }
    if isinstance(e.measurement, ObservedRotation):
        out["observed_rotation_rad"] = e.measurement.rotation
        out["sigma_rad"] = e.measurement.sigma
    else:
        out["limit_rotation_2sigma_rad"] = e.measurement.limit_2sigma
    if e.provenance:
        out["provenance"] = e.provenance
    return out


def model_to_dict(m: Model) -> Dict[str, float]:
    if isinstance(m, ModelParams):
        return {"delta_ev": m.delta, "beta": m.beta}
    return {"m_a_ev": m.m_a, "g_per_gev": m.g, "omega_ev": m.omega}


def run_config_to_dict(cfg: RunConfig) -> Dict[str, Any]:
    out: Dict[str, Any] = {"experiment": experiment_to_dict(cfg.experiment)}
    if cfg.model is not None:
        out["model"] = model_to_dict(cfg.model)
    if cfg.output_format is not None:
        out["output_format"] = cfg.output_format
    if cfg.output_path is not None:
        out["output_path"] = cfg.output_path
    return out
