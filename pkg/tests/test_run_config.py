import json
from pathlib import Path

import pytest

from abstract.product.concrete_products_common import JsonConfigReader
from photon_fusion.axion_bridge import AxionParams
from photon_fusion.dynamics import ModelParams
from photon_fusion.errors import ConfigError
from photon_fusion.exclusion import ObservedRotation, RotationLimit
from photon_fusion.run_config import run_config_from_dict, run_config_to_dict

CONFIGS = Path(__file__).resolve().parents[1] / "configs"


def base_config() -> dict:
    return {
        "experiment": {
            "name": "bench", "b_tesla": 2.0, "l_meter": 1.5, "lambda_meter": 1.064e-6, "passes": 10,
            "polarization_angle_rad": 0.5, "limit_rotation_2sigma_rad": 1e-9,
        },
        "model": {"delta_ev": 1e-7, "beta": 1e-10},
        "output_format": "json",
        "output_path": "out.json",
    }


@pytest.mark.parametrize("name", ["pvlas_like.json", "brft_like.json", "alp_reference.json"])
def test_shipped_configs_parse_and_are_illustrative(name):
    cfg = JsonConfigReader().load_run_config(CONFIGS / name)
    assert "ILLUSTRATIVE" in cfg.experiment.provenance


def test_shipped_config_contents():
    reader = JsonConfigReader()
    pvlas = reader.load_run_config(CONFIGS / "pvlas_like.json")
    assert isinstance(pvlas.experiment.measurement, ObservedRotation)
    assert isinstance(pvlas.model, ModelParams)
    brft = reader.load_run_config(CONFIGS / "brft_like.json")
    assert isinstance(brft.experiment.measurement, RotationLimit)
    alp = reader.load_run_config(CONFIGS / "alp_reference.json")
    assert alp.model == AxionParams(m_a=1e-3, g=3e-6, omega=1.165)


@pytest.mark.parametrize("name", ["pvlas_like.json", "brft_like.json", "alp_reference.json"])
def test_round_trip_is_identity(name):
    with open(CONFIGS / name, encoding="utf-8") as f:
        data = json.load(f)
    cfg = run_config_from_dict(data)
    assert run_config_to_dict(cfg) == data
    assert run_config_from_dict(json.loads(json.dumps(run_config_to_dict(cfg)))) == cfg


def test_round_trip_with_output_fields():
    cfg = run_config_from_dict(base_config())
    assert cfg.output_format == "json" and cfg.output_path == "out.json"
    assert run_config_to_dict(cfg) == base_config()


def test_model_is_optional():
    data = base_config()
    del data["model"]
    assert run_config_from_dict(data).model is None


def _error_field(data) -> str:
    with pytest.raises(ConfigError) as exc:
        run_config_from_dict(data)
    return exc.value.field


def test_unknown_experiment_key_names_field():
    data = base_config()
    data["experiment"]["b_gauss"] = 1.0
    assert _error_field(data) == "experiment.b_gauss"


def test_unknown_top_level_key():
    data = base_config()
    data["plot"] = True
    assert _error_field(data) == "config.plot"


def test_missing_field():
    data = base_config()
    del data["experiment"]["l_meter"]
    assert _error_field(data) == "experiment.l_meter"


def test_both_measurements_rejected():
    data = base_config()
    data["experiment"].update(observed_rotation_rad=1e-9, sigma_rad=1e-10)
    assert _error_field(data) == "experiment"


def test_no_measurement_rejected():
    data = base_config()
    del data["experiment"]["limit_rotation_2sigma_rad"]
    assert _error_field(data) == "experiment"


def test_mixed_model_rejected():
    data = base_config()
    data["model"]["m_a_ev"] = 1e-3
    assert _error_field(data) == "model"


@pytest.mark.parametrize("key, value, field", [
    ("passes", True, "experiment.passes"),
    ("passes", 2.5, "experiment.passes"),
    ("b_tesla", "5", "experiment.b_tesla"),
    ("b_tesla", -1.0, "experiment"),
    ("name", "", "experiment.name"),
])
def test_bad_experiment_values(key, value, field):
    data = base_config()
    data["experiment"][key] = value
    assert _error_field(data) == field


def test_bad_output_format():
    data = base_config()
    data["output_format"] = "xlsx"
    assert _error_field(data) == "config.output_format"


def test_reader_prefixes_path(tmp_path):
    path = tmp_path / "bad.json"
    data = base_config()
    data["experiment"]["colour"] = "red"
    path.write_text(json.dumps(data), encoding="utf-8")
    with pytest.raises(ConfigError) as exc:
        JsonConfigReader().load_run_config(path)
    assert exc.value.field == f"{path}:experiment.colour"


def test_reader_reports_invalid_json(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{ not json", encoding="utf-8")
    with pytest.raises(ConfigError, match="invalid JSON"):
        JsonConfigReader().load_run_config(path)


def test_reader_reports_missing_file(tmp_path):
    with pytest.raises(ConfigError, match="cannot read"):
        JsonConfigReader().load_run_config(tmp_path / "nope.json")
