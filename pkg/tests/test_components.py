import io
import json
import logging

import pytest
import yaml

from abstract.factory.concrete_factory_csv import CsvAppComponents
from abstract.factory.concrete_factory_json import JsonAppComponents
from abstract.product.concrete_products_common import DEFAULTS, YamlSettings
from abstract.product.concrete_products_csv import CsvRecordWriter, CsvTableWriter, format_cell
from abstract.product.concrete_products_json import JsonRecordWriter, JsonTableWriter
from create_yaml_config import write_default_settings
from photon_fusion.errors import ConfigError
from photon_fusion.exclusion import SolverSettings
from utils.logger import Logger, StderrHandler


# ── Writers ───────────────────────────────────────────────────
@pytest.mark.parametrize("value, text", [
    (None, ""), (True, "1"), (False, "0"), (0.0, "0.00000000e+00"),
    (1e-3, "1.00000000e-03"), (-2.5e-24, "-2.50000000e-24"), (7, "7"),
])
def test_format_cell(value, text):
    assert format_cell(value, 9) == text


def test_csv_table_layout():
    out = io.StringIO()
    n = CsvTableWriter(out).write_table(("delta_ev", "beta", "node_flag"), [(1e-3, None, True), (2e-3, 4e-12, False)])
    assert n == 2
    assert out.getvalue() == "delta_ev,beta,node_flag\n1.00000000e-03,,1\n2.00000000e-03,4.00000000e-12,0\n"


def test_csv_digits():
    out = io.StringIO()
    CsvTableWriter(out, significant_digits=3).write_table(("x",), [(1.0 / 3.0,)])
    assert out.getvalue().splitlines()[1] == "3.33e-01"


def test_csv_record():
    out = io.StringIO()
    CsvRecordWriter(out).write_record({"a": 1.5, "b": 0.0})
    assert out.getvalue() == "a,b\n1.50000000e+00,0.00000000e+00\n"


def test_json_table_parses_back_exactly():
    out = io.StringIO()
    rows = [(1.0 / 3.0, None, True), (2e-300, 4e-12, False)]
    JsonTableWriter(out).write_table(("delta_ev", "beta", "node_flag"), rows)
    assert json.loads(out.getvalue()) == [dict(zip(("delta_ev", "beta", "node_flag"), r)) for r in rows]


def test_json_record_rejects_nan():
    with pytest.raises(ValueError):
        JsonRecordWriter(io.StringIO()).write_record({"x": float("nan")})


def test_factories_pick_their_family():
    out = io.StringIO()
    assert isinstance(CsvAppComponents().create_table_writer(out, 9), CsvTableWriter)
    assert isinstance(CsvAppComponents().create_record_writer(out, 9), CsvRecordWriter)
    assert isinstance(JsonAppComponents().create_table_writer(out, 9), JsonTableWriter)
    assert isinstance(JsonAppComponents().create_record_writer(out, 9), JsonRecordWriter)


# ── Settings ──────────────────────────────────────────────────
def test_shipped_settings_match_defaults():
    settings = CsvAppComponents().create_settings()
    assert settings.source() is not None
    assert settings.solver_settings() == SolverSettings()
    assert settings.scan_workers() == DEFAULTS["scan"]["workers"]
    assert settings.significant_digits() == 9
    assert settings.default_format() == "csv"


def test_settings_override(tmp_path):
    path = tmp_path / "settings.yaml"
    path.write_text("solver:\n  beta_max: 1.0e+5\n  points_per_decade: 5\noutput:\n  format: json\n", encoding="utf-8")
    settings = YamlSettings(path)
    assert settings.solver_settings().beta_max == 1e5
    assert settings.solver_settings().points_per_decade == 5
    assert settings.default_format() == "json"
    assert settings.logger_options()["level"] == "info"


@pytest.mark.parametrize("text, field", [
    ("plotting:\n  dpi: 300\n", "plotting"),
    ("solver:\n  tolerance: 1.0\n", "solver.tolerance"),
    ("scan:\n  workers: many\n", "scan.workers"),
    ("scan:\n  workers: 0\n", "scan.workers"),
    ("output:\n  format: xml\n", "output.format"),
    ("solver:\n  beta_min: 1.0e+20\n", "solver"),
])
def test_settings_errors_name_the_field(tmp_path, text, field):
    path = tmp_path / "settings.yaml"
    path.write_text(text, encoding="utf-8")
    with pytest.raises(ConfigError) as exc:
        YamlSettings(path)
    assert exc.value.field == field


def test_explicit_missing_settings_file(tmp_path):
    with pytest.raises(ConfigError, match="not found"):
        YamlSettings(tmp_path / "missing.yaml")


def test_default_settings_round_trip(tmp_path):
    path = write_default_settings(tmp_path / "config.yaml")
    with path.open(encoding="utf-8") as f:
        assert yaml.safe_load(f) == DEFAULTS
    settings = YamlSettings(path)
    assert settings.solver_settings() == SolverSettings()
    with pytest.raises(FileExistsError):
        write_default_settings(path)
    write_default_settings(path, overwrite=True)


# ── Logger ────────────────────────────────────────────────────
def test_logger_is_a_singleton():
    Logger.drop_instance()
    try:
        first = Logger(level="debug")
        assert Logger() is first
        assert first.level == logging.DEBUG
    finally:
        Logger.drop_instance()


def test_logger_rejects_unknown_level():
    Logger.drop_instance()
    with pytest.raises(ConfigError):
        Logger(level="verbose")
    Logger.drop_instance()


def test_logger_writes_to_current_stderr(capsys):
    Logger.drop_instance()
    try:
        Logger(level="info").warning("field mismatch")
        captured = capsys.readouterr()
        assert "field mismatch" in captured.err
        assert captured.out == ""
        assert any(isinstance(h, StderrHandler) for h in Logger().handlers)
    finally:
        Logger.drop_instance()


def test_logger_file_output(tmp_path):
    Logger.drop_instance()
    try:
        log = Logger(level="info", to_screen=False, to_file=True, log_dir=str(tmp_path / "Logs"))
        log.info("written")
        for h in log.handlers:
            h.flush()
        (log_file,) = (tmp_path / "Logs").iterdir()
        assert "written" in log_file.read_text(encoding="utf-8")
    finally:
        Logger.drop_instance()


def test_dropping_the_logger_closes_its_log_file(tmp_path):
    Logger.drop_instance()
    log = Logger(level="info", to_screen=False, to_file=True, log_dir=str(tmp_path / "Logs"))
    (handler,) = [h for h in log.handlers if isinstance(h, logging.FileHandler)]
    log.info("before drop")
    Logger.drop_instance()
    assert handler.stream is None
    assert log.handlers == []
    assert Logger(level="info", to_screen=False) is not log
    Logger.drop_instance()
