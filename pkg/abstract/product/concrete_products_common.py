from .abstract_product import Settings, ConfigReader
from photon_fusion.errors import ConfigError, PhotonFusionError
from photon_fusion.exclusion import SolverSettings
from photon_fusion.run_config import OUTPUT_FORMATS, RunConfig, run_config_from_dict
from typing import Any, Dict, Optional
from pathlib import Path
import json
import yaml

DEFAULT_SETTINGS_PATH = Path(__file__).resolve().parents[2] / "config.yaml"

DEFAULTS: Dict[str, Dict[str, Any]] = {
    "logging": {"level": "info", "to_screen": True, "to_file": False, "log_dir": "Logs"},
    "solver": {"beta_min": 1e-30, "beta_max": 1e10, "points_per_decade": 20,
               "beta_rtol": 1e-12, "node_tolerance": 1e-9},
    "scan": {"workers": 4},
    "output": {"significant_digits": 9, "format": "csv"},
}


# ──────────────────────────────────────────────────────────────
# Concrete Products - Settings (config.yaml)
# ──────────────────────────────────────────────────────────────
class YamlSettings(Settings):
    def __init__(self, path: Optional[Path] = None):
        self.__path = Path(path) if path is not None else DEFAULT_SETTINGS_PATH
        self.__required = path is not None
        self.__source: Optional[Path] = None
        self.__cfg = {section: dict(values) for section, values in DEFAULTS.items()}
        self.__load()
        self.__solver = self.__build_solver()

    def __load(self) -> None:
        if not self.__path.exists():
            if self.__required:
                raise ConfigError(str(self.__path), "settings file not found")
            return
        try:
            with self.__path.open(encoding="utf-8") as f:
                cfg = yaml.safe_load(f) or {}
        except yaml.YAMLError as e:
            raise ConfigError(str(self.__path), f"invalid YAML: {e}") from e
        if not isinstance(cfg, dict):
            raise ConfigError(str(self.__path), "expected a mapping of sections")
        for section, values in cfg.items():
            if section not in DEFAULTS:
                raise ConfigError(section, "unknown settings section")
            if not isinstance(values, dict):
                raise ConfigError(section, "expected a mapping")
            for key, value in values.items():
                if key not in DEFAULTS[section]:
                    raise ConfigError(f"{section}.{key}", "unknown setting")
                expected = type(DEFAULTS[section][key])
                if expected is float and isinstance(value, int) and not isinstance(value, bool):
                    value = float(value)
                if not isinstance(value, expected) or (expected is int and isinstance(value, bool)):
                    raise ConfigError(f"{section}.{key}", f"expected {expected.__name__}, got {value!r}")
                self.__cfg[section][key] = value
        if self.__cfg["output"]["format"] not in OUTPUT_FORMATS:
            raise ConfigError("output.format", f"expected one of {OUTPUT_FORMATS}")
        if self.__cfg["scan"]["workers"] < 1:
            raise ConfigError("scan.workers", "must be >= 1")
        if not 1 <= self.__cfg["output"]["significant_digits"] <= 17:
            raise ConfigError("output.significant_digits", "must be in [1, 17]")
        self.__source = self.__path

    def __build_solver(self) -> SolverSettings:
        try:
            return SolverSettings(**self.__cfg["solver"])
        except PhotonFusionError as e:
            raise ConfigError("solver", str(e)) from e

    def source(self) -> Optional[Path]: return self.__source

    def logger_options(self) -> Dict[str, Any]: return dict(self.__cfg["logging"])

    def solver_settings(self) -> SolverSettings: return self.__solver

    def scan_workers(self) -> int: return self.__cfg["scan"]["workers"]

    def significant_digits(self) -> int: return self.__cfg["output"]["significant_digits"]

    def default_format(self) -> str: return self.__cfg["output"]["format"]


# ──────────────────────────────────────────────────────────────
# Concrete Products - Run config (JSON)
# ──────────────────────────────────────────────────────────────
class JsonConfigReader(ConfigReader):
    def load_run_config(self, path: Path) -> RunConfig:
        path = Path(path)
        try:
            with path.open(encoding="utf-8") as f:
                data = json.load(f)
        except OSError as e:
            raise ConfigError(str(path), f"cannot read: {e.strerror or e}") from e
        except json.JSONDecodeError as e:
            raise ConfigError(str(path), f"invalid JSON at line {e.lineno}: {e.msg}") from e
        try:
            return run_config_from_dict(data)
        except ConfigError as e:
            raise ConfigError(f"{path}:{e.field}", e.message) from e
