from abc import ABC, abstractmethod
from ..product.abstract_product import Settings, ConfigReader, TableWriter, RecordWriter
from ..product.concrete_products_common import YamlSettings, JsonConfigReader
from pathlib import Path
from typing import Optional, TextIO
# ──────────────────────────────────────────────────────────────
# Abstract Factory
# ──────────────────────────────────────────────────────────────

class AppComponents(ABC):
    """One family per output format. Settings and run configs are read the same way by every family."""

    def create_settings(self, path: Optional[Path] = None) -> Settings:
        return YamlSettings(path)

    def create_config_reader(self) -> ConfigReader:
        return JsonConfigReader()

    @abstractmethod
    def create_table_writer(self, stream: TextIO, significant_digits: int) -> TableWriter: ...

    @abstractmethod
    def create_record_writer(self, stream: TextIO, significant_digits: int) -> RecordWriter: ...
