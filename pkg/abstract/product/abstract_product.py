from abc import ABC, abstractmethod
from pathlib import Path
from typing import Any, Dict, Iterable, Mapping, Optional, Sequence, TextIO

from photon_fusion.exclusion import SolverSettings
from photon_fusion.run_config import RunConfig

# --- Abstract Products ---

class Settings(ABC):
    @abstractmethod
    def source(self) -> Optional[Path]: ...

    @abstractmethod
    def logger_options(self) -> Dict[str, Any]: ...

    @abstractmethod
    def solver_settings(self) -> SolverSettings: ...

    @abstractmethod
    def scan_workers(self) -> int: ...

    @abstractmethod
    def significant_digits(self) -> int: ...

    @abstractmethod
    def default_format(self) -> str: ...


class ConfigReader(ABC):
    @abstractmethod
    def load_run_config(self, path: Path) -> RunConfig: ...


class TableWriter(ABC):
    """Rows of plain values (float, int, bool, str or None) under a header."""

    def __init__(self, stream: TextIO, significant_digits: int = 9) -> None:
        self._stream = stream
        self._digits = significant_digits

    @abstractmethod
    def write_table(self, columns: Sequence[str], rows: Iterable[Sequence[Any]]) -> int: ...


class RecordWriter(ABC):
    """A single named record, e.g. the observables of one prediction."""

    def __init__(self, stream: TextIO, significant_digits: int = 9) -> None:
        self._stream = stream
        self._digits = significant_digits

    @abstractmethod
    def write_record(self, record: Mapping[str, Any]) -> None: ...
