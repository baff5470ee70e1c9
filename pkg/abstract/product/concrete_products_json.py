from .abstract_product import TableWriter, RecordWriter
from typing import Any, Iterable, Mapping, Sequence
import json

# --- Concrete Products for JSON ---
# Floats are written with repr precision, so a JSON output parses back to the
# exact numbers; significant_digits only applies to CSV.

class JsonTableWriter(TableWriter):
    def write_table(self, columns: Sequence[str], rows: Iterable[Sequence[Any]]) -> int:
        records = [dict(zip(columns, row)) for row in rows]
        json.dump(records, self._stream, indent=2, allow_nan=False)
        self._stream.write("\n")
        return len(records)


class JsonRecordWriter(RecordWriter):
    def write_record(self, record: Mapping[str, Any]) -> None:
        json.dump(dict(record), self._stream, indent=2, allow_nan=False)
        self._stream.write("\n")
