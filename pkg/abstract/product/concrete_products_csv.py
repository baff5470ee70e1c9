from .abstract_product import TableWriter, RecordWriter
from typing import Any, Iterable, Mapping, Sequence
import csv


def format_cell(value: Any, digits: int) -> str:
    """Floats in scientific notation with `digits` significant digits, None empty, flags 0/1."""
    if value is None:
        return ""
    if isinstance(value, bool):
        return "1" if value else "0"
    if isinstance(value, float):
        return f"{value:.{digits - 1}e}"
    return str(value)


# --- Concrete Products for CSV ---

class CsvTableWriter(TableWriter):
    def write_table(self, columns: Sequence[str], rows: Iterable[Sequence[Any]]) -> int:
        writer = csv.writer(self._stream, lineterminator="\n")
        writer.writerow(columns)
        count = 0
        for row in rows:
            writer.writerow([format_cell(v, self._digits) for v in row])
            count += 1
        return count


class CsvRecordWriter(RecordWriter):
    def write_record(self, record: Mapping[str, Any]) -> None:
        writer = csv.writer(self._stream, lineterminator="\n")
        writer.writerow(list(record))
        writer.writerow([format_cell(v, self._digits) for v in record.values()])
