from .abstract_factory import AppComponents
from ..product.abstract_product import TableWriter, RecordWriter
from ..product.concrete_products_csv import CsvTableWriter, CsvRecordWriter
from typing import TextIO

class CsvAppComponents(AppComponents):
    def create_table_writer(self, stream: TextIO, significant_digits: int = 9) -> TableWriter:
        return CsvTableWriter(stream, significant_digits = significant_digits)

    def create_record_writer(self, stream: TextIO, significant_digits: int = 9) -> RecordWriter:
        return CsvRecordWriter(stream, significant_digits = significant_digits)
