from .abstract_factory import AppComponents
from ..product.abstract_product import TableWriter, RecordWriter
from ..product.concrete_products_json import JsonTableWriter, JsonRecordWriter
from typing import TextIO

class JsonAppComponents(AppComponents):
    def create_table_writer(self, stream: TextIO, significant_digits: int = 9) -> TableWriter:
        return JsonTableWriter(stream, significant_digits = significant_digits)

    def create_record_writer(self, stream: TextIO, significant_digits: int = 9) -> RecordWriter:
        return JsonRecordWriter(stream, significant_digits = significant_digits)
