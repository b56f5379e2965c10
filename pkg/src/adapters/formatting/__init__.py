from src.adapters.formatting.csv_formatter import CsvFormatter
from src.adapters.formatting.json_formatter import JsonFormatter
from src.adapters.formatting.table_formatter import TableFormatter
from src.domain.models import OutputFormat
from src.domain.ports import FormattingPort


def formatter_for(fmt: OutputFormat | str) -> FormattingPort:
    fmt = OutputFormat(fmt)
    if fmt == OutputFormat.JSON:
        return JsonFormatter()
    if fmt == OutputFormat.CSV:
        return CsvFormatter()
    return TableFormatter()


__all__ = ["CsvFormatter", "JsonFormatter", "TableFormatter", "formatter_for"]
