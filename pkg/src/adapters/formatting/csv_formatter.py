"""
CSV Formatter Adapter

Header row from the report columns, then one line per row. Nested values
(dicts and lists) are written as compact JSON inside the cell.
"""

import csv
import io
import json

from src.domain.models import CommandReport
from src.domain.ports import FormattingPort


class CsvFormatter(FormattingPort):
    """
    Example usage:
        CsvFormatter().format(report)   # "q,n,j,count\\n2,5,0,6\\n..."
    """

    def format(self, report: CommandReport) -> str:
        columns = report.columns or (list(report.rows[0].keys()) if report.rows else [])
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(columns)
        for row in report.rows:
            writer.writerow([self._cell(row.get(name)) for name in columns])
        return buffer.getvalue()

    @staticmethod
    def _cell(value) -> str:
        if value is None:
            return ""
        if isinstance(value, (dict, list, tuple)):
            return json.dumps(value, separators=(",", ":"), sort_keys=True)
        return str(value)
