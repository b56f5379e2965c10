"""
Table Formatter Adapter

Renders a CommandReport as rich tables for a terminal: a header panel with
the run title, the row table, then summary and detail tables.
"""

from typing import Any

from rich.box import HEAVY_EDGE
from rich.console import Console
from rich.panel import Panel
from rich.table import Table

from src.domain.models import CommandReport
from src.domain.ports import FormattingPort


def _cell(value: Any) -> str:
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "yes" if value else "NO"
    if isinstance(value, dict):
        return ", ".join(f"{k}: {v}" for k, v in value.items())
    if isinstance(value, (list, tuple)):
        return ", ".join(_cell(v) for v in value)
    return str(value)


class TableFormatter(FormattingPort):
    """
    Formats command reports as human-readable tables.

    Example usage:
        formatter = TableFormatter(width=120)
        text = formatter.format(report)
    """

    def __init__(self, width: int = 120):
        self.width = width

    def format(self, report: CommandReport) -> str:
        console = Console(width=self.width, force_terminal=False, color_system=None, highlight=False)
        with console.capture() as capture:
            console.print(Panel(report.title, border_style="cyan"))
            if report.rows:
                console.print(self._rows_table(report))
            if report.summary:
                console.print(self._key_value_table("Summary", report.summary))
            if report.details:
                console.print(self._key_value_table("Details", report.details))
            if report.passed is not None:
                console.print("PASS" if report.passed else "FAIL")
        return capture.get()

    def _rows_table(self, report: CommandReport) -> Table:
        columns = report.columns or list(report.rows[0].keys())
        table = Table(box=HEAVY_EDGE, show_header=True, header_style="bold")
        for name in columns:
            table.add_column(name, justify="right" if self._numeric(report, name) else "left", overflow="fold")
        for row in report.rows:
            table.add_row(*(_cell(row.get(name)) for name in columns))
        return table

    @staticmethod
    def _numeric(report: CommandReport, name: str) -> bool:
        return all(
            isinstance(row.get(name), int) and not isinstance(row.get(name), bool)
            for row in report.rows
        )

    @staticmethod
    def _key_value_table(title: str, values: dict[str, Any]) -> Table:
        table = Table(title=title, show_header=False, box=HEAVY_EDGE)
        table.add_column("key", style="bold")
        table.add_column("value", overflow="fold")
        for key, value in values.items():
            table.add_row(key, _cell(value))
        return table
