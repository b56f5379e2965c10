"""JSON formatter: the canonical machine format, config echoed under "config"."""

from src.domain.models import CommandReport
from src.domain.ports import FormattingPort


class JsonFormatter(FormattingPort):

    def __init__(self, indent: int | None = 2):
        self.indent = indent

    def format(self, report: CommandReport) -> str:
        return report.model_dump_json(indent=self.indent) + "\n"
