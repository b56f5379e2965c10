from typing import Protocol

from src.domain.models import CensusStrategy, CommandReport
from src.domain.polynomial import Polynomial


class SelfReciprocalPort(Protocol):
    """
    Computes the degree of the maximal self-reciprocal factor of a monic
    polynomial with nonzero constant coefficient.
    """
    @property
    def strategy(self) -> CensusStrategy:
        ...

    def max_factor_degree(self, f: Polynomial) -> int:
        ...


class FormattingPort(Protocol):
    """
    Renders a command report as user-facing text (table, json, csv).
    """
    def format(self, report: CommandReport) -> str:
        ...
