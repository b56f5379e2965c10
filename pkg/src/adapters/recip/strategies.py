"""
Self-Reciprocal Degree Strategies

Two interchangeable ways to get the degree of the maximal self-reciprocal
factor, used by the brute-force census:

- FactorStrategy: factor f and apply the per-class exponent rule
- GcdStrategy: gcd(f, f*) with the x - 1 parity correction, no factoring

Both must produce identical census histograms.
"""

from src.domain.models import CensusStrategy
from src.domain.polynomial import Polynomial
from src.domain.ports import SelfReciprocalPort
from src.domain.reciprocal import gcd_self_reciprocal_degree, max_self_reciprocal_factor


class FactorStrategy(SelfReciprocalPort):
    """
    Degree of max_self_reciprocal_factor, built from the factorization.

    Example usage:
        strategy = FactorStrategy()
        strategy.max_factor_degree(f)
    """

    @property
    def strategy(self) -> CensusStrategy:
        return CensusStrategy.FACTOR

    def max_factor_degree(self, f: Polynomial) -> int:
        h, _ = max_self_reciprocal_factor(f)
        return len(h.codes) - 1


class GcdStrategy(SelfReciprocalPort):
    """Degree of gcd(f, f*) after removing an odd power of x - 1."""

    @property
    def strategy(self) -> CensusStrategy:
        return CensusStrategy.GCD

    def max_factor_degree(self, f: Polynomial) -> int:
        return gcd_self_reciprocal_degree(f)


def strategy_for(name: CensusStrategy | str) -> SelfReciprocalPort:
    """Strategy instance for a configured name."""
    name = CensusStrategy(name)
    if name == CensusStrategy.FACTOR:
        return FactorStrategy()
    return GcdStrategy()
