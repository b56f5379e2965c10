"""
Brute-Force Census

Enumerates every monic polynomial of degree n with nonzero constant
coefficient, computes the degree of its maximal self-reciprocal factor and
buckets the results into a j-histogram.

Large runs can be split across worker processes: the enumeration index range
is cut into contiguous chunks (see monic_at) and the per-chunk Counters are
summed, so the merged histogram does not depend on the worker count.
"""

import logging
from collections import Counter
from concurrent.futures import ProcessPoolExecutor

from src.domain.errors import BadDegree, BudgetExceeded, OracleMismatch
from src.domain.field import FieldSpec
from src.domain.models import CensusRow, CensusStrategy
from src.domain.polynomial import enumerate_monic, format_polynomial, monic_at, monic_count
from src.domain.ports import SelfReciprocalPort
from src.domain.reciprocal import check_oracle
from src.adapters.recip.strategies import FactorStrategy, GcdStrategy, strategy_for

logger = logging.getLogger(__name__)

# below this many polynomials a process pool costs more than it saves
MIN_PARALLEL_WORK = 4096


def _census_chunk(spec: FieldSpec, n: int, start: int, stop: int, strategy: str) -> Counter:
    port = strategy_for(strategy)
    histogram: Counter = Counter()
    for index in range(start, stop):
        histogram[port.max_factor_degree(monic_at(spec, n, index, True))] += 1
    return histogram


def histogram_rows(spec: FieldSpec, n: int, histogram: Counter) -> list[CensusRow]:
    """One row per j in 0..n, empty buckets included."""
    return [CensusRow(q=spec.q, n=n, j=j, count=histogram.get(j, 0)) for j in range(n + 1)]


class CensusEnumerator:
    """
    Runs brute-force censuses under a work budget.

    Example usage:
        enumerator = CensusEnumerator(GcdStrategy(), budget=2_000_000, workers=4)
        rows = enumerator.census(make_prime_field(3), 5)
    """

    def __init__(self, strategy: SelfReciprocalPort | None = None, budget: int = 2_000_000, workers: int = 1):
        self.strategy = strategy or GcdStrategy()
        self.budget = budget
        self.workers = max(workers, 1)

    def histogram(self, spec: FieldSpec, n: int) -> Counter:
        """
        j -> number of polynomials whose maximal self-reciprocal factor has degree j.

        Raises:
            BudgetExceeded: if (q-1) q^(n-1) exceeds the budget
        """
        if n < 0:
            raise BadDegree(f"census needs n >= 0, got {n}")
        total = monic_count(spec, n, True)
        if total > self.budget:
            logger.warning(f"Refusing census over {spec} at n={n}: {total} polynomials > budget {self.budget}")
            raise BudgetExceeded(f"{total} polynomials over {spec} at degree {n} exceed the work budget {self.budget}")

        logger.info(f"Census over {spec}, n={n}: {total} polynomials, strategy={self.strategy.strategy.value}")
        if self.workers == 1 or total < MIN_PARALLEL_WORK:
            histogram = Counter(
                self.strategy.max_factor_degree(f) for f in enumerate_monic(spec, n, True)
            )
        else:
            histogram = self._parallel_histogram(spec, n, total)
        logger.info(f"Census over {spec}, n={n} finished: {dict(sorted(histogram.items()))}")
        return histogram

    def _parallel_histogram(self, spec: FieldSpec, n: int, total: int) -> Counter:
        step = -(-total // self.workers)
        bounds = [(start, min(start + step, total)) for start in range(0, total, step)]
        name = self.strategy.strategy.value
        histogram: Counter = Counter()
        with ProcessPoolExecutor(max_workers=self.workers) as executor:
            futures = [
                executor.submit(_census_chunk, spec, n, start, stop, name)
                for start, stop in bounds
            ]
            for future in futures:
                chunk = future.result()
                logger.debug(f"Census chunk done: {sum(chunk.values())} polynomials")
                histogram.update(chunk)
        return histogram

    def census(self, spec: FieldSpec, n: int) -> list[CensusRow]:
        return histogram_rows(spec, n, self.histogram(spec, n))


def census_brute(
    spec: FieldSpec,
    n: int,
    *,
    budget: int = 2_000_000,
    strategy: CensusStrategy | str = CensusStrategy.GCD,
    workers: int = 1,
) -> list[CensusRow]:
    """j-histogram of the degree-n census as CensusRows, j = 0..n."""
    return CensusEnumerator(strategy_for(strategy), budget=budget, workers=workers).census(spec, n)


def find_counterexample(spec: FieldSpec, n: int, budget: int = 2_000_000) -> str | None:
    """
    First polynomial, in enumeration order, on which the factor strategy,
    the gcd strategy and the divisor oracle do not all agree.
    """
    total = monic_count(spec, n, True)
    if total > budget:
        raise BudgetExceeded(f"{total} polynomials over {spec} at degree {n} exceed the work budget {budget}")
    by_factor, by_gcd = FactorStrategy(), GcdStrategy()
    for f in enumerate_monic(spec, n, True):
        if by_factor.max_factor_degree(f) != by_gcd.max_factor_degree(f):
            return format_polynomial(f)
        try:
            check_oracle(f)
        except OracleMismatch as e:
            return e.polynomial
    return None
