#!/usr/bin/env python3
"""
Full acceptance run: polynomial algebra laws, census verification on the
enumeration grid with both strategies, closed-form identities, index-2 counts
and oracle equivalence.

Usage:
    uv run acceptance            # or: python scripts/acceptance.py
"""

import logging
import random
import sys
from pathlib import Path

# Add src to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from src.adapters.census.verifier import verify
from src.app.config import config
from src.domain.counting import identity_checks
from src.domain.errors import OracleMismatch
from src.domain.field import element, parse_field
from src.domain.index2 import index2_census
from src.domain.models import CensusStrategy
from src.domain.polynomial import Polynomial, enumerate_monic, factor, is_irreducible, monic_at, monic_count
from src.domain.reciprocal import check_oracle

logging.basicConfig(level=logging.INFO, format='%(levelname)s - %(message)s')
logger = logging.getLogger(__name__)

CENSUS_GRID = [(2, 18), (3, 11), (4, 9), (5, 8), (7, 6), (8, 6), (9, 6)]
EXHAUSTIVE_ORACLE = [(2, 8), (3, 8)]
SAMPLED_ORACLE = [4, 5, 7, 9]
ORACLE_SAMPLES = 10_000
ORACLE_MAX_DEGREE = 12
EXHAUSTIVE_ALGEBRA = [(2, 8), (3, 6)]
ALGEBRA_DIVISOR_DEGREE = 3
SAMPLED_ALGEBRA = [4, 5, 7, 8, 9]
ALGEBRA_SAMPLES = 10_000
INDEX2_MAX_ORDER = 16


def ring_law_failures(f: Polynomial, g: Polynomial) -> list[str]:
    """Reciprocal and division laws for one pair; f and g need nonzero constants."""
    failures = []
    if f.reciprocal_raw().reciprocal_raw() != f:
        failures.append("reciprocal is not an involution")
    if (f * g).reciprocal_raw() != f.reciprocal_raw() * g.reciprocal_raw():
        failures.append("reciprocal is not multiplicative")
    quot, rem = divmod(f, g)
    if quot * g + rem != f or rem.degree >= g.degree:
        failures.append("division law broken")
    return [f"{name} for f={f}, g={g}" for name in failures]


def factorization_failures(f: Polynomial) -> list[str]:
    factorization = factor(f)
    if factorization.expand() != f:
        return [f"factorization {factorization} does not expand to {f}"]
    if not all(is_irreducible(h) for h, _ in factorization.factors):
        return [f"factorization {factorization} of {f} has a reducible factor"]
    return []


def _random_poly(rng: random.Random, spec, n: int) -> Polynomial:
    f = monic_at(spec, n, rng.randrange(monic_count(spec, n, True)), True)
    return f.scale(element(spec, rng.randrange(1, spec.q)))


def _algebra() -> bool:
    failures: list[str] = []
    for q, n_max in EXHAUSTIVE_ALGEBRA:
        spec = parse_field(str(q))
        scalars = [element(spec, c) for c in range(1, q)]
        divisors = [
            g.scale(c)
            for m in range(1, ALGEBRA_DIVISOR_DEGREE + 1)
            for g in enumerate_monic(spec, m, True)
            for c in scalars
        ]
        for n in range(1, n_max + 1):
            for f in enumerate_monic(spec, n, True):
                f = f.scale(scalars[-1])
                failures += factorization_failures(f)
                for g in divisors:
                    failures += ring_law_failures(f, g)
    rng = random.Random(config.seed)
    for q in SAMPLED_ALGEBRA:
        spec = parse_field(str(q))
        for _ in range(ALGEBRA_SAMPLES):
            f = _random_poly(rng, spec, rng.randint(1, ORACLE_MAX_DEGREE))
            g = _random_poly(rng, spec, rng.randint(1, ORACLE_MAX_DEGREE // 2))
            failures += factorization_failures(f) + ring_law_failures(f, g)
    for failure in failures[:20]:
        logger.error(failure)
    logger.info(f"Algebra laws: {len(failures)} failures")
    return not failures


def _census() -> bool:
    ok = True
    for q, n_max in CENSUS_GRID:
        spec = parse_field(str(q))
        reports = {}
        for strategy in CensusStrategy:
            try:
                reports[strategy] = verify(spec, n_max, budget=10 ** 8, strategy=strategy, workers=config.workers)
            except OracleMismatch as e:
                logger.error(f"q={q} strategy={strategy.value}: {e}")
                ok = False
                continue
            report = reports[strategy]
            logger.info(f"q={q} n<={n_max} {strategy.value}: {'ok' if report.passed else 'FAILED'} "
                        f"({report.elapsed_seconds:.1f}s)")
            if not report.passed:
                logger.error(f"q={q}: counterexample {report.counterexample}")
            ok &= report.passed
        if len(reports) == 2:
            histograms = [[row.p_brute for row in report.rows] for report in reports.values()]
            if histograms[0] != histograms[1]:
                logger.error(f"q={q}: factor and gcd strategies give different histograms")
                ok = False
    return ok


def _identities() -> bool:
    ok = True
    for q in range(2, 10):
        if q == 6:
            continue
        checks = identity_checks(q, 64)
        ok &= all(c.passed for c in checks)
    logger.info(f"Identity checks {'ok' if ok else 'FAILED'}")
    return ok


def _index2() -> bool:
    rows = index2_census(2, INDEX2_MAX_ORDER, config.workers)
    ok = all(r.matches and r.unique and r.condition_equivalent and r.periodicity_ok is not False for r in rows)
    logger.info(f"Index-2 census m<= {INDEX2_MAX_ORDER}: {'ok' if ok else 'FAILED'}")
    return ok


def _oracle() -> bool:
    violations = 0
    for q, n_max in EXHAUSTIVE_ORACLE:
        spec = parse_field(str(q))
        for n in range(1, n_max + 1):
            for f in enumerate_monic(spec, n, True):
                try:
                    check_oracle(f)
                except OracleMismatch as e:
                    logger.error(str(e))
                    violations += 1
    rng = random.Random(config.seed)
    for q in SAMPLED_ORACLE:
        spec = parse_field(str(q))
        for _ in range(ORACLE_SAMPLES):
            n = rng.randint(1, ORACLE_MAX_DEGREE)
            f = monic_at(spec, n, rng.randrange(monic_count(spec, n, True)), True)
            try:
                check_oracle(f)
            except OracleMismatch as e:
                logger.error(str(e))
                violations += 1
    logger.info(f"Oracle equivalence: {violations} violations")
    return violations == 0


def acceptance():
    """Run every acceptance stage; exit 1 if any fails."""
    results = {
        "algebra": _algebra(),
        "identities": _identities(),
        "index2": _index2(),
        "census": _census(),
        "oracle": _oracle(),
    }
    for name, ok in results.items():
        logger.info(f"{'✓' if ok else '✗'} {name}")
    sys.exit(0 if all(results.values()) else 1)


if __name__ == "__main__":
    acceptance()
