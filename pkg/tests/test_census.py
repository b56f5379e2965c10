from collections import Counter

import pytest

from src.adapters.census.enumerator import CensusEnumerator, census_brute, find_counterexample, histogram_rows
from src.adapters.census.verifier import CensusVerifier, verify
from src.adapters.recip.strategies import FactorStrategy, GcdStrategy, strategy_for
from src.domain.counting import p_count
from src.domain.errors import BudgetExceeded
from src.domain.field import parse_field
from src.domain.models import CensusStrategy
from src.domain.polynomial import Polynomial


def as_histogram(rows):
    return {row.j: row.count for row in rows if row.count}


class TestStrategies:
    def test_strategy_for(self):
        assert isinstance(strategy_for("factor"), FactorStrategy)
        assert isinstance(strategy_for(CensusStrategy.GCD), GcdStrategy)
        with pytest.raises(ValueError):
            strategy_for("nope")

    def test_agree_on_example(self, gf3):
        f = Polynomial(gf3, (2, 1)) ** 3 * Polynomial(gf3, (1, 1))
        assert FactorStrategy().max_factor_degree(f) == GcdStrategy().max_factor_degree(f) == 3


class TestCensusBrute:
    def test_gf2_degree_two(self, gf2):
        assert as_histogram(census_brute(gf2, 2)) == {2: 2}

    def test_gf3_degree_two(self, gf3):
        rows = census_brute(gf3, 2)
        assert rows[0].j == 0 and rows[0].count == 2

    def test_degree_one(self, small_fields):
        for spec in small_fields:
            assert as_histogram(census_brute(spec, 1)) == {
                j: c for j, c in {0: spec.q - 2, 1: 1}.items() if c
            }

    def test_rows_cover_every_j(self, gf2):
        rows = census_brute(gf2, 4)
        assert [r.j for r in rows] == [0, 1, 2, 3, 4]
        assert all(r.q == 2 and r.n == 4 for r in rows)

    @pytest.mark.parametrize("descriptor, n_max", [("2", 8), ("3", 5), ("4", 4), ("5", 3)])
    def test_matches_p_count(self, descriptor, n_max):
        spec = parse_field(descriptor)
        for n in range(1, n_max + 1):
            rows = census_brute(spec, n)
            assert [r.count for r in rows] == [p_count(spec.q, n, j) for j in range(n + 1)]

    def test_strategies_give_identical_histograms(self, gf3, gf4):
        for spec, n in ((gf3, 5), (gf4, 4)):
            assert census_brute(spec, n, strategy="factor") == census_brute(spec, n, strategy="gcd")

    @pytest.mark.parametrize("descriptor, n_max", [("2", 10), ("3", 6), ("5", 4), ("9", 3)])
    def test_factor_strategy_verifies(self, descriptor, n_max):
        assert verify(parse_field(descriptor), n_max, strategy="factor").passed

    def test_budget(self, gf3):
        with pytest.raises(BudgetExceeded):
            census_brute(gf3, 10, budget=1000)
        assert len(census_brute(gf3, 3, budget=18)) == 4

    def test_parallel_merge_is_deterministic(self, gf3):
        sequential = CensusEnumerator(budget=10 ** 6, workers=1).census(gf3, 8)
        parallel = CensusEnumerator(budget=10 ** 6, workers=3).census(gf3, 8)
        assert parallel == sequential

    def test_histogram_rows(self, gf2):
        rows = histogram_rows(gf2, 3, Counter({0: 2, 3: 2}))
        assert [(r.j, r.count) for r in rows] == [(0, 2), (1, 0), (2, 0), (3, 2)]

    def test_no_counterexample(self, gf3):
        assert find_counterexample(gf3, 4) is None


class TestVerify:
    def test_gf2(self, gf2):
        report = verify(gf2, 10)
        assert report.passed
        assert [r.n for r in report.rows] == list(range(1, 11))
        assert report.counterexample is None

    def test_lemma2_gf3(self, gf3):
        report = verify(gf3, 2)
        row = report.rows[1]
        assert (row.t, row.pr_brute, row.z_brute) == (6, 3, 2)
        assert report.rows[0].z_brute == 1
        assert row.lemma2_ok

    def test_degenerate_ranges(self, gf2):
        one = verify(gf2, 1)
        assert one.passed and one.rows[0].lemma2_ok is None
        zero = verify(gf2, 0)
        assert zero.passed and zero.rows == []

    def test_extension_field(self, gf4):
        assert verify(gf4, 5, strategy="factor").passed

    def test_budget(self, gf3):
        with pytest.raises(BudgetExceeded):
            verify(gf3, 12, budget=10_000)

    def test_verifier_reports_strategy(self, gf2):
        verifier = CensusVerifier(CensusEnumerator(FactorStrategy(), budget=1000), identity_range=16)
        assert verifier.verify(gf2, 3).strategy == "factor"

    @pytest.mark.slow
    @pytest.mark.parametrize("descriptor, n_max", [
        ("2", 18), ("3", 11), ("4", 9), ("5", 8), ("7", 6), ("8", 6), ("9", 6),
    ])
    def test_acceptance_grid(self, descriptor, n_max):
        spec = parse_field(descriptor)
        by_gcd = verify(spec, n_max, budget=10 ** 8, strategy="gcd")
        by_factor = verify(spec, n_max, budget=10 ** 8, strategy="factor")
        assert by_gcd.passed, by_gcd.counterexample
        assert by_factor.passed, by_factor.counterexample
        assert [row.p_brute for row in by_factor.rows] == [row.p_brute for row in by_gcd.rows]
