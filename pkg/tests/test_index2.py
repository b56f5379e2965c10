import pytest

from src.domain.errors import BadRange, OrderTooSmall, ParseError
from src.domain.index2 import (
    IndexTwoSolution,
    KVector,
    candidate_vectors,
    coincides_with_special_case,
    count_index2,
    index2_census,
    palindrome_condition,
    periodicity_report,
    residual_ok,
    scan_index2,
    solve_gf2,
    solve_index2,
    system_matrix,
)


def K(text):
    return KVector.from_bitstring(text)


class TestKVector:
    def test_bitstring(self):
        k = K("1101")
        assert k.m == 3
        assert k.bits == (1, 1, 0, 1)
        assert k.to_bitstring() == "1101"
        assert k.as_int() == 13
        assert k.polynomial().codes == (1, 1, 0, 1)

    @pytest.mark.parametrize("text", ["", "12", "1 1"])
    def test_bad_bitstring(self, text):
        with pytest.raises(ParseError):
            K(text)

    @pytest.mark.parametrize("text", ["0101", "110"])
    def test_end_bits(self, text):
        with pytest.raises(BadRange):
            K(text)

    def test_candidates(self):
        assert [k.to_bitstring() for k in candidate_vectors(3)] == ["1001", "1011", "1101", "1111"]


class TestLinearAlgebra:
    def test_solve_gf2_unique(self):
        assert solve_gf2([[1, 1], [0, 1]], [1, 1]) == [[0, 1]]

    def test_solve_gf2_inconsistent(self):
        assert solve_gf2([[1, 1], [1, 1]], [1, 0]) == []

    def test_solve_gf2_free_variable(self):
        assert sorted(solve_gf2([[1, 1], [1, 1]], [1, 1])) == [[0, 1], [1, 0]]

    def test_system_matrix(self):
        matrix, rhs = system_matrix(K("1101"))
        assert matrix == [[1, 1, 0], [0, 1, 0], [0, 1, 1]]
        assert rhs == [1, 0, 0]

    def test_system_matrix_small_order(self):
        with pytest.raises(OrderTooSmall):
            system_matrix(K("11"))


class TestSolve:
    def test_case_one(self):
        (sol,) = solve_index2(K("1"))
        assert sol.sequence(6) == [0, 1, 0, 0, 0, 0]
        assert coincides_with_special_case(sol) == "case1"

    def test_case_two(self):
        (sol,) = solve_index2(K("11"))
        assert sol.sequence(6) == [0, 1, 1, 1, 1, 1]
        assert coincides_with_special_case(sol) == "case2"

    def test_order_two_unsolvable(self):
        assert solve_index2(K("101")) == []

    def test_order_three(self):
        (sol,) = solve_index2(K("1101"))
        assert sol.prefix == (0, 1, 0, 0)
        assert sol.sequence(14) == [0, 1, 0, 0, 1, 1, 1, 0, 1, 0, 0, 1, 1, 1]
        assert residual_ok(K("1101"), sol, 40)
        assert coincides_with_special_case(sol) is None

    def test_symmetry(self):
        (sol,) = solve_index2(K("1101"))
        assert sol.a(-4) == sol.a(4) == 1
        assert sol.window(-2, 5) == [0, 1, 0, 1, 0]

    def test_bad_prefix(self):
        with pytest.raises(BadRange):
            IndexTwoSolution(k=K("1101"), prefix=(0, 1))


class TestPalindromeCondition:
    @pytest.mark.parametrize("text, expected", [("1001", False), ("1101", True), ("1111", False), ("1011", True)])
    def test_examples(self, text, expected):
        assert palindrome_condition(K(text)) is expected

    def test_equivalence_small(self):
        for m in range(2, 10):
            solvable = {k for k, _ in scan_index2(m)}
            assert solvable == {k for k in candidate_vectors(m) if palindrome_condition(k)}


class TestCount:
    def test_small_orders(self):
        assert count_index2(2) == (0, [])
        count, admissible = count_index2(3)
        assert count == 2
        assert [k.to_bitstring() for k in admissible] == ["1011", "1101"]
        assert count_index2(5)[0] == 8

    def test_too_small(self):
        with pytest.raises(OrderTooSmall):
            count_index2(1)

    def test_parallel_matches_sequential(self):
        assert count_index2(10, workers=2) == count_index2(10)

    def test_census_rows(self):
        rows = index2_census(2, 9)
        assert [r.count for r in rows] == [0] + [2 ** (m - 2) for m in range(3, 10)]
        assert all(r.matches and r.unique and r.condition_equivalent for r in rows)
        assert all(r.periodicity_ok for r in rows if r.count)

    @pytest.mark.slow
    def test_acceptance(self):
        rows = index2_census(2, 16)
        assert all(r.matches and r.unique and r.condition_equivalent and r.periodicity_ok is not False for r in rows)


class TestPeriodicity:
    def test_order_three(self):
        k = K("1101")
        report = periodicity_report(k, solve_index2(k)[0])
        assert report.period == 7
        assert report.preperiod == 0
        assert report.s2_purely_periodic
        assert not report.s1_purely_periodic

    def test_every_admissible_vector(self):
        for m in range(3, 9):
            for k, sols in scan_index2(m):
                report = periodicity_report(k, sols[0])
                assert report.s2_purely_periodic and not report.s1_purely_periodic

    def test_wrong_vector(self):
        sol = solve_index2(K("1101"))[0]
        with pytest.raises(BadRange):
            periodicity_report(K("1011"), sol)
