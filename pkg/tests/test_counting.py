import pytest

from src.domain.counting import (
    count_s,
    count_t,
    expected_index2_count,
    identity_checks,
    p_count,
    pr_closed,
    pr_conv,
    z_binary,
    z_closed,
    z_recursive,
    z_recursive_table,
)
from src.domain.errors import BadDegree, BadRange, NotPrime

PRIME_POWERS = [2, 3, 4, 5, 7, 8, 9]


class TestClosedForms:
    @pytest.mark.parametrize("q, n, expected", [(2, 2, 2), (3, 1, 2), (5, 3, 100)])
    def test_t(self, q, n, expected):
        assert count_t(q, n) == expected

    @pytest.mark.parametrize("q, n, expected", [(7, 1, 1), (3, 4, 9), (2, 5, 4), (5, 0, 1)])
    def test_s(self, q, n, expected):
        assert count_s(q, n) == expected

    @pytest.mark.parametrize("q, n, expected", [(7, 1, 5), (3, 2, 2), (2, 5, 6), (2, 2, 0), (4, 0, 1)])
    def test_z(self, q, n, expected):
        assert z_closed(q, n) == expected

    def test_pr_conv(self):
        for q in PRIME_POWERS:
            assert pr_conv(q, 1) == 0
            assert pr_conv(q, 2) == q
            assert pr_conv(q, 3) == (q - 1) * q

    @pytest.mark.parametrize("q, n, expected", [(3, 2, 3), (2, 4, 4), (5, 5, 500), (4, 1, 0)])
    def test_pr_closed(self, q, n, expected):
        assert pr_closed(q, n) == expected

    def test_pr_two_is_special(self):
        # the even formula would give (q - 1) at n = 2
        assert pr_closed(3, 2) == 3 != (3 - 1) * 3 ** 0

    @pytest.mark.parametrize("q, n, j, expected", [(2, 4, 2, 0), (3, 3, 1, 2), (4, 5, 5, 16)])
    def test_p(self, q, n, j, expected):
        assert p_count(q, n, j) == expected

    def test_big_integers_exact(self):
        assert z_closed(2, 40) == (2 ** 39 - 2) // 3
        assert sum(p_count(2, 40, j) for j in range(41)) == count_t(2, 40)


class TestErrors:
    def test_not_prime_power(self):
        with pytest.raises(NotPrime):
            z_closed(6, 3)

    def test_bad_degree(self):
        with pytest.raises(BadDegree):
            count_t(2, 0)
        with pytest.raises(BadDegree):
            z_closed(2, -1)

    def test_bad_range(self):
        with pytest.raises(BadRange):
            p_count(3, 2, 3)


class TestIdentities:
    @pytest.mark.parametrize("q", PRIME_POWERS)
    def test_identity_checks_pass(self, q):
        checks = identity_checks(q, 64)
        assert checks and all(c.passed for c in checks)

    def test_binary_specialization_listed(self):
        assert "z_binary_specialization" in {c.name for c in identity_checks(2, 20)}

    def test_z_binary(self):
        assert [z_binary(n) for n in range(8)] == [1, 0, 0, 2, 2, 6, 10, 22]
        for n in range(65):
            assert z_binary(n) == z_closed(2, n)

    def test_z_recursive(self):
        for q in PRIME_POWERS:
            assert z_recursive_table(q, 12) == [z_closed(q, n) for n in range(13)]
            assert z_recursive(q, 7) == z_closed(q, 7)
        assert z_recursive_table(3, 0) == [1]

    def test_lemma2(self):
        for q in PRIME_POWERS:
            for n in range(2, 30):
                assert count_t(q, n) - pr_closed(q, n) == z_closed(q, n) + z_closed(q, n - 1)


class TestIndex2Expectation:
    def test_values(self):
        assert expected_index2_count(2) == 0
        assert [expected_index2_count(m) for m in range(3, 17)] == [2 ** (m - 2) for m in range(3, 17)]

    def test_too_small(self):
        with pytest.raises(BadDegree):
            expected_index2_count(1)
