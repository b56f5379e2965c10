import math

import pytest

from src.domain.errors import (
    BadDegree,
    BadRange,
    BothZero,
    DivisionByZero,
    ParseError,
    SpecMismatch,
    ZeroConstantTerm,
    ZeroPolynomial,
)
from src.domain.field import element
from src.domain.polynomial import (
    Polynomial,
    PolyStyle,
    enumerate_monic,
    factor,
    format_polynomial,
    gcd_monic,
    irreducible_table,
    is_irreducible,
    monic_at,
    monic_count,
    parse_polynomial,
)


def P(spec, *codes):
    return Polynomial(spec, codes)


def _with_nonzero_constant(spec, n_max):
    """Every polynomial of degree <= n_max with nonzero constant term, monic or not."""
    scalars = [element(spec, c) for c in range(1, spec.q)]
    return [
        f.scale(c)
        for n in range(n_max + 1)
        for f in enumerate_monic(spec, n, True)
        for c in scalars
    ]


def _random_poly(spec, rng, max_degree):
    n = rng.randint(1, max_degree)
    f = monic_at(spec, n, rng.randrange(monic_count(spec, n, True)), True)
    return f.scale(element(spec, rng.randrange(1, spec.q)))


def _assert_division_law(f, g):
    quot, rem = divmod(f, g)
    assert quot * g + rem == f
    assert rem.degree < g.degree


class TestArithmetic:
    def test_trailing_zeros_trimmed(self, gf3):
        assert P(gf3, 1, 2, 0, 0).codes == (1, 2)
        assert P(gf3, 0, 0).is_zero

    def test_zero_degree(self, gf2):
        assert P(gf2).degree == -math.inf
        assert P(gf2).degree < 0

    def test_ring_operations(self, gf3):
        f, g = P(gf3, 1, 1), P(gf3, 2, 1)
        assert f * g == P(gf3, 2, 0, 1)
        assert f + g == P(gf3, 0, 2)
        assert f - f == P(gf3)
        assert -f == P(gf3, 2, 2)
        assert f ** 3 == P(gf3, 1, 0, 0, 1)

    def test_divmod(self, gf5):
        f, g = P(gf5, 1, 2, 3, 4), P(gf5, 2, 1)
        quot, rem = divmod(f, g)
        assert quot * g + rem == f
        assert rem.degree < g.degree
        assert f // g == quot and f % g == rem

    def test_division_law_exhaustive(self, gf2, gf3):
        for spec, n_max in ((gf2, 6), (gf3, 4)):
            scalars = [element(spec, code) for code in range(1, spec.q)]
            dividends = [
                f.scale(c)
                for n in range(n_max + 1)
                for f in enumerate_monic(spec, n, False)
                for c in scalars
            ]
            dividends.append(P(spec))
            divisors = [g for g in dividends if not g.is_zero and g.degree <= 2]
            for f in dividends:
                for g in divisors:
                    _assert_division_law(f, g)

    def test_division_law_sampled(self, small_fields, rng):
        for spec in small_fields:
            for _ in range(200):
                _assert_division_law(_random_poly(spec, rng, 10), _random_poly(spec, rng, 5))

    def test_divide_by_zero(self, gf3):
        with pytest.raises(DivisionByZero):
            divmod(P(gf3, 1, 1), P(gf3))

    def test_spec_mismatch(self, gf2, gf3):
        with pytest.raises(SpecMismatch):
            P(gf2, 1, 1) + P(gf3, 1, 1)

    def test_coefficient_out_of_range(self, gf3):
        with pytest.raises(BadRange):
            P(gf3, 3, 1)

    def test_evaluation(self, gf5):
        f = P(gf5, 1, 0, 1)
        assert f(element(gf5, 2)) == element(gf5, 0)
        assert f(element(gf5, 1)) == element(gf5, 2)

    def test_make_monic(self, gf5):
        assert P(gf5, 1, 2).make_monic() == P(gf5, 3, 1)
        with pytest.raises(ZeroPolynomial):
            P(gf5).make_monic()

    def test_gcd(self, gf3):
        f = P(gf3, 1, 1) * P(gf3, 1, 0, 1)
        g = P(gf3, 1, 1) * P(gf3, 2, 1)
        assert gcd_monic(f, g) == P(gf3, 1, 1)
        assert gcd_monic(P(gf3, 2, 2), P(gf3)) == P(gf3, 1, 1)
        with pytest.raises(BothZero):
            gcd_monic(P(gf3), P(gf3))


class TestReciprocal:
    def test_raw_and_monic(self, gf3):
        f = P(gf3, 2, 1, 1)
        assert f.reciprocal_raw() == P(gf3, 1, 1, 2)
        assert f.reciprocal_monic() == P(gf3, 2, 2, 1)

    def test_zero_constant(self, gf2):
        with pytest.raises(ZeroConstantTerm):
            Polynomial.x(gf2).reciprocal_raw()

    def test_involution_and_multiplicativity(self, gf2, gf3):
        for spec, n_max in ((gf2, 6), (gf3, 4)):
            polys = _with_nonzero_constant(spec, n_max)
            small = [g for g in polys if g.degree <= 3]
            for f in polys:
                assert f.reciprocal_raw().reciprocal_raw() == f
                for g in small:
                    assert (f * g).reciprocal_raw() == f.reciprocal_raw() * g.reciprocal_raw()

    def test_involution_and_multiplicativity_sampled(self, small_fields, rng):
        for spec in small_fields[2:]:
            for _ in range(200):
                f, g = _random_poly(spec, rng, 8), _random_poly(spec, rng, 4)
                assert f.reciprocal_raw().reciprocal_raw() == f
                assert (f * g).reciprocal_raw() == f.reciprocal_raw() * g.reciprocal_raw()


class TestEnumeration:
    def test_small_streams(self, gf2, gf3):
        assert [f.codes for f in enumerate_monic(gf2, 2, True)] == [(1, 0, 1), (1, 1, 1)]
        assert [f.codes for f in enumerate_monic(gf3, 1, True)] == [(1, 1), (2, 1)]
        assert [f.codes for f in enumerate_monic(gf2, 0, False)] == [(1,)]

    def test_counts(self, gf4):
        for n in range(1, 5):
            assert len(list(enumerate_monic(gf4, n, True))) == monic_count(gf4, n, True) == 3 * 4 ** (n - 1)
            assert len(list(enumerate_monic(gf4, n, False))) == 4 ** n

    def test_ascending_code(self, gf3):
        codes = [f.code for f in enumerate_monic(gf3, 4, False)]
        assert codes == sorted(codes)
        assert len(set(codes)) == len(codes)

    @pytest.mark.parametrize("nonzero_constant", [True, False])
    def test_random_access(self, gf3, nonzero_constant):
        stream = list(enumerate_monic(gf3, 3, nonzero_constant))
        assert [monic_at(gf3, 3, i, nonzero_constant) for i in range(len(stream))] == stream

    def test_negative_degree(self, gf2):
        with pytest.raises(BadDegree):
            list(enumerate_monic(gf2, -1, True))

    def test_index_out_of_range(self, gf2):
        with pytest.raises(BadRange):
            monic_at(gf2, 2, 2, True)


class TestIrreducibles:
    def test_gf2_table(self, gf2):
        table = irreducible_table(gf2, 3)
        assert table[0] == ()
        assert [g.codes for g in table[1]] == [(0, 1), (1, 1)]
        assert [g.codes for g in table[2]] == [(1, 1, 1)]
        assert {g.codes for g in table[3]} == {(1, 1, 0, 1), (1, 0, 1, 1)}

    def test_gauss_counts(self, gf3, gf4):
        assert [len(level) for level in irreducible_table(gf3, 4)[1:]] == [3, 3, 8, 18]
        assert [len(level) for level in irreducible_table(gf4, 3)[1:]] == [4, 6, 20]

    def test_rabin_matches_sieve(self, gf3):
        table = irreducible_table(gf3, 5)
        for d in range(1, 6):
            irreducible = set(table[d])
            for f in enumerate_monic(gf3, d, False):
                assert is_irreducible(f) == (f in irreducible)

    def test_units_are_not_irreducible(self, gf3):
        assert not is_irreducible(P(gf3, 2))
        with pytest.raises(ZeroPolynomial):
            is_irreducible(P(gf3))


class TestFactor:
    def test_round_trip(self, small_fields):
        for spec in small_fields[:4]:
            for n in range(1, 5):
                for f in enumerate_monic(spec, n, False):
                    fac = factor(f)
                    assert fac.expand() == f
                    assert all(is_irreducible(g) and g.is_monic for g, _ in fac.factors)

    def test_unit_and_multiplicity(self, gf5):
        f = P(gf5, 1, 1) ** 3 * P(gf5, 2, 0, 1) * P(gf5, 3)
        fac = factor(f)
        assert fac.unit == element(gf5, 3)
        assert fac.multiplicity(P(gf5, 1, 1)) == 3
        assert fac.multiplicity(P(gf5, 2, 0, 1)) == 1
        assert fac.expand() == f

    def test_large_irreducible_cofactor(self, gf2):
        # x^7 + x + 1 is irreducible; times x + 1
        f = P(gf2, 1, 1, 0, 0, 0, 0, 0, 1) * P(gf2, 1, 1)
        assert [(g.codes, e) for g, e in factor(f).factors] == [
            ((1, 1), 1), ((1, 1, 0, 0, 0, 0, 0, 1), 1),
        ]

    def test_zero(self, gf2):
        with pytest.raises(ZeroPolynomial):
            factor(P(gf2))

    def test_divisors(self, gf3):
        fac = factor(P(gf3, 2, 1) ** 3)
        assert sorted(d.degree for d in fac.divisors()) == [0, 1, 2, 3]

    def test_round_trip_sampled(self, small_fields, rng):
        for spec in small_fields[4:]:
            for _ in range(100):
                f = _random_poly(spec, rng, 10)
                assert factor(f).expand() == f


@pytest.mark.slow
class TestAlgebraAcceptance:
    def test_exhaustive(self, gf2, gf3):
        for spec, n_max in ((gf2, 8), (gf3, 6)):
            divisors = [g for g in _with_nonzero_constant(spec, 3) if g.degree >= 1]
            for f in _with_nonzero_constant(spec, n_max):
                fac = factor(f)
                assert fac.expand() == f
                assert all(is_irreducible(g) for g, _ in fac.factors)
                assert f.reciprocal_raw().reciprocal_raw() == f
                for g in divisors:
                    _assert_division_law(f, g)
                    assert (f * g).reciprocal_raw() == f.reciprocal_raw() * g.reciprocal_raw()

    def test_sampled(self, small_fields, rng):
        for spec in small_fields[2:]:
            for _ in range(10_000):
                f, g = _random_poly(spec, rng, 12), _random_poly(spec, rng, 6)
                fac = factor(f)
                assert fac.expand() == f
                assert all(is_irreducible(h) for h, _ in fac.factors)
                assert f.reciprocal_raw().reciprocal_raw() == f
                assert (f * g).reciprocal_raw() == f.reciprocal_raw() * g.reciprocal_raw()
                _assert_division_law(f, g)


class TestGrammar:
    def test_equivalent_forms(self, gf2):
        f = P(gf2, 1, 0, 1)
        assert parse_polynomial(gf2, "x^2+1") == f
        assert parse_polynomial(gf2, "101") == f
        assert parse_polynomial(gf2, "[1,0,1]") == f
        assert parse_polynomial(gf2, "[]").is_zero

    def test_human_with_coefficients(self, gf3):
        assert parse_polynomial(gf3, "2*x^2 + x + 2") == P(gf3, 2, 1, 2)
        assert parse_polynomial(gf3, "x + x") == P(gf3, 0, 2)

    @pytest.mark.parametrize("text", ["[3]", "7*x+1", "x^^2", "y+1", "x+"])
    def test_bad_input(self, gf3, text):
        with pytest.raises(ParseError):
            parse_polynomial(gf3, text)

    def test_format(self, gf3, gf2):
        f = P(gf3, 2, 1, 1)
        assert format_polynomial(f) == "[2,1,1]"
        assert format_polynomial(f, PolyStyle.HUMAN) == "x^2+x+2"
        assert format_polynomial(P(gf2, 1, 1, 0, 1), PolyStyle.BITS) == "1101"
        with pytest.raises(ParseError):
            format_polynomial(f, PolyStyle.BITS)
        assert parse_polynomial(gf3, format_polynomial(f, PolyStyle.HUMAN)) == f
