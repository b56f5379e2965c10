"""
Self-reciprocal (palindrome) structure of polynomials.

Self-reciprocal is strict: f == f* coefficient for coefficient. In odd
characteristic x - 1 is therefore not a palindrome, although (x - 1)^2 is.

The maximal self-reciprocal factor is built from the factorization:
    StrictPalindrome g with multiplicity e -> g^e
    AntiPalindrome  g (only x - 1)         -> g^(e - e mod 2)
    Paired (g, g')  with (e, e')           -> (g g')^min(e, e')
and is checked against a divisor-enumeration oracle.
"""

import logging

from src.domain.errors import BadRange, FactorIsX, NotMonic, OracleMismatch
from src.domain.field import arithmetic
from src.domain.models import (
    ClassBreakdownEntry,
    RecipReport,
    SelfAssocClass,
    SelfAssocTag,
)
from src.domain.polynomial import (
    Factorization,
    Polynomial,
    PolyStyle,
    _gcd_codes,
    _divmod_codes,
    factor,
    format_polynomial,
    is_irreducible,
    require_reciprocal_input,
)

logger = logging.getLogger(__name__)


def is_self_reciprocal(f: Polynomial) -> bool:
    """True iff the coefficient list of the monic f is a palindrome."""
    require_reciprocal_input(f)
    return f.codes == f.codes[::-1]


def classify_irreducible(g: Polynomial) -> SelfAssocClass:
    """Sort a monic irreducible g != x into StrictPalindrome, AntiPalindrome or Paired."""
    if g == Polynomial.x(g.spec):
        raise FactorIsX("x has no reciprocal")
    if not g.is_monic:
        raise NotMonic(f"{g} is not monic")
    raw = g.reciprocal_raw()
    if raw == g:
        return SelfAssocClass(tag=SelfAssocTag.STRICT)
    if raw == -g:
        return SelfAssocClass(tag=SelfAssocTag.ANTI)
    return SelfAssocClass(tag=SelfAssocTag.PAIRED, partner=raw.make_monic())


def _self_reciprocal_part(factorization: Factorization) -> list[tuple[Polynomial, int, SelfAssocClass, int]]:
    """
    (factor, multiplicity, class, exponent kept in the maximal factor) for every
    factor other than x.
    """
    spec = factorization.unit.spec
    x = Polynomial.x(spec)
    multiplicities = {g: e for g, e in factorization.factors}
    out = []
    for g, e in factorization.factors:
        if g == x:
            continue
        cls = classify_irreducible(g)
        if cls.tag == SelfAssocTag.STRICT:
            kept = e
        elif cls.tag == SelfAssocTag.ANTI:
            kept = e - e % 2
        else:
            kept = min(e, multiplicities.get(cls.partner, 0))
        out.append((g, e, cls, kept))
    return out


def max_self_reciprocal_factor(f: Polynomial) -> tuple[Polynomial, Polynomial]:
    """
    The maximal monic self-reciprocal divisor h of f and the cofactor f / h.

    Both members of a Paired couple contribute their kept exponent, so the
    couple's contribution is (g g')^min(e, e').
    """
    require_reciprocal_input(f)
    factorization = factor(f)
    if factorization.expand() != f:
        raise OracleMismatch(f"factorization {factorization} does not expand to the input", format_polynomial(f))
    h = Polynomial.one(f.spec)
    for g, _, _, kept in _self_reciprocal_part(factorization):
        if kept:
            h = h * g ** kept
    cofactor, rem = divmod(f, h)
    assert rem.is_zero, f"{h} does not divide {f}"
    return h, cofactor


def _of_maximal_degree(divisors: list[Polynomial]) -> set[Polynomial]:
    top = max(d.degree for d in divisors)
    return {d for d in divisors if d.degree == top}


def max_self_reciprocal_factor_oracle(f: Polynomial) -> set[Polynomial]:
    """All monic self-reciprocal divisors of f of maximal degree, by enumeration."""
    return _of_maximal_degree(self_reciprocal_divisors(f))


def self_reciprocal_divisors(f: Polynomial) -> list[Polynomial]:
    """Every monic self-reciprocal divisor of f (the constant 1 included)."""
    require_reciprocal_input(f)
    return [
        d for d in factor(f).divisors()
        if d.codes[0] != 0 and is_self_reciprocal(d)
    ]


def has_self_reciprocal_factor(f: Polynomial, min_degree: int) -> bool:
    if min_degree < 1:
        raise BadRange(f"min_degree must be >= 1, got {min_degree}")
    h, _ = max_self_reciprocal_factor(f)
    return h.degree >= min_degree


def gcd_self_reciprocal_factor(f: Polynomial) -> Polynomial:
    """
    Factorization-free maximal self-reciprocal factor: gcd(f, f*), with one
    copy of x - 1 removed when its multiplicity there is odd (odd characteristic).
    """
    require_reciprocal_input(f)
    spec = f.spec
    ar = arithmetic(spec)
    d = _gcd_codes(ar, f.codes, f.codes[::-1])
    if spec.p != 2:
        x_minus_one = (ar.neg(1), 1)
        multiplicity = 0
        rest = d
        while len(rest) > 1:
            quot, rem = _divmod_codes(ar, rest, x_minus_one)
            if rem:
                break
            rest = quot
            multiplicity += 1
        if multiplicity % 2:
            d = _divmod_codes(ar, d, x_minus_one)[0]
    return Polynomial._raw(spec, d)


def gcd_self_reciprocal_degree(f: Polynomial) -> int:
    return len(gcd_self_reciprocal_factor(f).codes) - 1


def check_oracle(f: Polynomial) -> Polynomial:
    """
    Compare the constructive maximal factor with the oracle and the gcd shortcut.

    Returns:
        The maximal self-reciprocal factor

    Raises:
        OracleMismatch: on a non-singleton oracle set, a self-reciprocal
            divisor that does not divide the maximal factor, or any disagreement
    """
    h, cofactor = max_self_reciprocal_factor(f)
    label = format_polynomial(f)
    divisors = self_reciprocal_divisors(f)
    oracle = _of_maximal_degree(divisors)
    if len(oracle) != 1:
        logger.error(f"Oracle found {len(oracle)} maximal self-reciprocal factors of {label}")
        raise OracleMismatch(f"maximal self-reciprocal factor is not unique: {sorted(map(str, oracle))}", label)
    if oracle != {h}:
        logger.error(f"Constructive factor {h} differs from oracle {next(iter(oracle))} for {label}")
        raise OracleMismatch(f"constructive factor {h} differs from oracle", label)
    if not is_self_reciprocal(h):
        raise OracleMismatch(f"constructive factor {h} is not self-reciprocal", label)
    for s in divisors:
        if not (h % s).is_zero:
            logger.error(f"Self-reciprocal divisor {s} of {label} does not divide {h}")
            raise OracleMismatch(f"self-reciprocal divisor {s} does not divide {h}", label)
    if max_self_reciprocal_factor(cofactor)[0] != Polynomial.one(f.spec):
        raise OracleMismatch(f"cofactor {cofactor} still has a self-reciprocal factor", label)
    if gcd_self_reciprocal_factor(f) != h:
        raise OracleMismatch(f"gcd shortcut differs from constructive factor {h}", label)
    return h


def recip_report(f: Polynomial, style: PolyStyle = PolyStyle.CANONICAL) -> RecipReport:
    """The per-polynomial record shown by the CLI."""
    require_reciprocal_input(f)
    factorization = factor(f)
    h, cofactor = max_self_reciprocal_factor(f)
    breakdown = [
        ClassBreakdownEntry(
            factor=format_polynomial(g, style),
            multiplicity=e,
            tag=cls.tag,
            partner=format_polynomial(cls.partner, style) if cls.partner is not None else None,
            kept=kept,
        )
        for g, e, cls, kept in _self_reciprocal_part(factorization)
    ]
    return RecipReport(
        field=f.spec.descriptor,
        input=format_polynomial(f, style),
        reciprocal=format_polynomial(f.reciprocal_raw(), style),
        self_reciprocal=is_self_reciprocal(f),
        factorization=[
            (format_polynomial(g, style), e) for g, e in factorization.factors
        ],
        all_factors_irreducible=all(is_irreducible(g) for g, _ in factorization.factors),
        max_factor=format_polynomial(h, style),
        max_factor_degree=int(h.degree),
        cofactor=format_polynomial(cofactor, style),
        class_breakdown=breakdown,
    )
