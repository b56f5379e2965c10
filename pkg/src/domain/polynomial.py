"""
Dense univariate polynomials over GF(p^k)

Coefficients are stored as canonical element codes in ascending order; the
zero polynomial is the empty tuple, otherwise the last code is nonzero.
The module also provides enumeration in canonical order, a sieve-built table
of monic irreducibles, trial-division factorization and the text grammars.

Example usage:
    spec = make_prime_field(2)
    f = parse_polynomial(spec, "x^2+1")
    factor(f)            # (x+1)^2
    f.reciprocal_raw()   # x^2+1
"""

import itertools
import logging
import math
import re
import threading
from collections.abc import Iterable, Iterator, Sequence
from enum import Enum

from pydantic import BaseModel, ConfigDict, Field

from src.domain.errors import (
    BadDegree,
    BadRange,
    BothZero,
    DivisionByZero,
    NotMonic,
    ParseError,
    SpecMismatch,
    ZeroConstantTerm,
    ZeroPolynomial,
)
from src.domain.field import FieldArithmetic, FieldElement, FieldSpec, arithmetic

logger = logging.getLogger(__name__)

# Degree of the zero polynomial; compares below every integer.
ZERO_DEGREE = -math.inf


# ============================
# === Code-level algorithms ===
# ============================

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _add_codes(ar: FieldArithmetic, a: Sequence[int], b: Sequence[int]) -> list[int]:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    add = ar.add
    for i, y in enumerate(b):
        out[i] = add(out[i], y)
    return _trim(out)


def _sub_codes(ar: FieldArithmetic, a: Sequence[int], b: Sequence[int]) -> list[int]:
    out = list(a) + [0] * max(0, len(b) - len(a))
    sub = ar.sub
    for i, y in enumerate(b):
        out[i] = sub(out[i], y)
    return _trim(out)


def _scale_codes(ar: FieldArithmetic, a: Sequence[int], c: int) -> list[int]:
    if c == 0:
        return []
    mul = ar.mul
    return [mul(x, c) for x in a]


def _mul_codes(ar: FieldArithmetic, a: Sequence[int], b: Sequence[int]) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    add, mul = ar.add, ar.mul
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] = add(out[i + j], mul(x, y))
    return out


def _divmod_codes(
    ar: FieldArithmetic,
    a: Sequence[int],
    b: Sequence[int],
) -> tuple[list[int], list[int]]:
    """Quotient and remainder of a by the nonzero b."""
    db = len(b) - 1
    rem = list(a)
    if len(rem) - 1 < db:
        return [], rem
    sub, mul = ar.sub, ar.mul
    lead_inv = 1 if b[-1] == 1 else ar.inv(b[-1])
    quot = [0] * (len(rem) - db)
    for shift in range(len(rem) - 1 - db, -1, -1):
        c = rem[shift + db]
        if c:
            if lead_inv != 1:
                c = mul(c, lead_inv)
            quot[shift] = c
            for i, y in enumerate(b):
                if y:
                    rem[shift + i] = sub(rem[shift + i], mul(c, y))
    return quot, _trim(rem[:db])


def _mod_codes(ar: FieldArithmetic, a: Sequence[int], b: Sequence[int]) -> list[int]:
    return _divmod_codes(ar, a, b)[1]


def _monic_codes(ar: FieldArithmetic, a: Sequence[int]) -> list[int]:
    if not a or a[-1] == 1:
        return list(a)
    return _scale_codes(ar, a, ar.inv(a[-1]))


def _gcd_codes(ar: FieldArithmetic, a: Sequence[int], b: Sequence[int]) -> list[int]:
    """Monic gcd by Euclid; gcd(a, 0) = monic(a)."""
    a, b = list(a), list(b)
    while b:
        a, b = b, _mod_codes(ar, a, b)
    return _monic_codes(ar, a)


def _powmod_codes(
    ar: FieldArithmetic,
    base: Sequence[int],
    e: int,
    mod: Sequence[int],
) -> list[int]:
    result = _mod_codes(ar, [1], mod)
    base = _mod_codes(ar, base, mod)
    while e:
        if e & 1:
            result = _mod_codes(ar, _mul_codes(ar, result, base), mod)
        base = _mod_codes(ar, _mul_codes(ar, base, base), mod)
        e >>= 1
    return result


def _prime_divisors(n: int) -> list[int]:
    out, f = [], 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


def _rabin_irreducible(ar: FieldArithmetic, f: Sequence[int]) -> bool:
    """
    Rabin's test for a monic f of degree n >= 2: f is irreducible iff
    x^(q^n) = x mod f and gcd(x^(q^(n/r)) - x, f) = 1 for each prime r | n.
    """
    n = len(f) - 1
    x = [0, 1]
    frobenius = [x]
    h = x
    for _ in range(n):
        h = _powmod_codes(ar, h, ar.q, f)
        frobenius.append(h)
    if frobenius[n] != x:
        return False
    for r in _prime_divisors(n):
        g = _gcd_codes(ar, _sub_codes(ar, frobenius[n // r], x), f)
        if len(g) > 1:
            return False
    return True


# ===================
# === Polynomials ===
# ===================

class Polynomial:
    """
    An immutable polynomial over a FieldSpec.

    Coefficients may be given as FieldElements or canonical codes, lowest
    degree first; trailing zeros are trimmed.
    """

    __slots__ = ("_spec", "_c")

    def __init__(self, spec: FieldSpec, coeffs: Iterable[FieldElement | int] = ()):
        codes = []
        for c in coeffs:
            if isinstance(c, FieldElement):
                if c.spec != spec:
                    raise SpecMismatch(f"{c.spec} coefficient used with {spec}")
                codes.append(c.code)
            elif isinstance(c, int):
                if not 0 <= c < spec.q:
                    raise BadRange(f"coefficient code {c} outside [0, {spec.q})")
                codes.append(c)
            else:
                raise TypeError(f"unsupported coefficient {c!r}")
        self._spec = spec
        self._c = tuple(_trim(codes))

    @classmethod
    def _raw(cls, spec: FieldSpec, codes: Sequence[int]) -> "Polynomial":
        # codes must already be normalized
        obj = cls.__new__(cls)
        obj._spec = spec
        obj._c = tuple(codes)
        return obj

    @classmethod
    def constant(cls, spec: FieldSpec, code: int) -> "Polynomial":
        return cls(spec, [code])

    @classmethod
    def one(cls, spec: FieldSpec) -> "Polynomial":
        return cls._raw(spec, (1,))

    @classmethod
    def x(cls, spec: FieldSpec) -> "Polynomial":
        return cls._raw(spec, (0, 1))

    @classmethod
    def monomial(cls, spec: FieldSpec, n: int, code: int = 1) -> "Polynomial":
        return cls(spec, [0] * n + [code])

    # --- accessors ---

    @property
    def spec(self) -> FieldSpec:
        return self._spec

    @property
    def codes(self) -> tuple[int, ...]:
        return self._c

    @property
    def coeffs(self) -> tuple[FieldElement, ...]:
        return tuple(FieldElement(self._spec, c) for c in self._c)

    @property
    def degree(self) -> int | float:
        return len(self._c) - 1 if self._c else ZERO_DEGREE

    @property
    def is_zero(self) -> bool:
        return not self._c

    @property
    def leading_coeff(self) -> FieldElement:
        return FieldElement(self._spec, self._c[-1] if self._c else 0)

    @property
    def constant_coeff(self) -> FieldElement:
        return FieldElement(self._spec, self._c[0] if self._c else 0)

    @property
    def is_monic(self) -> bool:
        return bool(self._c) and self._c[-1] == 1

    @property
    def code(self) -> int:
        """Integer packing sum(c_i * q**i); the enumeration order."""
        q, value = self._spec.q, 0
        for c in reversed(self._c):
            value = value * q + c
        return value

    def sort_key(self) -> tuple[int | float, int]:
        return (self.degree, self.code)

    # --- arithmetic ---

    def _check(self, other: "Polynomial") -> FieldArithmetic:
        if not isinstance(other, Polynomial):
            raise TypeError(f"polynomial expected, got {type(other).__name__}")
        if other._spec != self._spec:
            raise SpecMismatch(f"{other._spec} polynomial used with {self._spec}")
        return arithmetic(self._spec)

    def __add__(self, other: "Polynomial") -> "Polynomial":
        ar = self._check(other)
        return Polynomial._raw(self._spec, _add_codes(ar, self._c, other._c))

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        ar = self._check(other)
        return Polynomial._raw(self._spec, _sub_codes(ar, self._c, other._c))

    def __neg__(self) -> "Polynomial":
        ar = arithmetic(self._spec)
        return Polynomial._raw(self._spec, [ar.neg(c) for c in self._c])

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        ar = self._check(other)
        return Polynomial._raw(self._spec, _mul_codes(ar, self._c, other._c))

    def __divmod__(self, other: "Polynomial") -> tuple["Polynomial", "Polynomial"]:
        ar = self._check(other)
        if other.is_zero:
            raise DivisionByZero("division by the zero polynomial")
        quot, rem = _divmod_codes(ar, self._c, other._c)
        return Polynomial._raw(self._spec, quot), Polynomial._raw(self._spec, rem)

    def __floordiv__(self, other: "Polynomial") -> "Polynomial":
        return divmod(self, other)[0]

    def __mod__(self, other: "Polynomial") -> "Polynomial":
        return divmod(self, other)[1]

    def __pow__(self, e: int) -> "Polynomial":
        if e < 0:
            raise BadRange(f"exponent must be nonnegative, got {e}")
        ar = arithmetic(self._spec)
        result, base = [1], list(self._c)
        while e:
            if e & 1:
                result = _mul_codes(ar, result, base)
            base = _mul_codes(ar, base, base)
            e >>= 1
        return Polynomial._raw(self._spec, result)

    def __call__(self, x: FieldElement) -> FieldElement:
        """Evaluate by Horner's rule."""
        if x.spec != self._spec:
            raise SpecMismatch(f"{x.spec} point used with {self._spec}")
        ar = arithmetic(self._spec)
        y = 0
        for c in reversed(self._c):
            y = ar.add(ar.mul(y, x.code), c)
        return FieldElement(self._spec, y)

    def scale(self, c: FieldElement) -> "Polynomial":
        if c.spec != self._spec:
            raise SpecMismatch(f"{c.spec} scalar used with {self._spec}")
        return Polynomial._raw(self._spec, _scale_codes(arithmetic(self._spec), self._c, c.code))

    def make_monic(self) -> "Polynomial":
        if self.is_zero:
            raise ZeroPolynomial("the zero polynomial has no monic form")
        return Polynomial._raw(self._spec, _monic_codes(arithmetic(self._spec), self._c))

    # --- reciprocal ---

    def reciprocal_raw(self) -> "Polynomial":
        """f*(x) = x^n f(1/x): the reversed coefficient list."""
        if self.is_zero or self._c[0] == 0:
            raise ZeroConstantTerm(f"{self} has zero constant coefficient")
        return Polynomial._raw(self._spec, self._c[::-1])

    def reciprocal_monic(self) -> "Polynomial":
        return self.reciprocal_raw().make_monic()

    # --- comparison / display ---

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self._spec == other._spec and self._c == other._c
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self._spec, self._c))

    def __repr__(self) -> str:
        return f"Polynomial({self._spec}, {list(self._c)})"

    def __str__(self) -> str:
        return format_polynomial(self)


def degree(f: Polynomial) -> int | float:
    return f.degree


def constant_coeff(f: Polynomial) -> FieldElement:
    return f.constant_coeff


def make_monic(f: Polynomial) -> Polynomial:
    return f.make_monic()


def gcd_monic(f: Polynomial, g: Polynomial) -> Polynomial:
    """Monic gcd by Euclid's algorithm."""
    ar = f._check(g)
    if f.is_zero and g.is_zero:
        raise BothZero("gcd of two zero polynomials")
    return Polynomial._raw(f.spec, _gcd_codes(ar, f.codes, g.codes))


# ===================
# === Enumeration ===
# ===================

def monic_count(spec: FieldSpec, n: int, nonzero_constant: bool) -> int:
    if n < 0:
        raise BadDegree(f"degree must be >= 0, got {n}")
    if n == 0:
        return 1
    if nonzero_constant:
        return (spec.q - 1) * spec.q ** (n - 1)
    return spec.q ** n


def monic_at(spec: FieldSpec, n: int, index: int, nonzero_constant: bool) -> Polynomial:
    """
    The index-th monic polynomial of degree n in enumeration order (ascending
    code, constant coefficient varying fastest).
    """
    if not 0 <= index < monic_count(spec, n, nonzero_constant):
        raise BadRange(f"index {index} out of range for degree {n}")
    if n == 0:
        return Polynomial.one(spec)
    q = spec.q
    codes = []
    positions = n
    if nonzero_constant:
        index, a0 = divmod(index, q - 1)
        codes.append(a0 + 1)
        positions -= 1
    for _ in range(positions):
        index, d = divmod(index, q)
        codes.append(d)
    codes.append(1)
    return Polynomial._raw(spec, codes)


def enumerate_monic(spec: FieldSpec, n: int, nonzero_constant: bool) -> Iterator[Polynomial]:
    """
    Every monic polynomial of degree n exactly once, ascending code order.

    Stream length is (q-1) q^(n-1) when nonzero_constant (n >= 1), q^n otherwise.
    """
    if n < 0:
        raise BadDegree(f"degree must be >= 0, got {n}")
    if n == 0:
        yield Polynomial.one(spec)
        return
    q = spec.q
    constants = range(1, q) if nonzero_constant else range(q)
    for high in itertools.product(range(q), repeat=n - 1):
        middle = high[::-1]
        for a0 in constants:
            yield Polynomial._raw(spec, (a0, *middle, 1))


# ==========================
# === Irreducible tables ===
# ==========================

_TABLES: dict[FieldSpec, list[tuple[Polynomial, ...]]] = {}
_TABLE_LOCK = threading.Lock()


def _sieve_degree(spec: FieldSpec, d: int, table: list[tuple[Polynomial, ...]]) -> tuple[Polynomial, ...]:
    q = spec.q
    if d == 1:
        return tuple(Polynomial._raw(spec, (a, 1)) for a in range(q))
    ar = arithmetic(spec)
    composite = bytearray(q ** d)
    for e in range(1, d // 2 + 1):
        for g in table[e]:
            for h in enumerate_monic(spec, d - e, nonzero_constant=False):
                prod = _mul_codes(ar, g.codes, h.codes)
                index = 0
                for c in reversed(prod[:-1]):
                    index = index * q + c
                composite[index] = 1
    level = []
    for index, marked in enumerate(composite):
        if not marked:
            codes = []
            for _ in range(d):
                index, c = divmod(index, q)
                codes.append(c)
            codes.append(1)
            level.append(Polynomial._raw(spec, codes))
    logger.info(f"Irreducible table for {spec}: {len(level)} entries of degree {d}")
    return tuple(level)


def irreducible_table(spec: FieldSpec, max_degree: int) -> list[tuple[Polynomial, ...]]:
    """
    Monic irreducibles grouped by degree: entry d lists degree-d irreducibles in
    ascending code order (entry 0 is empty). Built by sieve and cached per spec.
    """
    if max_degree < 1:
        raise BadDegree(f"max_degree must be >= 1, got {max_degree}")
    with _TABLE_LOCK:
        table = _TABLES.setdefault(spec, [()])
        while len(table) <= max_degree:
            table.append(_sieve_degree(spec, len(table), table))
        return table[:max_degree + 1]


def is_irreducible(f: Polynomial) -> bool:
    """Irreducibility over the coefficient field (units and zero are not irreducible)."""
    if f.is_zero:
        raise ZeroPolynomial("irreducibility of the zero polynomial")
    if f.degree < 1:
        return False
    if f.degree == 1:
        return True
    ar = arithmetic(f.spec)
    return _rabin_irreducible(ar, _monic_codes(ar, f.codes))


class Factorization(BaseModel):
    """
    unit * product(factor ** multiplicity), factors monic irreducible and sorted
    by (degree, code).
    """
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    unit: FieldElement = Field(..., description="Leading coefficient of the input.")
    factors: tuple[tuple[Polynomial, int], ...] = Field(
        default=(),
        description="(monic irreducible, multiplicity) pairs."
    )

    def expand(self) -> Polynomial:
        spec = self.unit.spec
        result = Polynomial.constant(spec, self.unit.code)
        for g, e in self.factors:
            result = result * g ** e
        return result

    def multiplicity(self, g: Polynomial) -> int:
        return next((e for h, e in self.factors if h == g), 0)

    def divisors(self) -> Iterator[Polynomial]:
        """Every monic divisor, one per exponent tuple."""
        spec = self.unit.spec
        ranges = [range(e + 1) for _, e in self.factors]
        for exponents in itertools.product(*ranges):
            d = Polynomial.one(spec)
            for (g, _), a in zip(self.factors, exponents):
                if a:
                    d = d * g ** a
            yield d

    def __str__(self) -> str:
        parts = [f"({g})^{e}" if e > 1 else f"({g})" for g, e in self.factors]
        if self.unit.code != 1 or not parts:
            parts.insert(0, str(self.unit))
        return "*".join(parts)


def factor(f: Polynomial) -> Factorization:
    """
    Trial division against the irreducible table, each hit divided out to full
    multiplicity; the surviving cofactor of degree >= 1 is irreducible.
    """
    if f.is_zero:
        raise ZeroPolynomial("cannot factor the zero polynomial")
    spec = f.spec
    ar = arithmetic(spec)
    unit = f.leading_coeff
    rem = _monic_codes(ar, f.codes)
    found: list[tuple[Polynomial, int]] = []

    d = 1
    while 2 * d <= len(rem) - 1:
        # the cofactor has no factor of degree < d here
        if d >= 3 and _rabin_irreducible(ar, rem):
            break
        for g in irreducible_table(spec, d)[d]:
            if 2 * d > len(rem) - 1:
                break
            e = 0
            while True:
                quot, r = _divmod_codes(ar, rem, g.codes)
                if r:
                    break
                rem = quot
                e += 1
            if e:
                found.append((g, e))
        d += 1
    if len(rem) > 1:
        found.append((Polynomial._raw(spec, rem), 1))
    found.sort(key=lambda pair: pair[0].sort_key())
    return Factorization(unit=unit, factors=tuple(found))


# =====================
# === Text grammars ===
# =====================

class PolyStyle(str, Enum):
    CANONICAL = "canonical"
    HUMAN = "human"
    BITS = "bits"


_CANONICAL = re.compile(r"\[\s*(\d+(?:\s*,\s*\d+)*)?\s*\]")
_TERM = re.compile(r"(?:(?P<coef>\d+)\s*\*?\s*)?(?P<x>x(?:\s*\^\s*(?P<exp>\d+))?)?")


def _parse_human(spec: FieldSpec, text: str) -> list[int]:
    codes: dict[int, int] = {}
    ar = arithmetic(spec)
    for raw_term in text.split("+"):
        term = raw_term.strip()
        match = _TERM.fullmatch(term)
        if not term or match is None or (match["coef"] is None and match["x"] is None):
            raise ParseError(f"invalid term {raw_term!r} in {text!r}")
        coef = int(match["coef"]) if match["coef"] is not None else 1
        if coef >= spec.q:
            raise ParseError(f"coefficient code {coef} outside [0, {spec.q})")
        exp = 0
        if match["x"] is not None:
            exp = int(match["exp"]) if match["exp"] is not None else 1
        codes[exp] = ar.add(codes.get(exp, 0), coef)
    if not codes:
        return []
    return [codes.get(i, 0) for i in range(max(codes) + 1)]


def parse_polynomial(spec: FieldSpec, text: str) -> Polynomial:
    """
    Parse "[a0,a1,...,an]", human "x^3+2*x+1" (element codes as coefficients),
    or, over GF(2), a bitstring "a0a1...an".
    """
    text = text.strip()
    match = _CANONICAL.fullmatch(text)
    if match is not None:
        body = match.group(1)
        codes = [int(c) for c in body.split(",")] if body else []
    elif spec.q == 2 and re.fullmatch(r"[01]+", text):
        codes = [int(c) for c in text]
    else:
        codes = _parse_human(spec, text)
    try:
        return Polynomial(spec, codes)
    except BadRange as e:
        raise ParseError(str(e)) from e


def format_polynomial(f: Polynomial, style: PolyStyle = PolyStyle.CANONICAL) -> str:
    if style == PolyStyle.CANONICAL:
        return "[" + ",".join(str(c) for c in f.codes) + "]"
    if style == PolyStyle.BITS:
        if f.spec.q != 2:
            raise ParseError(f"bitstring form needs GF(2), not {f.spec}")
        return "".join(str(c) for c in f.codes) or "0"
    terms = []
    for i in range(len(f.codes) - 1, -1, -1):
        c = f.codes[i]
        if not c:
            continue
        if i == 0:
            terms.append(str(c))
        else:
            power = "x" if i == 1 else f"x^{i}"
            terms.append(power if c == 1 else f"{c}*{power}")
    return "+".join(terms) or "0"


def require_reciprocal_input(f: Polynomial) -> None:
    """Precondition of the self-reciprocal operations: monic, nonzero constant."""
    if f.is_zero or f.codes[0] == 0:
        raise ZeroConstantTerm(f"{f} has zero constant coefficient")
    if not f.is_monic:
        raise NotMonic(f"{f} is not monic")
