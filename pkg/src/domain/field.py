"""
Finite fields GF(p^k)

A field is described by a FieldSpec (prime p, degree k and a monic irreducible
modulus over GF(p)). Elements are residues of the modulus, stored as a
canonical integer code sum(digits[i] * p**i) in [0, q).

Example usage:
    spec = make_extension_field(2, 2)          # modulus x^2 + x + 1
    x = element(spec, 2)
    assert x * element(spec, 3) == element(spec, 1)
"""

import functools
import itertools
import logging
import re
from collections.abc import Iterator, Sequence

from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.domain.errors import (
    BadDegree,
    BadRange,
    DivisionByZero,
    NotIrreducible,
    NotMonic,
    NotPrime,
    ParseError,
    SpecMismatch,
)

logger = logging.getLogger(__name__)

# Largest q for which add/mul tables are precomputed.
TABLE_FIELD_LIMIT = 256

_DESCRIPTOR = re.compile(
    r"\s*(?P<base>\d+)\s*(?:\^\s*(?P<k>\d+))?\s*"
    r"(?:;\s*modulus\s*=\s*(?P<modulus>[\d\s,]+))?\s*"
)


# =================
# === Integers ===
# =================

def is_prime(n: int) -> bool:
    """Deterministic trial-division primality check."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_power(q: int) -> tuple[int, int]:
    """
    Split a prime power q into (p, k) with q = p**k.

    Raises:
        NotPrime: if q is not a prime power
    """
    if q < 2:
        raise NotPrime(f"{q} is not a prime power")
    p = next(f for f in itertools.count(2) if q % f == 0)
    k, rest = 0, q
    while rest % p == 0:
        rest //= p
        k += 1
    if rest != 1:
        raise NotPrime(f"{q} is not a prime power")
    return p, k


def is_prime_power(q: int) -> bool:
    try:
        prime_power(q)
    except NotPrime:
        return False
    return True


# ======================================
# === Polynomials over GF(p), p prime ===
# ======================================

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _prime_poly_mod(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    """Remainder of a modulo the nonzero polynomial b over GF(p)."""
    rem = _trim([c % p for c in a])
    db = len(b) - 1
    lead_inv = pow(b[-1], p - 2, p)
    while len(rem) - 1 >= db:
        c = rem[-1] * lead_inv % p
        shift = len(rem) - 1 - db
        for i, bc in enumerate(b):
            rem[shift + i] = (rem[shift + i] - c * bc) % p
        _trim(rem)
    return rem


def _monic_candidates(p: int, degree: int) -> Iterator[list[int]]:
    """Monic polynomials of the given degree, least (a0, ..., a_{d-1}) first."""
    for tail in itertools.product(range(p), repeat=degree):
        yield [*tail, 1]


def is_irreducible_over_prime(p: int, coeffs: Sequence[int]) -> bool:
    """
    Trial-division irreducibility test over GF(p).

    Args:
        p: prime characteristic
        coeffs: ascending coefficients of a monic polynomial of degree >= 1

    Returns:
        True iff no monic polynomial of degree 1..deg/2 divides coeffs
    """
    poly = _trim([c % p for c in coeffs])
    degree = len(poly) - 1
    if degree < 1:
        raise BadDegree(f"irreducibility needs degree >= 1, got {degree}")
    if poly[-1] != 1:
        raise NotMonic(f"{list(coeffs)} is not monic over GF({p})")
    for d in range(1, degree // 2 + 1):
        for candidate in _monic_candidates(p, d):
            if not _prime_poly_mod(poly, candidate, p):
                return False
    return True


@functools.cache
def default_modulus(p: int, k: int) -> tuple[int, ...]:
    """
    The monic irreducible of degree k over GF(p) whose ascending coefficient
    tuple (a0, ..., a_{k-1}) is lexicographically least.
    """
    if k == 1:
        return (0, 1)
    for candidate in _monic_candidates(p, k):
        if candidate[0] != 0 and is_irreducible_over_prime(p, candidate):
            logger.debug(f"Selected modulus {candidate} for GF({p}^{k})")
            return tuple(candidate)
    raise NotIrreducible(f"no irreducible of degree {k} over GF({p})")


# ==================
# === Field spec ===
# ==================

class FieldSpec(BaseModel):
    """
    Description of GF(p^k): characteristic, degree and reduction modulus.

    For k = 1 the modulus is the placeholder x (coefficients (0, 1)) and is
    never used in reduction.
    """
    model_config = ConfigDict(frozen=True)

    p: int = Field(..., ge=2, description="Prime characteristic.")
    k: int = Field(1, ge=1, description="Extension degree.")
    modulus: tuple[int, ...] = Field(
        (0, 1),
        description="Ascending coefficients of the monic irreducible modulus."
    )

    @model_validator(mode="after")
    def _check_modulus(self) -> "FieldSpec":
        if not is_prime(self.p):
            raise NotPrime(f"{self.p} is not prime")
        if len(self.modulus) != self.k + 1:
            raise BadDegree(f"modulus {self.modulus} does not have degree {self.k}")
        if any(not 0 <= c < self.p for c in self.modulus):
            raise BadRange(f"modulus {self.modulus} has coefficients outside [0, {self.p})")
        if self.modulus[-1] != 1:
            raise NotMonic(f"modulus {self.modulus} is not monic")
        if self.k == 1:
            if self.modulus != (0, 1):
                raise BadDegree("prime fields use the placeholder modulus x")
        elif not is_irreducible_over_prime(self.p, self.modulus):
            raise NotIrreducible(f"modulus {self.modulus} is reducible over GF({self.p})")
        return self

    @property
    def q(self) -> int:
        return self.p ** self.k

    @property
    def descriptor(self) -> str:
        """Text form "p^k", with ";modulus=..." when the modulus is not the default."""
        text = f"{self.p}^{self.k}"
        if self.modulus != default_modulus(self.p, self.k):
            text += ";modulus=" + ",".join(str(c) for c in self.modulus)
        return text

    def __str__(self) -> str:
        return f"GF({self.q})" if self.k == 1 else f"GF({self.p}^{self.k})"


def make_prime_field(p: int) -> FieldSpec:
    """
    Build GF(p).

    Raises:
        NotPrime: if p is composite or smaller than 2
    """
    if p < 2 or not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    return FieldSpec(p=p, k=1, modulus=(0, 1))


def _check_linear_modulus(p: int, modulus: list[int]) -> None:
    # every monic linear polynomial gives the same GF(p); the placeholder x is stored
    if len(modulus) != 2:
        raise BadDegree(f"modulus {modulus} does not have degree 1")
    if any(not 0 <= c < p for c in modulus):
        raise BadRange(f"modulus {modulus} has coefficients outside [0, {p})")
    if modulus[-1] != 1:
        raise NotMonic(f"modulus {modulus} is not monic")
    logger.debug(f"Linear modulus {modulus} accepted for GF({p})")


def make_extension_field(
    p: int,
    k: int,
    modulus: Sequence[int] | None = None,
) -> FieldSpec:
    """
    Build GF(p^k).

    Args:
        p: prime characteristic
        k: extension degree (>= 1)
        modulus: optional ascending coefficients of a monic irreducible of
            degree k; the lexicographically least one is used when omitted

    Raises:
        NotPrime, BadDegree, NotMonic, NotIrreducible
    """
    if p < 2 or not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if k < 1:
        raise BadDegree(f"extension degree must be >= 1, got {k}")
    if k == 1:
        if modulus is not None:
            _check_linear_modulus(p, [int(c) for c in modulus])
        return make_prime_field(p)
    if modulus is None:
        modulus = default_modulus(p, k)
    return FieldSpec(p=p, k=k, modulus=tuple(int(c) for c in modulus))


def parse_field(text: str) -> FieldSpec:
    """
    Parse a field descriptor: "p", "q" (prime power), or "p^k", each with an
    optional ";modulus=a0,a1,...,ak" suffix.
    """
    match = _DESCRIPTOR.fullmatch(text)
    if match is None:
        raise ParseError(f"invalid field descriptor {text!r}")
    base = int(match["base"])
    if match["k"] is not None:
        p, k = base, int(match["k"])
    else:
        p, k = prime_power(base)
    modulus = None
    if match["modulus"]:
        try:
            modulus = [int(c) for c in match["modulus"].split(",")]
        except ValueError as e:
            raise ParseError(f"invalid modulus in {text!r}") from e
    return make_extension_field(p, k, modulus)


# ==================
# === Arithmetic ===
# ==================

class FieldArithmetic:
    """
    Arithmetic on canonical codes of one field.

    Operations are chosen once at construction: table lookups when
    q <= TABLE_FIELD_LIMIT, direct computation otherwise.
    """

    def __init__(self, spec: FieldSpec):
        self.spec = spec
        self.p = spec.p
        self.k = spec.k
        self.q = spec.q

        if self.k == 1:
            self.add = self._prime_add
            self.sub = self._prime_sub
            self.neg = self._prime_neg
            self.mul = self._prime_mul
        else:
            self.add = self._ext_add
            self.sub = self._ext_sub
            self.neg = self._ext_neg
            self.mul = self._ext_mul

        if self.q <= TABLE_FIELD_LIMIT:
            self._add_table = [[self.add(a, b) for b in range(self.q)] for a in range(self.q)]
            self._mul_table = [[self.mul(a, b) for b in range(self.q)] for a in range(self.q)]
            self._neg_table = [self.neg(a) for a in range(self.q)]
            self._inv_table = [None] + [self._pow(a, self.q - 2) for a in range(1, self.q)]
            self._sub_table = [[self._add_table[a][self._neg_table[b]] for b in range(self.q)]
                               for a in range(self.q)]
            self.add = self._table_add
            self.sub = self._table_sub
            self.neg = self._neg_table.__getitem__
            self.mul = self._table_mul
        else:
            self._inv_table = None

    # --- digits ---

    def digits(self, code: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.k):
            code, d = divmod(code, self.p)
            out.append(d)
        return tuple(out)

    def from_digits(self, digits: Sequence[int]) -> int:
        code = 0
        for d in reversed(digits):
            code = code * self.p + d
        return code

    # --- table path ---

    def _table_add(self, a: int, b: int) -> int:
        return self._add_table[a][b]

    def _table_sub(self, a: int, b: int) -> int:
        return self._sub_table[a][b]

    def _table_mul(self, a: int, b: int) -> int:
        return self._mul_table[a][b]

    # --- prime path ---

    def _prime_add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def _prime_sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def _prime_neg(self, a: int) -> int:
        return -a % self.p

    def _prime_mul(self, a: int, b: int) -> int:
        return a * b % self.p

    # --- extension path ---

    def _ext_add(self, a: int, b: int) -> int:
        p = self.p
        return self.from_digits([(x + y) % p for x, y in zip(self.digits(a), self.digits(b))])

    def _ext_sub(self, a: int, b: int) -> int:
        p = self.p
        return self.from_digits([(x - y) % p for x, y in zip(self.digits(a), self.digits(b))])

    def _ext_neg(self, a: int) -> int:
        return self.from_digits([-x % self.p for x in self.digits(a)])

    def _ext_mul(self, a: int, b: int) -> int:
        p, k, modulus = self.p, self.k, self.spec.modulus
        da, db = self.digits(a), self.digits(b)
        prod = [0] * (2 * k - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % p
        # modulus is monic: x^k = -(m_0 + ... + m_{k-1} x^{k-1})
        for top in range(2 * k - 2, k - 1, -1):
            c = prod[top]
            if c:
                prod[top] = 0
                for j in range(k):
                    prod[top - k + j] = (prod[top - k + j] - c * modulus[j]) % p
        return self.from_digits(prod[:k])

    # --- shared ---

    def _pow(self, a: int, e: int) -> int:
        result = 1
        while e:
            if e & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            e >>= 1
        return result

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self._pow(self.inv(a), -e)
        return self._pow(a, e)

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero(f"0 has no inverse in {self.spec}")
        if self._inv_table is not None:
            return self._inv_table[a]
        if self.k == 1:
            return pow(a, self.p - 2, self.p)
        return self._pow(a, self.q - 2)


@functools.cache
def arithmetic(spec: FieldSpec) -> FieldArithmetic:
    """Shared, cached arithmetic for a field."""
    logger.debug(f"Building arithmetic for {spec}")
    return FieldArithmetic(spec)


# ================
# === Elements ===
# ================

class FieldElement:
    """
    An immutable element of GF(p^k), identified by its canonical code.

    Integers mix in as multiples of 1 (so in GF(7), element(7, 3) + 5 == 1).
    """

    __slots__ = ("_spec", "_code")

    def __init__(self, spec: FieldSpec, code: int):
        if not 0 <= code < spec.q:
            raise BadRange(f"code {code} outside [0, {spec.q}) for {spec}")
        self._spec = spec
        self._code = code

    @property
    def spec(self) -> FieldSpec:
        return self._spec

    @property
    def code(self) -> int:
        return self._code

    @property
    def digits(self) -> tuple[int, ...]:
        return arithmetic(self._spec).digits(self._code)

    @classmethod
    def from_digits(cls, spec: FieldSpec, digits: Sequence[int]) -> "FieldElement":
        if len(digits) != spec.k or any(not 0 <= d < spec.p for d in digits):
            raise BadRange(f"digits {list(digits)} invalid for {spec}")
        return cls(spec, arithmetic(spec).from_digits(digits))

    def _other(self, other: "FieldElement | int") -> int:
        if isinstance(other, FieldElement):
            if other._spec != self._spec:
                raise SpecMismatch(f"{other._spec} element used with {self._spec}")
            return other._code
        if isinstance(other, int):
            return other % self._spec.p
        return NotImplemented

    def _wrap(self, code: int) -> "FieldElement":
        return FieldElement(self._spec, code)

    def __add__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return self._wrap(arithmetic(self._spec).add(self._code, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return self._wrap(arithmetic(self._spec).sub(self._code, b))

    def __rsub__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return self._wrap(arithmetic(self._spec).sub(b, self._code))

    def __neg__(self) -> "FieldElement":
        return self._wrap(arithmetic(self._spec).neg(self._code))

    def __mul__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return self._wrap(arithmetic(self._spec).mul(self._code, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        ar = arithmetic(self._spec)
        return self._wrap(ar.mul(self._code, ar.inv(b)))

    def __rtruediv__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        ar = arithmetic(self._spec)
        return self._wrap(ar.mul(b, ar.inv(self._code)))

    def __pow__(self, e: int) -> "FieldElement":
        return self._wrap(arithmetic(self._spec).pow(self._code, e))

    def inv(self) -> "FieldElement":
        return self._wrap(arithmetic(self._spec).inv(self._code))

    def pow(self, e: int) -> "FieldElement":
        if e < 0:
            raise BadRange(f"exponent must be nonnegative, got {e}")
        return self ** e

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldElement):
            return self._spec == other._spec and self._code == other._code
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self._spec, self._code))

    def __bool__(self) -> bool:
        return self._code != 0

    def __int__(self) -> int:
        return self._code

    def __repr__(self) -> str:
        return f"FieldElement({self._spec}, {self._code})"

    def __str__(self) -> str:
        return str(self._code)


def element(spec: FieldSpec, code: int) -> FieldElement:
    return FieldElement(spec, code)


def enumerate_elements(spec: FieldSpec) -> Iterator[FieldElement]:
    """All q elements in ascending canonical-code order."""
    for code in range(spec.q):
        yield FieldElement(spec, code)
