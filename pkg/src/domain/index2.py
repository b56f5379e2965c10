"""
Index-2 linear systems over GF(2)

A coefficient vector k = [k_0, ..., k_m] with k_0 = k_m = 1 defines the
infinite system

    delta_{i,1} = sum_j k_j a_{|i-j|}     (i >= 1, a_0 = 0, a_{-j} = a_j)

over a symmetric binary sequence (a). Rows 1..m involve only a_1..a_m and
form an m x m system; every later row is the order-m recurrence
a_i = sum_{j>=1} k_j a_{i-j}. The degenerate vectors [1] and [1, 1] give the
two special sequences 0100... and 0111....
"""

import logging
import re
from collections.abc import Iterator
from concurrent.futures import ProcessPoolExecutor

from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.domain.counting import expected_index2_count
from src.domain.errors import BadRange, OrderTooSmall, ParseError, ResidualMismatch
from src.domain.field import make_prime_field
from src.domain.models import Index2CountRow, PeriodicityReport
from src.domain.polynomial import Polynomial
from src.domain.reciprocal import max_self_reciprocal_factor

logger = logging.getLogger(__name__)

GF2 = make_prime_field(2)

# m at or below which the periodicity claim is checked in census runs
PERIODICITY_CHECK_LIMIT = 10


class KVector(BaseModel):
    """Coefficient vector [k_0, ..., k_m] over GF(2) with k_0 = k_m = 1."""
    model_config = ConfigDict(frozen=True)

    bits: tuple[int, ...] = Field(..., min_length=1)

    @model_validator(mode="after")
    def _check_bits(self) -> "KVector":
        if any(b not in (0, 1) for b in self.bits):
            raise BadRange(f"k-vector bits must be 0 or 1, got {self.bits}")
        if self.bits[0] != 1 or self.bits[-1] != 1:
            raise BadRange(f"k-vector needs k_0 = k_m = 1, got {self.bits}")
        return self

    @classmethod
    def from_bitstring(cls, text: str) -> "KVector":
        text = text.strip()
        if not re.fullmatch(r"[01]+", text):
            raise ParseError(f"invalid k-vector bitstring {text!r}")
        return cls(bits=tuple(int(c) for c in text))

    @property
    def m(self) -> int:
        return len(self.bits) - 1

    def to_bitstring(self) -> str:
        return "".join(str(b) for b in self.bits)

    def as_int(self) -> int:
        """Integer value of the bitstring k_0...k_m (k_0 most significant)."""
        return int(self.to_bitstring(), 2)

    def polynomial(self) -> Polynomial:
        """K(x) = k_0 + k_1 x + ... + k_m x^m over GF(2)."""
        return Polynomial(GF2, self.bits)

    def __str__(self) -> str:
        return self.to_bitstring()


class IndexTwoSolution(BaseModel):
    """
    A symmetric sequence solving the system of k, stored as a_0..a_L with
    L = max(m, 1); beyond L it follows the recurrence of k.
    """
    model_config = ConfigDict(frozen=True)

    k: KVector
    prefix: tuple[int, ...]

    @model_validator(mode="after")
    def _check_prefix(self) -> "IndexTwoSolution":
        if len(self.prefix) != max(self.k.m, 1) + 1:
            raise BadRange(f"prefix {self.prefix} has the wrong length for m={self.k.m}")
        if self.prefix[0] != 0:
            raise BadRange("index-2 sequences have a_0 = 0")
        if any(b not in (0, 1) for b in self.prefix):
            raise BadRange(f"prefix bits must be 0 or 1, got {self.prefix}")
        return self

    def sequence(self, length: int) -> list[int]:
        """a_0, ..., a_{length-1}."""
        bits, m = self.k.bits, self.k.m
        a = list(self.prefix[:length])
        while len(a) < length:
            i = len(a)
            a.append(sum(bits[j] & a[i - j] for j in range(1, m + 1)) & 1)
        return a

    def a(self, i: int) -> int:
        """a_i for any integer i (a_{-i} = a_i)."""
        i = abs(i)
        return self.sequence(i + 1)[i]

    def window(self, start: int, length: int) -> list[int]:
        """a_start, ..., a_{start+length-1}; negative indices reflect."""
        a = self.sequence(max(abs(start), abs(start + length - 1)) + 1)
        return [a[abs(i)] for i in range(start, start + length)]


# ======================
# === Linear algebra ===
# ======================

def system_matrix(k: KVector) -> tuple[list[list[int]], list[int]]:
    """
    Rows 1..m of the system: matrix[i-1][u-1] = sum of k_j over |i - j| = u
    (mod 2), unknowns a_1..a_m, right-hand side (1, 0, ..., 0).
    """
    m = k.m
    if m < 2:
        raise OrderTooSmall(f"the finite system needs m >= 2, got {m}")
    matrix = [[0] * m for _ in range(m)]
    for i in range(1, m + 1):
        for j, kj in enumerate(k.bits):
            u = abs(i - j)
            if kj and u:
                matrix[i - 1][u - 1] ^= 1
    rhs = [1] + [0] * (m - 1)
    return matrix, rhs


def solve_gf2(matrix: list[list[int]], rhs: list[int]) -> list[list[int]]:
    """
    Every solution of matrix . x = rhs over GF(2).

    Rows are packed into ints (bit u = column u, bit n = right-hand side) and
    reduced by Gauss-Jordan elimination, lowest column and row first.
    """
    n = len(matrix[0]) if matrix else 0
    rows = [
        sum(bit << u for u, bit in enumerate(row)) | (b << n)
        for row, b in zip(matrix, rhs)
    ]
    pivots: list[int] = []
    r = 0
    for col in range(n):
        pivot = next((i for i in range(r, len(rows)) if (rows[i] >> col) & 1), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        for i in range(len(rows)):
            if i != r and (rows[i] >> col) & 1:
                rows[i] ^= rows[r]
        pivots.append(col)
        r += 1
    # an all-zero coefficient row with rhs 1 is inconsistent
    if any(row == 1 << n for row in rows[r:]):
        return []

    free = [c for c in range(n) if c not in pivots]
    solutions = []
    for assignment in range(1 << len(free)):
        x = [0] * n
        for idx, c in enumerate(free):
            x[c] = (assignment >> idx) & 1
        for row_idx, c in enumerate(pivots):
            row = rows[row_idx]
            value = (row >> n) & 1
            for f in free:
                if (row >> f) & 1:
                    value ^= x[f]
            x[c] = value
        solutions.append(x)
    return solutions


def residual_ok(k: KVector, sol: IndexTwoSolution, upto: int) -> bool:
    """True iff rows 1..upto of the infinite system hold for sol."""
    a = sol.sequence(upto + k.m + 1)
    for i in range(1, upto + 1):
        total = 0
        for j, kj in enumerate(k.bits):
            if kj:
                total ^= a[abs(i - j)]
        if total != (1 if i == 1 else 0):
            return False
    return True


def solve_index2(k: KVector) -> list[IndexTwoSolution]:
    """
    All sequences solving the system of k, sorted by prefix; empty if unsolvable.

    Raises:
        ResidualMismatch: if a solution fails a row i <= 4 max(m, 1) (a bug)
    """
    m = k.m
    if m == 0:
        solutions = [IndexTwoSolution(k=k, prefix=(0, 1))]
    elif m == 1:
        solutions = [IndexTwoSolution(k=k, prefix=(0, 1))]
    else:
        matrix, rhs = system_matrix(k)
        solutions = sorted(
            (IndexTwoSolution(k=k, prefix=(0, *x)) for x in solve_gf2(matrix, rhs)),
            key=lambda s: s.prefix,
        )
    guard = 4 * max(m, 1)
    for sol in solutions:
        if not residual_ok(k, sol, guard):
            logger.error(f"Solution {sol.prefix} of k={k} fails the residual guard")
            raise ResidualMismatch(f"k={k}: solution {sol.prefix} fails rows <= {guard}")
    return solutions


# ======================
# === Palindromes ===
# ======================

def palindrome_condition(k: KVector) -> bool:
    """K(x) has no palindrome factor, or exactly the single palindrome factor x + 1."""
    if k.m < 2:
        raise OrderTooSmall(f"the palindrome condition needs m >= 2, got {k.m}")
    h, _ = max_self_reciprocal_factor(k.polynomial())
    return h.codes in ((1,), (1, 1))


# ===================
# === Enumeration ===
# ===================

def candidate_vectors(m: int) -> Iterator[KVector]:
    """All 2^(m-1) vectors with k_0 = k_m = 1, ascending integer value."""
    if m < 2:
        raise OrderTooSmall(f"index-2 enumeration needs m >= 2, got {m}")
    for middle in range(1 << (m - 1)):
        inner = format(middle, f"0{m - 1}b")
        yield KVector.from_bitstring(f"1{inner}1")


def _scan_chunk(m: int, start: int, stop: int) -> list[tuple[KVector, list[IndexTwoSolution]]]:
    out = []
    for middle in range(start, stop):
        k = KVector.from_bitstring(f"1{format(middle, f'0{m - 1}b')}1")
        solutions = solve_index2(k)
        if solutions:
            out.append((k, solutions))
    return out


def scan_index2(m: int, workers: int = 1) -> list[tuple[KVector, list[IndexTwoSolution]]]:
    """Solvable vectors of order m with their solutions, ascending k."""
    if m < 2:
        raise OrderTooSmall(f"index-2 enumeration needs m >= 2, got {m}")
    total = 1 << (m - 1)
    if workers <= 1 or total < 256:
        return _scan_chunk(m, 0, total)
    step = -(-total // workers)
    bounds = [(start, min(start + step, total)) for start in range(0, total, step)]
    with ProcessPoolExecutor(max_workers=workers) as executor:
        chunks = executor.map(_scan_chunk, [m] * len(bounds), *zip(*bounds))
        return [item for chunk in chunks for item in chunk]


def count_index2(m: int, workers: int = 1) -> tuple[int, list[KVector]]:
    """Number of vectors with k_0 = k_m = 1 whose system is solvable, and the vectors."""
    admissible = [k for k, _ in scan_index2(m, workers)]
    logger.info(f"m={m}: {len(admissible)} solvable index-2 systems")
    return len(admissible), admissible


# ===================
# === Periodicity ===
# ===================

def _cycle(sol: IndexTwoSolution) -> tuple[int, int]:
    """(preperiod, minimal period) of a_0, a_1, ... by cycle detection on states."""
    bits, m = sol.k.bits, sol.k.m
    width = max(m, 1)
    start = max(m, 1) + 1 - width
    a = sol.sequence(start + width)
    seen: dict[tuple[int, ...], int] = {}
    s = start
    while True:
        state = tuple(a[s:s + width])
        if state in seen:
            mu, rho = seen[state], s - seen[state]
            break
        seen[state] = s
        i = s + width
        a.append(sum(bits[j] & a[i - j] for j in range(1, m + 1)) & 1)
        s += 1
    # walk the preperiod back as far as the sequence allows
    while mu > 0 and a[mu - 1] == a[mu - 1 + rho]:
        mu -= 1
    return mu, rho


def _purely_periodic(sol: IndexTwoSolution, offset: int, preperiod: int, period: int) -> bool:
    """Is s_t = a_{|t - offset|} purely periodic with the given period?"""
    horizon = max(offset, 0) + preperiod + period + 1
    a = sol.sequence(horizon + period + abs(offset) + 1)
    return all(
        a[abs(t - offset)] == a[abs(t + period - offset)]
        for t in range(horizon)
    )


def periodicity_report(k: KVector, sol: IndexTwoSolution) -> PeriodicityReport:
    """
    Period of the forward tail and whether
    S1 = a_{m-1}, ..., a_1, a_0, a_1, ... and S2 = a_{m-2}, ..., a_0, a_1, ...
    are purely periodic.
    """
    if sol.k != k:
        raise BadRange(f"solution belongs to k={sol.k}, not k={k}")
    preperiod, period = _cycle(sol)
    m = k.m
    return PeriodicityReport(
        k=k.to_bitstring(),
        period=period,
        preperiod=preperiod,
        s1_purely_periodic=_purely_periodic(sol, m - 1, preperiod, period),
        s2_purely_periodic=_purely_periodic(sol, m - 2, preperiod, period),
    )


def coincides_with_special_case(sol: IndexTwoSolution) -> str | None:
    """'case1' (0100...) or 'case2' (0111...) if sol is that sequence, else None."""
    preperiod, period = _cycle(sol)
    length = max(preperiod, 2) + period
    a = sol.sequence(length)
    if a == [0, 1] + [0] * (length - 2):
        return "case1"
    if a == [0] + [1] * (length - 1):
        return "case2"
    return None


def index2_census(m_min: int, m_max: int, workers: int = 1) -> list[Index2CountRow]:
    """Per-m count against the expected number, uniqueness, condition equivalence and periodicity."""
    if m_min < 2:
        raise OrderTooSmall(f"index-2 census needs m >= 2, got {m_min}")
    rows = []
    for m in range(m_min, m_max + 1):
        scanned = scan_index2(m, workers)
        admissible = {k for k, _ in scanned}
        by_condition = {k for k in candidate_vectors(m) if palindrome_condition(k)}
        periodicity_ok = None
        if m <= PERIODICITY_CHECK_LIMIT:
            reports = [periodicity_report(k, sols[0]) for k, sols in scanned]
            periodicity_ok = all(r.s2_purely_periodic and not r.s1_purely_periodic for r in reports)
        expected = expected_index2_count(m)
        row = Index2CountRow(
            m=m,
            count=len(admissible),
            expected=expected,
            matches=len(admissible) == expected,
            unique=all(len(sols) == 1 for _, sols in scanned),
            condition_equivalent=admissible == by_condition,
            periodicity_ok=periodicity_ok,
        )
        if not (row.matches and row.unique and row.condition_equivalent and periodicity_ok is not False):
            logger.warning(f"Index-2 census mismatch at m={m}: {row.model_dump()}")
        rows.append(row)
    return rows
