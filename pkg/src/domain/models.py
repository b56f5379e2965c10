from enum import Enum
from typing import Any

from pydantic import BaseModel, ConfigDict, Field

from src.domain.polynomial import Polynomial


# ======================
# === Self-reciprocal ===
# ======================

class SelfAssocTag(str, Enum):
    STRICT = "StrictPalindrome"
    ANTI = "AntiPalindrome"
    PAIRED = "Paired"


class SelfAssocClass(BaseModel):
    """How a monic irreducible relates to its own reciprocal."""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    tag: SelfAssocTag
    partner: Polynomial | None = Field(
        None,
        description="Monic reciprocal of the factor (Paired only)."
    )


class ClassBreakdownEntry(BaseModel):
    factor: str
    multiplicity: int = Field(..., ge=1)
    tag: SelfAssocTag
    partner: str | None = None
    kept: int = Field(..., ge=0, description="Exponent kept in the maximal self-reciprocal factor.")


class RecipReport(BaseModel):
    field: str
    input: str
    reciprocal: str
    self_reciprocal: bool
    factorization: list[tuple[str, int]]
    all_factors_irreducible: bool
    max_factor: str
    max_factor_degree: int
    cofactor: str
    class_breakdown: list[ClassBreakdownEntry] = Field(default_factory=list)


# ==============
# === Census ===
# ==============

class CensusRow(BaseModel):
    """Number of degree-n polynomials whose maximal self-reciprocal factor has degree j."""
    q: int = Field(..., ge=2)
    n: int = Field(..., ge=0)
    j: int = Field(..., ge=0)
    count: int = Field(..., ge=0)


class NComparison(BaseModel):
    """Closed form against brute force for one degree n."""
    n: int
    t: int
    z_closed: int
    z_brute: int
    pr_conv: int
    pr_closed: int
    pr_brute: int
    p_closed: dict[int, int]
    p_brute: dict[int, int]
    z_ok: bool
    pr_ok: bool
    p_ok: bool
    sum_ok: bool
    lemma2_ok: bool | None = Field(None, description="t - pr = z(n) + z(n-1); n >= 2 only.")

    @property
    def passed(self) -> bool:
        return self.z_ok and self.pr_ok and self.p_ok and self.sum_ok and self.lemma2_ok is not False


class IdentityCheck(BaseModel):
    name: str
    passed: bool
    detail: str = ""


class VerificationReport(BaseModel):
    field: str
    q: int
    n_max: int
    strategy: str
    rows: list[NComparison] = Field(default_factory=list)
    identities: list[IdentityCheck] = Field(default_factory=list)
    passed: bool
    elapsed_seconds: float = Field(..., ge=0)
    counterexample: str | None = Field(
        None,
        description="First polynomial on which the self-reciprocal computations disagree."
    )


# ==============
# === Index 2 ===
# ==============

class PeriodicityReport(BaseModel):
    k: str
    period: int = Field(..., ge=1)
    preperiod: int = Field(..., ge=0, description="Preperiod of a_0, a_1, ...")
    s1_purely_periodic: bool
    s2_purely_periodic: bool


class Index2SolutionRecord(BaseModel):
    k: str
    prefix: list[int]
    period: int
    purely_periodic: dict[str, bool]
    special_case: str | None = Field(
        None,
        description="'case1' or 'case2' when the solution equals that special sequence."
    )


class Index2CountRow(BaseModel):
    m: int
    count: int
    expected: int
    matches: bool
    unique: bool
    condition_equivalent: bool
    periodicity_ok: bool | None = None


# ===========
# === CLI ===
# ===========

class CensusStrategy(str, Enum):
    FACTOR = "factor"
    GCD = "gcd"


class OutputFormat(str, Enum):
    TABLE = "table"
    JSON = "json"
    CSV = "csv"


class RunConfig(BaseModel):
    """The parsed command line, echoed into every machine report."""
    command: str
    field: str | None = None
    n: int | None = None
    n_max: int | None = None
    m: int | None = None
    m_max: int | None = None
    k: str | None = None
    poly: str | None = None
    brute: bool = False
    samples: int | None = None
    format: OutputFormat = OutputFormat.TABLE
    out: str | None = None
    budget: int
    seed: int
    workers: int = 1
    strategy: CensusStrategy = CensusStrategy.GCD


class CommandReport(BaseModel):
    """What a command produced; formatters render it as table, JSON or CSV."""
    config: RunConfig
    title: str
    columns: list[str] = Field(default_factory=list)
    rows: list[dict[str, Any]] = Field(default_factory=list)
    summary: dict[str, Any] = Field(default_factory=dict)
    details: dict[str, Any] = Field(default_factory=dict)
    passed: bool | None = None
