from typing import Literal

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

from src.domain.models import CensusStrategy, OutputFormat


class AppConfig(BaseSettings):
    """
    Application configuration settings.

    Loads from SELFRECIP_* environment variables or a .env file; command-line
    flags override both.
    Priority: flags > environment variables > .env file > default values
    """
    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        env_prefix="SELFRECIP_",
        case_sensitive=False,
        extra="ignore"
    )

    # Brute-force limits
    work_budget: int = Field(
        default=2_000_000,
        ge=1,
        description="Maximum number of polynomials enumerated per (q, n) census"
    )

    workers: int = Field(
        default=1,
        ge=1,
        description="Worker processes for census and index-2 enumeration"
    )

    census_strategy: CensusStrategy = Field(
        default=CensusStrategy.GCD,
        description="How the census finds the maximal self-reciprocal factor: gcd or factor"
    )

    # Sampling
    seed: int = Field(
        default=20100611,
        description="Default seed for sampled oracle checks"
    )

    # Output
    output_format: OutputFormat = Field(
        default=OutputFormat.TABLE,
        description="table, json or csv"
    )

    log_level: Literal["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"] = Field(
        default="WARNING",
        description="Logging level name"
    )

    @field_validator("log_level", mode="before")
    @classmethod
    def _upper_level(cls, value: object) -> object:
        return value.upper() if isinstance(value, str) else value


# Create a singleton instance
config = AppConfig()
