import pytest
from pydantic import ValidationError

from src.app.config import AppConfig
from src.domain.models import CensusStrategy


class TestAppConfig:
    def test_defaults(self, monkeypatch):
        monkeypatch.delenv("SELFRECIP_LOG_LEVEL", raising=False)
        monkeypatch.delenv("SELFRECIP_CENSUS_STRATEGY", raising=False)
        settings = AppConfig(_env_file=None)
        assert settings.log_level == "WARNING"
        assert settings.census_strategy == CensusStrategy.GCD

    def test_log_level_is_normalised(self, monkeypatch):
        monkeypatch.setenv("SELFRECIP_LOG_LEVEL", "debug")
        assert AppConfig(_env_file=None).log_level == "DEBUG"

    @pytest.mark.parametrize("level", ["LOUD", "", "5"])
    def test_unknown_log_level(self, monkeypatch, level):
        monkeypatch.setenv("SELFRECIP_LOG_LEVEL", level)
        with pytest.raises(ValidationError):
            AppConfig(_env_file=None)
