"""Unit tests for settings and tolerance profiles."""

import pytest
from pydantic import ValidationError

from weyl_forge.core.config import DEFAULT_TOLERANCES, ToleranceProfile, get_settings


class TestToleranceProfile:
    """Test tolerance defaults and validation."""

    def test_defaults(self) -> None:
        """Test the documented default values."""
        tol = ToleranceProfile()
        assert tol.eq_tol == 1e-9
        assert tol.zero_tol == 1e-8
        assert tol.spectrum_tol == 1e-6
        assert tol.decomp_tol == 1e-9
        assert tol.max_sweeps == 50

    def test_frozen(self) -> None:
        """Test profiles cannot be mutated."""
        with pytest.raises(ValidationError):
            DEFAULT_TOLERANCES.eq_tol = 1.0  # type: ignore[misc]

    def test_rejects_nonpositive(self) -> None:
        """Test tolerances must be positive."""
        with pytest.raises(ValidationError):
            ToleranceProfile(zero_tol=0.0)
        with pytest.raises(ValidationError):
            ToleranceProfile(max_sweeps=0)


class TestSettings:
    """Test environment-driven settings."""

    def test_defaults(self, monkeypatch: pytest.MonkeyPatch) -> None:
        """Test settings without environment overrides."""
        monkeypatch.delenv("WEYL_FORGE_SEED", raising=False)
        settings = get_settings()
        assert settings.seed == 0
        assert settings.log_level == "WARNING"
        assert settings.tolerances == DEFAULT_TOLERANCES

    def test_seed_from_env(self, monkeypatch: pytest.MonkeyPatch) -> None:
        """Test WEYL_FORGE_SEED sets the default seed."""
        monkeypatch.setenv("WEYL_FORGE_SEED", "42")
        assert get_settings().seed == 42

    def test_nested_tolerance(self, monkeypatch: pytest.MonkeyPatch) -> None:
        """Test nested tolerance overrides through the delimiter."""
        monkeypatch.setenv("WEYL_FORGE_TOLERANCES__SPECTRUM_TOL", "1e-4")
        tol = get_settings().tolerances
        assert tol.spectrum_tol == 1e-4
        assert tol.eq_tol == DEFAULT_TOLERANCES.eq_tol

    def test_invalid_log_level(self, monkeypatch: pytest.MonkeyPatch) -> None:
        """Test an unknown log level is rejected."""
        monkeypatch.setenv("WEYL_FORGE_LOG_LEVEL", "VERBOSE")
        with pytest.raises(ValidationError):
            get_settings()

    def test_cached(self) -> None:
        """Test repeated calls return the same instance."""
        assert get_settings() is get_settings()
