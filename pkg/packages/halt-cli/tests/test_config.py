"""Tests for ExperimentConfig."""
import pytest

from halt.sweep import SweepConfig
from halt_cli.config import ExperimentConfig
from halt_universal.universal import PHI_PULLBACK, UniversalSpecError


class TestExperimentConfig:
    """Test ExperimentConfig defaults and validation."""

    def test_defaults(self):
        config = ExperimentConfig()
        assert config.universal == "base_v"
        assert config.fmt == "csv"
        assert config.seed is None
        assert config.output_path is None
        assert config.sweep == SweepConfig()

    def test_frozen(self):
        config = ExperimentConfig()
        with pytest.raises(AttributeError):
            config.n = 5  # type: ignore[misc]

    @pytest.mark.parametrize("field, value", [("n", 0), ("budget", 0), ("fmt", "xml")])
    def test_validation(self, field, value):
        with pytest.raises(ValueError):
            ExperimentConfig(**{field: value})

    def test_spec(self):
        assert ExperimentConfig(universal="phi_pullback").spec() == PHI_PULLBACK

    def test_unknown_universal(self):
        with pytest.raises(UniversalSpecError):
            ExperimentConfig(universal="nope").spec()
