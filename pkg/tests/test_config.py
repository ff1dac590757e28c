"""Tests for anyon-compiler configuration."""

from pathlib import Path
from tempfile import TemporaryDirectory

import pytest

from anyon_compiler.core.config import CompilerConfig, CompilerSettings
from anyon_compiler.exceptions import UsageError
from anyon_compiler.models import SearchConfig
from anyon_compiler.search import DEFAULT_MAX_CANDIDATES


class TestCompilerConfig:
    """Tests for CompilerConfig."""

    def test_default_config(self):
        """Test default configuration values."""
        config = CompilerConfig()

        assert config.version == "1.0"
        assert config.search.population_size == 1000
        assert config.exhaustive.max_candidates == DEFAULT_MAX_CANDIDATES
        assert config.sweep.threshold_no_inverses == 13
        assert config.sweep.threshold_with_inverses == 7
        assert config.output.precision == 8
        assert config.logging.level is None

    def test_config_from_file(self):
        """Test loading configuration from file."""
        with TemporaryDirectory() as tmpdir:
            config_path = Path(tmpdir) / "anyon-compiler.yaml"
            config_path.write_text(
                """
search:
  population_size: 300
  survivors: 50
exhaustive:
  max_candidates: 1000000
logging:
  json: true
"""
            )

            config = CompilerConfig.from_file(config_path)
            assert config.search.population_size == 300
            assert config.search.survivors == 50
            assert config.exhaustive.max_candidates == 1_000_000
            assert config.logging.json_logs is True

    def test_bare_search_keys(self):
        """Test SearchConfig fields may sit at the top level."""
        config = CompilerConfig.from_dict({"generations": 12, "rng_seed": 9})
        assert config.search.generations == 12
        assert config.search.rng_seed == 9

    def test_config_round_trip(self):
        """Test saving and loading keeps every value."""
        with TemporaryDirectory() as tmpdir:
            config_path = Path(tmpdir) / "nested" / "config.yaml"
            config = CompilerConfig.from_dict({"mutation_prob": 0.1, "output": {"precision": 6}})
            config.to_file(config_path)

            assert config_path.exists()
            assert CompilerConfig.from_file(config_path) == config

    def test_config_from_nonexistent_file(self):
        """Test loading from nonexistent file returns default config."""
        config = CompilerConfig.from_file("/nonexistent/path/config.yaml")
        assert config == CompilerConfig()

    def test_invalid_values(self):
        """Test invalid values become usage errors."""
        with pytest.raises(UsageError):
            CompilerConfig.from_dict({"search": {"population_size": 0}})

    def test_non_mapping_file(self):
        """Test a YAML list is refused."""
        with TemporaryDirectory() as tmpdir:
            config_path = Path(tmpdir) / "config.yaml"
            config_path.write_text("- 1\n- 2\n")
            with pytest.raises(UsageError):
                CompilerConfig.from_file(config_path)


class TestKeyValueFiles:
    """Tests for plain-text key=value configuration files."""

    def test_key_value_file(self, tmp_path):
        """Test bare and dotted keys load from a key=value file."""
        config_path = tmp_path / "anyon-compiler.conf"
        config_path.write_text(
            "# GA settings\n"
            "population_size=300\n"
            "survivors = 50\n"
            "search.mutation_prob=0.1\n"
            "\n"
            "exhaustive.max_candidates=1000000\n"
            "logging.level=DEBUG\n"
            "logging.json=true\n"
        )
        config = CompilerConfig.from_file(config_path)
        assert config.search.population_size == 300
        assert config.search.survivors == 50
        assert config.search.mutation_prob == pytest.approx(0.1)
        assert config.exhaustive.max_candidates == 1_000_000
        assert config.logging.level == "DEBUG"
        assert config.logging.json_logs is True

    def test_every_search_field_exposed(self, tmp_path):
        """Test each SearchConfig field can be set from a key=value file."""
        defaults = CompilerConfig().search
        lines = [f"{name}={getattr(defaults, name)}" for name in SearchConfig.model_fields]
        config_path = tmp_path / "search.txt"
        config_path.write_text("\n".join(lines) + "\n")
        assert CompilerConfig.from_file(config_path).search == defaults

    def test_unknown_key(self, tmp_path):
        """Test unknown keys are usage errors."""
        config_path = tmp_path / "bad.conf"
        config_path.write_text("colour=red\n")
        with pytest.raises(UsageError):
            CompilerConfig.from_file(config_path)

    def test_key_without_value(self, tmp_path):
        """Test a bare key is a usage error."""
        config_path = tmp_path / "bad.conf"
        config_path.write_text("generations\n")
        with pytest.raises(UsageError):
            CompilerConfig.from_file(config_path)

    def test_invalid_value(self, tmp_path):
        """Test values are validated."""
        config_path = tmp_path / "bad.conf"
        config_path.write_text("population_size=zero\n")
        with pytest.raises(UsageError):
            CompilerConfig.from_file(config_path)


class TestOverrides:
    """Tests for CompilerConfig.with_overrides."""

    def test_flag_overrides(self):
        """Test CLI-style overrides replace file values and skip None."""
        config = CompilerConfig.from_dict({"generations": 50})
        updated = config.with_overrides({"generations": 5, "rng_seed": None, "exhaustive.suffix_length": 4})
        assert updated.search.generations == 5
        assert updated.search.rng_seed == 0
        assert updated.exhaustive.suffix_length == 4
        assert config.search.generations == 50

    def test_unknown_key(self):
        """Test unknown keys are usage errors."""
        with pytest.raises(UsageError):
            CompilerConfig().with_overrides({"colour": 1})
        with pytest.raises(UsageError):
            CompilerConfig().with_overrides({"output.colour": 1})

    def test_invalid_override(self):
        """Test overrides are validated."""
        with pytest.raises(UsageError):
            CompilerConfig().with_overrides({"survivors": 5000})


class TestCompilerSettings:
    """Tests for environment settings."""

    def test_defaults(self, monkeypatch):
        """Test defaults without environment variables."""
        monkeypatch.delenv("ANYON_COMPILER_CONFIG_PATH", raising=False)
        monkeypatch.delenv("ANYON_COMPILER_THREADS", raising=False)
        settings = CompilerSettings()
        assert settings.anyon_compiler_config_path == "anyon-compiler.yaml"
        assert settings.anyon_compiler_threads == 0

    def test_environment(self, monkeypatch):
        """Test environment variables override defaults."""
        monkeypatch.setenv("ANYON_COMPILER_CONFIG_PATH", "/tmp/other.yaml")
        monkeypatch.setenv("ANYON_COMPILER_LOG_LEVEL", "DEBUG")
        settings = CompilerSettings()
        assert settings.anyon_compiler_config_path == "/tmp/other.yaml"
        assert settings.anyon_compiler_log_level == "DEBUG"
