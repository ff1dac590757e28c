"""Core configuration for anyon-compiler."""

from __future__ import annotations

from pathlib import Path
from typing import Any

import yaml
from dotenv import dotenv_values
from pydantic import BaseModel, ConfigDict, Field, ValidationError
from pydantic_settings import BaseSettings, SettingsConfigDict

from anyon_compiler.exceptions import UsageError
from anyon_compiler.models import SearchConfig
from anyon_compiler.search.exhaustive import DEFAULT_MAX_CANDIDATES, DEFAULT_SUFFIX_LENGTH

YAML_SUFFIXES = (".yaml", ".yml")


class ExhaustiveConfig(BaseModel):
    """Budget and batching for exhaustive enumeration."""

    max_candidates: int = Field(default=DEFAULT_MAX_CANDIDATES, ge=1)
    suffix_length: int = Field(default=DEFAULT_SUFFIX_LENGTH, ge=1)


class SweepDefaults(BaseModel):
    """Length at which sweeps switch from exhaustive search to GA."""

    threshold_no_inverses: int = Field(default=13, ge=0)
    threshold_with_inverses: int = Field(default=7, ge=0)


class OutputConfig(BaseModel):
    """Where and how results are written."""

    results_dir: str = "results"
    precision: int = Field(default=8, ge=1, le=17)


class LoggingConfig(BaseModel):
    level: str | None = None
    json_logs: bool = Field(default=False, alias="json")

    model_config = ConfigDict(populate_by_name=True)


class CompilerConfig(BaseModel):
    """Main anyon-compiler configuration."""

    version: str = "1.0"
    search: SearchConfig = Field(default_factory=SearchConfig)
    exhaustive: ExhaustiveConfig = Field(default_factory=ExhaustiveConfig)
    sweep: SweepDefaults = Field(default_factory=SweepDefaults)
    output: OutputConfig = Field(default_factory=OutputConfig)
    logging: LoggingConfig = Field(default_factory=LoggingConfig)

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> CompilerConfig:
        """Build from a mapping; bare SearchConfig keys go to ``search``."""
        data = dict(data)
        search_keys = set(SearchConfig.model_fields)
        flat = {key: data.pop(key) for key in list(data) if key in search_keys}
        if flat:
            data["search"] = {**data.get("search", {}), **flat}
        try:
            return cls(**data)
        except ValidationError as e:
            raise UsageError(f"invalid configuration: {e}", details={"error_count": e.error_count()}) from e

    @classmethod
    def from_file(cls, path: str | Path) -> CompilerConfig:
        """Load configuration from a YAML file, or a ``key=value`` file for any other suffix."""
        path = Path(path)
        if not path.exists():
            return cls()
        if path.suffix.lower() not in YAML_SUFFIXES:
            return cls.from_key_values(path)

        with open(path) as f:
            data = yaml.safe_load(f) or {}

        if not isinstance(data, dict):
            raise UsageError(f"config file {path} must hold a mapping")
        return cls.from_dict(data)

    @classmethod
    def from_key_values(cls, path: str | Path) -> CompilerConfig:
        """Load ``key=value`` lines; keys are ``section.field`` or bare SearchConfig fields.

        Blank lines and ``#`` comments are ignored; values are validated like
        CLI overrides.
        """
        values = dotenv_values(path, interpolate=False)
        missing = [key for key, value in values.items() if value is None]
        if missing:
            raise UsageError(f"config file {path} has keys without a value: {', '.join(missing)}")
        return cls().with_overrides(dict(values))

    def to_file(self, path: str | Path) -> None:
        """Save configuration to a YAML file."""
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)

        with open(path, "w") as f:
            yaml.dump(self.model_dump(by_alias=True), f, default_flow_style=False, sort_keys=False)

    def with_overrides(self, overrides: dict[str, Any]) -> CompilerConfig:
        """Apply ``section.key`` or bare SearchConfig keys; None values are skipped."""
        data = self.model_dump(by_alias=True)
        for key, value in overrides.items():
            if value is None:
                continue
            section, _, field = key.rpartition(".")
            if not section:
                if field not in SearchConfig.model_fields:
                    raise UsageError(f"unknown config key {key!r}")
                section = "search"
            if section not in data or field not in data[section]:
                raise UsageError(f"unknown config key {key!r}")
            data[section][field] = value
        return CompilerConfig.from_dict(data)


class CompilerSettings(BaseSettings):
    """Environment-based settings for anyon-compiler."""

    model_config = SettingsConfigDict(env_prefix="", case_sensitive=False)

    anyon_compiler_config_path: str = "anyon-compiler.yaml"
    anyon_compiler_log_level: str = "INFO"
    anyon_compiler_threads: int = 0
